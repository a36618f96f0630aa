"""The worked (3, 2) example: a colored path and its image, transcribed from
the drawings point by point.

The colored path (order 38) reads, with the colored hump bracketed::

    UDDD UD UDDD UD [UHD] UDDDDDD UDDDD UDDDDD UDDD

Coloring that hump with color 2 sends it to the super path below, whose
leftmost axis-meeting up step runs from (7, -1) to (8, 2), with first return
A = (14, 0) and rightmost lowest point B = (30, -4).
"""

from .enumeration import ColoredHumpPath
from .paths import LatticePath, LatticePoint, PathParams

PARAMS = PathParams(3, 2)

COLORED_WORD = "UDDDUDUDDDUDUHDUDDDDDDUDDDDUDDDDDUDDD"
HUMP_UP_INDEX = 12
COLOR = 2

SUPER_WORD = "HDDDDUUUDDDDDDUDDDDUDDDDDUDDDUDUDDDUD"

QL_START = LatticePoint(7, -1)
QL_END = LatticePoint(8, 2)
POINT_A = LatticePoint(14, 0)
POINT_B = LatticePoint(30, -4)


def colored_path() -> ColoredHumpPath:
    return ColoredHumpPath.at(LatticePath(PARAMS, COLORED_WORD), HUMP_UP_INDEX, COLOR)


def super_path() -> LatticePath:
    return LatticePath(PARAMS, SUPER_WORD)
