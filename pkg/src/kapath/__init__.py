"""(k,a)-lattice paths: hump and peak statistics, super path counts, and the
bijection between (k+1)-hump-colored paths and super paths with an up step."""

from .bijection import (
    Case,
    NoUpStep,
    StructureViolation,
    decompose_colored,
    decompose_super,
    phi,
    psi,
)
from .enumeration import (
    ColoredHumpPath,
    MalformedColoredPath,
    Mode,
    NonIntegerResult,
    Restriction,
    StepComposition,
    compositions,
    count_kary_peak_paths,
    count_paths,
    count_sud,
    count_super,
    count_suu,
    delta_divides,
    enumerate_colored,
    enumerate_paths,
    enumerate_restricted,
    enumerate_super,
    narayana,
    total_statistic,
)
from .paths import (
    INFINITY,
    HorizontalForbidden,
    Hump,
    IllegalCharacter,
    LatticePath,
    LatticePoint,
    NoPointsRight,
    PathError,
    PathParams,
    StepKind,
    first_return_after,
    height_profile,
    humps,
    is_nonnegative,
    leftmost_crossing_up,
    parse_path,
    peaks,
    reverse_path,
    rightmost_lowest_after,
)

__version__ = "0.1.0"
