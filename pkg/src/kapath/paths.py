"""Lattice paths with up steps (1, k), down steps (1, -1) and horizontal
steps (a, 0).

A path is stored as its word over ``U``, ``D``, ``H``. Every x-coordinate
reported here is a true coordinate: ``U`` and ``D`` advance by 1, ``H`` by
``a``. Points are step endpoints; the start ``(0, 0)`` only enters queries
as the ``x0`` sentinel.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import NamedTuple, Optional

INFINITY = math.inf


class PathError(ValueError):
    """Base class for malformed path input."""


class IllegalCharacter(PathError):
    def __init__(self, position: int, char: str):
        super().__init__(f"illegal step letter {char!r} at position {position}")
        self.position = position
        self.char = char


class HorizontalForbidden(PathError):
    def __init__(self, position: int):
        super().__init__(f"horizontal step at position {position} but a = inf")
        self.position = position


class NoPointsRight(PathError):
    pass


class StepKind(str, enum.Enum):
    UP = "U"
    DOWN = "D"
    HORIZONTAL = "H"


@dataclass(frozen=True)
class PathParams:
    """Step-set parameters. ``a = INFINITY`` forbids horizontal steps."""

    k: int
    a: float | int = 1

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if self.a != INFINITY and (not isinstance(self.a, int) or self.a < 1):
            raise ValueError(f"a must be a positive integer or inf, got {self.a!r}")

    @property
    def a_is_finite(self) -> bool:
        return self.a != INFINITY

    def format_a(self) -> str:
        return str(self.a) if self.a_is_finite else "inf"

    @classmethod
    def parse(cls, k, a) -> "PathParams":
        """Build params from loosely typed input; ``a`` may be ``"inf"``."""
        if isinstance(a, str):
            a = INFINITY if a.strip().lower() in ("inf", "infinity", "∞") else int(a)
        return cls(int(k), a)


class Hump(NamedTuple):
    up_index: int
    run: int
    down_index: int

    @property
    def is_peak(self) -> bool:
        return self.run == 0


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class LatticePath:
    params: PathParams
    word: str

    def __post_init__(self):
        for i, ch in enumerate(self.word):
            if ch not in "UDH":
                raise IllegalCharacter(i, ch)
            if ch == "H" and not self.params.a_is_finite:
                raise HorizontalForbidden(i)

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def a(self):
        return self.params.a

    @property
    def steps(self) -> tuple[StepKind, ...]:
        return tuple(StepKind(ch) for ch in self.word)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        k = self.params.k
        rise = {"U": k, "D": -1, "H": 0}
        return tuple(accumulate(rise[ch] for ch in self.word))

    @cached_property
    def xs(self) -> tuple[int, ...]:
        """x-coordinate of the endpoint of each step."""
        a = self.params.a
        return tuple(accumulate(a if ch == "H" else 1 for ch in self.word))

    @property
    def order(self) -> int:
        return self.xs[-1] if self.word else 0

    @property
    def n_up(self) -> int:
        return self.word.count("U")

    @property
    def n_down(self) -> int:
        return self.word.count("D")

    @property
    def n_horizontal(self) -> int:
        return self.word.count("H")

    @property
    def is_closed(self) -> bool:
        return self.n_down == self.params.k * self.n_up

    def start_height(self, i: int) -> int:
        return self.heights[i - 1] if i > 0 else 0

    def start_x(self, i: int) -> int:
        return self.xs[i - 1] if i > 0 else 0

    def point(self, i: int) -> LatticePoint:
        """Endpoint of step ``i``; ``i = -1`` gives the origin."""
        if i < 0:
            return LatticePoint(0, 0)
        return LatticePoint(self.xs[i], self.heights[i])

    def to_json(self) -> dict:
        p = self.params
        return {"k": p.k, "a": p.a if p.a_is_finite else "inf", "word": self.word}

    @classmethod
    def from_json(cls, obj: dict) -> "LatticePath":
        return parse_path(obj["word"], PathParams.parse(obj["k"], obj["a"]))


def parse_path(word: str, params: PathParams) -> LatticePath:
    return LatticePath(params, word)


def height_profile(path: LatticePath) -> list[int]:
    return list(path.heights)


def is_nonnegative(path: LatticePath) -> bool:
    return min(path.heights, default=0) >= 0


def reverse_path(path: LatticePath) -> LatticePath:
    return LatticePath(path.params, path.word[::-1])


_HUMP = re.compile(r"UH*D")


def humps(path: LatticePath) -> list[Hump]:
    """Every ``U H^r D`` factor of the word, ordered by the position of ``U``."""
    # humps never overlap: the closing D cannot open another hump
    return [
        Hump(m.start(), m.end() - m.start() - 2, m.end() - 1)
        for m in _HUMP.finditer(path.word)
    ]


def is_hump_of(hump: Hump, path: LatticePath) -> bool:
    i, r, j = hump
    w = path.word
    return (
        0 <= i
        and j == i + r + 1
        and j < len(w)
        and w[i] == "U"
        and w[j] == "D"
        and w[i + 1:j] == "H" * r
    )


def peaks(path: LatticePath) -> list[Hump]:
    return [h for h in humps(path) if h.run == 0]


def leftmost_crossing_up(path: LatticePath) -> Optional[int]:
    """Index of the leftmost up step starting at height <= 0 and ending >= 0."""
    y = 0
    for i, (ch, end) in enumerate(zip(path.word, path.heights)):
        if ch == "U" and y <= 0 <= end:
            return i
        y = end
    return None


def first_return_after(path: LatticePath, x0: int) -> Optional[LatticePoint]:
    for x, y in zip(path.xs, path.heights):
        if x > x0 and y == 0:
            return LatticePoint(x, y)
    return None


def rightmost_lowest_after(path: LatticePath, x0: int) -> LatticePoint:
    best = None
    for x, y in zip(path.xs, path.heights):
        if x > x0 and (best is None or y <= best.y):
            best = LatticePoint(x, y)
    if best is None:
        raise NoPointsRight(f"no step endpoint to the right of x = {x0}")
    return best
