"""Exhaustive generators for the path families and exact closed-form counters.

Generators walk the words depth first in the fixed letter order
``U < D < H``, so every stream comes out in lexicographic order. A branch is
cut as soon as the remaining width can no longer bring the path back to
height 0 (and, for nonnegative paths, as soon as it dips below the axis).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, NamedTuple

from .paths import (
    INFINITY,
    Hump,
    LatticePath,
    PathParams,
    humps,
    is_hump_of,
    is_nonnegative,
    peaks,
)


class NonIntegerResult(ArithmeticError):
    pass


class MalformedColoredPath(ValueError):
    pass


class Restriction(enum.Enum):
    S_PRIME = "s_prime"  # at least one up step
    S_DPRIME = "s_dprime"  # first step exists and is not horizontal


class Mode(enum.Enum):
    HUMP = "hump"
    PEAK = "peak"


class StepComposition(NamedTuple):
    u: int
    h: int

    def n_down(self, k: int) -> int:
        return k * self.u


@dataclass(frozen=True)
class ColoredHumpPath:
    """A closed nonnegative path with one hump painted in color 1..k+1."""

    path: LatticePath
    hump: Hump
    color: int

    def __post_init__(self):
        if not is_hump_of(self.hump, self.path):
            raise MalformedColoredPath(f"{self.hump} is not a hump of {self.path.word}")
        if not 1 <= self.color <= self.path.params.k + 1:
            raise MalformedColoredPath(
                f"color {self.color} outside 1..{self.path.params.k + 1}"
            )
        if not (self.path.is_closed and is_nonnegative(self.path)):
            raise MalformedColoredPath(f"{self.path.word} is not a closed nonnegative path")

    @classmethod
    def at(cls, path: LatticePath, up_index: int, color: int) -> "ColoredHumpPath":
        """Color the hump whose up step sits at ``up_index``."""
        for h in humps(path):
            if h.up_index == up_index:
                return cls(path, h, color)
        raise MalformedColoredPath(f"no hump starts at index {up_index} of {path.word}")

    def to_json(self) -> dict:
        return {
            "path": self.path.to_json(),
            "hump_up_index": self.hump.up_index,
            "color": self.color,
        }


def compositions(n: int, params: PathParams) -> list[StepComposition]:
    """All (u, h) with u(k+1) + a*h = n."""
    if n < 0:
        return []
    k1 = params.k + 1
    out = []
    for u in range(n // k1 + 1):
        rest = n - u * k1
        if not params.a_is_finite:
            if rest == 0:
                out.append(StepComposition(u, 0))
        elif rest % params.a == 0:
            out.append(StepComposition(u, rest // params.a))
    return out


def _finisher(params: PathParams):
    """``can_finish(w, y)``: can width ``w`` bring height ``y`` back to 0?"""
    k, a = params.k, params.a

    @lru_cache(maxsize=None)
    def can_finish(w: int, y: int) -> bool:
        # the tail has u ups, k*u + y downs, h horizontals
        u_min = (-y + k - 1) // k if y < 0 else 0
        for u in range(u_min, w + 1):
            rest = w - u * (k + 1) - y
            if rest < 0:
                return False
            if rest == 0 or (params.a_is_finite and rest % a == 0):
                return True
        return False

    return can_finish


def _walk(n: int, params: PathParams, nonnegative: bool) -> Iterator[str]:
    if n < 0:
        return
    k, a = params.k, params.a
    letters = [("U", 1, k), ("D", 1, -1)]
    if params.a_is_finite:
        letters.append(("H", a, 0))
    can_finish = _finisher(params)
    word: list[str] = []

    def go(w: int, y: int):
        if w == 0:
            if y == 0:
                yield "".join(word)
            return
        for ch, dx, dy in letters:
            if dx > w:
                continue
            y2 = y + dy
            if nonnegative and y2 < 0:
                continue
            if not can_finish(w - dx, y2):
                continue
            word.append(ch)
            yield from go(w - dx, y2)
            word.pop()

    if can_finish(n, 0):
        yield from go(n, 0)


def enumerate_paths(n: int, params: PathParams) -> Iterator[LatticePath]:
    """Closed paths of order ``n`` that never go below the x-axis."""
    for w in _walk(n, params, nonnegative=True):
        yield LatticePath(params, w)


def enumerate_super(n: int, params: PathParams) -> Iterator[LatticePath]:
    """All closed paths of order ``n``, with no sign restriction."""
    for w in _walk(n, params, nonnegative=False):
        yield LatticePath(params, w)


def multinomial(*parts: int) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def count_super(n: int, params: PathParams) -> int:
    if n < 0:
        return 0
    k = params.k
    return sum(multinomial(c.u, k * c.u, c.h) for c in compositions(n, params))


def count_paths(n: int, params: PathParams) -> int:
    """Number of nonnegative closed paths of order ``n`` (dynamic programming)."""
    if n < 0:
        return 0
    k, a = params.k, params.a
    # table[x][y]: number of nonnegative prefixes ending at (x, y)
    top = n  # heights above n cannot come back down in time
    table = [[0] * (top + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for x in range(n + 1):
        row = table[x]
        for y, c in enumerate(row):
            if not c:
                continue
            if x + 1 <= n:
                if y + k <= top:
                    table[x + 1][y + k] += c
                if y >= 1:
                    table[x + 1][y - 1] += c
            if params.a_is_finite and x + a <= n:
                table[x + a][y] += c
    return table[n][0]


def delta_divides(n: int, params: PathParams) -> int:
    """1 when an all-horizontal path of order ``n`` exists, else 0."""
    if not params.a_is_finite:
        return int(n == 0)
    return int(n >= 0 and n % params.a == 0)


def _restriction_test(which: Restriction):
    if which is Restriction.S_PRIME:
        return lambda p: "U" in p.word
    # the empty path has no first step and stays out, keeping S'' inside S'
    return lambda p: p.word[:1] in ("U", "D")


def enumerate_restricted(
    n: int, params: PathParams, which: Restriction
) -> Iterator[LatticePath]:
    keep = _restriction_test(which)
    return (p for p in enumerate_super(n, params) if keep(p))


def enumerate_colored(
    n: int, params: PathParams, mode: Mode = Mode.HUMP
) -> Iterator[ColoredHumpPath]:
    pick = humps if mode is Mode.HUMP else peaks
    colors = range(1, params.k + 2)
    for path in enumerate_paths(n, params):
        for h in pick(path):
            for c in colors:
                yield ColoredHumpPath(path, h, c)


def total_statistic(n: int, params: PathParams, mode: Mode = Mode.HUMP) -> int:
    pick = humps if mode is Mode.HUMP else peaks
    return sum(len(pick(p)) for p in enumerate_paths(n, params))


# Counts of super k-ary words by number of up steps and peaks.


def count_suu(n: int, k: int, m: int) -> int:
    """Super k-ary paths with ``n`` ups and ``m`` peaks starting ``UU``."""
    return comb(n - 1, m) * comb(k * n - 1, m - 1)


def count_sud(n: int, k: int, m: int) -> int:
    """Super k-ary paths with ``n`` ups and ``m`` peaks starting ``UD``."""
    return comb(n - 1, m - 1) * comb(k * n - 1, m - 1)


def count_kary_peak_paths(n: int, k: int, m: int) -> int:
    """k-ary paths with ``n`` up steps and ``m`` peaks: C(n,m) C(kn,m-1) / n."""
    num = comb(n, m) * comb(k * n, m - 1)
    q, r = divmod(num, n)
    if r:
        raise NonIntegerResult(f"C({n},{m})*C({k * n},{m - 1}) not divisible by {n}")
    return q


def narayana(n: int, m: int) -> int:
    return comb(n, m) * comb(n, m - 1) // n


def kary_peak_census(n: int, k: int) -> dict[str, dict[int, int]]:
    """Brute-force peak census over all k-ary words with ``n`` ups.

    Returns counts keyed by peak number for three families: ``"paths"``
    (nonnegative), ``"uu"`` (super, starting ``UU``) and ``"ud"`` (super,
    starting ``UD``).
    """
    params = PathParams(k, INFINITY)
    census: dict[str, dict[int, int]] = {"paths": {}, "uu": {}, "ud": {}}
    for p in enumerate_super((k + 1) * n, params):
        w = p.word
        m = w.count("UD")
        if w.startswith("UU"):
            fam = census["uu"]
            fam[m] = fam.get(m, 0) + 1
        elif w.startswith("UD"):
            fam = census["ud"]
            fam[m] = fam.get(m, 0) + 1
        if min(p.heights, default=0) >= 0:
            fam = census["paths"]
            fam[m] = fam.get(m, 0) + 1
    return census
