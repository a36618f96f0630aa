"""The bijection ``phi`` from (k+1)-hump-colored paths to super paths with an
up step, and its inverse ``psi``.

Both directions go through a unique factorization of the input word. The
factors are kept as ``(start, stop)`` index ranges into the input word and
only spliced into strings when the output is assembled.

Colored path side::

    R_1 P' p_l H^run d_1 R_2 d_2 ... R_k d_k P''

Super path side, with ``q_l`` the leftmost up step meeting the x-axis and
``p``/``q`` its start/end heights::

    case I   (p = 0):     H^m q_l R_1 d_1 ... R_k d_k Q' Q''
    case II  (q = 0):     H^m d_1 ^R_1 ... d_k ^R_k q_l Q' Q''
    case III (p < 0 < q): H^m d_1 ^R_1 ... d_|p| ^R_|p| q_l R_|p|+1 d_|p|+1 ... Q' Q''

where ``^R`` is ``R`` read backwards, ``Q'`` runs from the first return
point ``A`` after the start of ``q_l`` to the rightmost lowest point ``B``
after it, and ``Q''`` is the rest.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from typing import Optional

from .enumeration import ColoredHumpPath, MalformedColoredPath
from .paths import (
    Hump,
    LatticePath,
    LatticePoint,
    PathError,
    first_return_after,
    is_hump_of,
    is_nonnegative,
    leftmost_crossing_up,
    rightmost_lowest_after,
)

__all__ = [
    "Case",
    "HumpDecomposition",
    "MalformedColoredPath",
    "NoUpStep",
    "StructureViolation",
    "SuperDecomposition",
    "decompose_colored",
    "decompose_super",
    "phi",
    "psi",
    "case_of_color",
]

Span = tuple[int, int]


class NoUpStep(PathError):
    pass


class StructureViolation(AssertionError):
    """A factorization the construction guarantees did not come out.

    This signals a bug in this module, never bad input.
    """


class Case(enum.Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"


def case_of_color(color: int, k: int) -> Case:
    if color == 1:
        return Case.I
    if color == k + 1:
        return Case.II
    return Case.III


def _check(cond: bool, msg: str):
    if not cond:
        raise StructureViolation(msg)


def _is_dyck_like(word: str, k: int) -> bool:
    """Closed and never below its starting height."""
    y = 0
    for ch in word:
        y += k if ch == "U" else (-1 if ch == "D" else 0)
        if y < 0:
            return False
    return y == 0


def _cut(word: str, span: Span) -> str:
    return word[span[0]:span[1]]


@dataclass(frozen=True)
class HumpDecomposition:
    path: LatticePath
    r1: Span
    p_prime: Span
    pl_index: int
    run: int
    d_indices: tuple[int, ...]
    r_segments: tuple[Span, ...]  # R_1 .. R_k; R_1 is the same span as r1
    p_dprime: Span
    anchor: LatticePoint  # start of p_l

    def segment(self, span: Span) -> str:
        return _cut(self.path.word, span)

    def reassemble(self) -> str:
        w = self.path.word
        parts = [_cut(w, self.r1), _cut(w, self.p_prime), "U", "H" * self.run, "D"]
        for i in range(1, len(self.d_indices)):
            parts.append(_cut(w, self.r_segments[i]))
            parts.append("D")
        parts.append(_cut(w, self.p_dprime))
        return "".join(parts)


@dataclass(frozen=True)
class SuperDecomposition:
    path: LatticePath
    case: Case
    leading_h: int
    ql_index: int
    d_indices: tuple[int, ...]
    r_segments: tuple[str, ...]  # R_1 .. R_k, already read forwards
    q_prime: Span
    q_dprime: Span
    anchor_a: LatticePoint
    anchor_b: LatticePoint
    p: int
    q: int

    @property
    def color(self) -> int:
        return -self.p + 1

    def reassemble(self) -> str:
        w = self.path.word
        k = self.path.params.k
        below = -self.p  # number of d_i left of q_l
        parts = ["H" * self.leading_h]
        for i in range(below):
            parts.append("D")
            parts.append(self.r_segments[i][::-1])
        parts.append("U")
        for i in range(below, k):
            parts.append(self.r_segments[i])
            parts.append("D")
        parts.append(_cut(w, self.q_prime))
        parts.append(_cut(w, self.q_dprime))
        return "".join(parts)


def decompose_colored(cp: ColoredHumpPath, check: bool = True) -> HumpDecomposition:
    path, hump = cp.path, cp.hump
    word, hs, k = path.word, path.heights, path.params.k
    if not is_hump_of(hump, path):
        raise MalformedColoredPath(f"{hump} is not a hump of {word}")
    l = hump.up_index
    h = path.start_height(l)

    # d_1 closes the hump; d_i (i >= 2) is the first later step from
    # height h+k+1-i down to h+k-i
    d = [hump.down_index]
    j = hump.down_index + 1
    for i in range(2, k + 1):
        target = h + k - i
        while not (word[j] == "D" and hs[j] == target):
            j += 1
        d.append(j)
        j += 1
    r_segments = [None] * k
    for i in range(1, k):
        r_segments[i] = (d[i - 1] + 1, d[i])
    p_dprime = (d[-1] + 1, len(word))

    if h == 0:
        r1 = (0, l)
        p_prime = (l, l)
    else:
        # last height-0 point before p_l (the origin counts)
        s = l - 1
        while s >= 0 and hs[s] != 0:
            s -= 1
        r1 = (0, s + 1)
        p_prime = (s + 1, l)
    r_segments[0] = r1

    dec = HumpDecomposition(
        path=path,
        r1=r1,
        p_prime=p_prime,
        pl_index=l,
        run=hump.run,
        d_indices=tuple(d),
        r_segments=tuple(r_segments),
        p_dprime=p_dprime,
        anchor=LatticePoint(path.start_x(l), h),
    )
    if check:
        _check(dec.reassemble() == word, f"reassembly of {word} failed")
        _check(all(word[i] == "D" for i in d), "some d_i is not a down step")
        for span in dec.r_segments:
            _check(_is_dyck_like(_cut(word, span), k), f"R segment {span} of {word} is not a path")
        pp = _cut(word, p_prime)
        _check((pp == "") == (h == 0), "P' emptiness does not match h = 0")
        if pp:
            _check(pp[0] == "U", "P' does not start with an up step")
            _check(all(y > 0 for y in hs[p_prime[0]:p_prime[1]]), "P' touches the axis")
    return dec


def phi(cp: ColoredHumpPath, check: bool = True) -> LatticePath:
    """Map a hump-colored path to a super path with at least one up step."""
    dec = decompose_colored(cp, check=check)
    word, k, c = cp.path.word, cp.path.params.k, cp.color
    rs = [_cut(word, s) for s in dec.r_segments]
    parts = ["H" * dec.run]
    for i in range(c - 1):
        parts.append("D")
        parts.append(rs[i][::-1])
    parts.append("U")
    for i in range(c - 1, k):
        parts.append(rs[i])
        parts.append("D")
    parts.append(_cut(word, dec.p_dprime))
    parts.append(_cut(word, dec.p_prime))
    out = LatticePath(cp.path.params, "".join(parts))
    if check:
        _check(
            (out.n_up, out.n_down, out.n_horizontal)
            == (cp.path.n_up, cp.path.n_down, cp.path.n_horizontal),
            "step multiset not preserved",
        )
    return out


def decompose_super(qp: LatticePath, check: bool = True) -> SuperDecomposition:
    word, hs, k = qp.word, qp.heights, qp.params.k
    if not qp.is_closed:
        raise PathError(f"{word} does not end on the x-axis")
    ql = leftmost_crossing_up(qp)
    if ql is None:
        raise NoUpStep(f"{word} has no up step")
    p = qp.start_height(ql)
    q = hs[ql]
    x1 = qp.start_x(ql)
    below = -p  # d_i found to the left of q_l

    # d_1 .. d_below: last steps left of q_l from height -i+1 to -i
    d: list[Optional[int]] = [None] * k
    j = ql - 1
    for i in range(below, 0, -1):
        while not (word[j] == "D" and hs[j] == -i):
            j -= 1
        d[i - 1] = j
        j -= 1
    # d_{below+1} .. d_k: first steps right of q_l from k+1-i to k-i
    j = ql + 1
    for i in range(below + 1, k + 1):
        target = k - i
        while not (word[j] == "D" and hs[j] == target):
            j += 1
        d[i - 1] = j
        j += 1

    leading_h = d[0] if below else ql
    r_segments = []
    for i in range(k):
        if i < below:
            stop = d[i + 1] if i + 1 < below else ql
            r_segments.append(word[d[i] + 1:stop][::-1])
        else:
            start = ql + 1 if i == below else d[i - 1] + 1
            r_segments.append(word[start:d[i]])

    anchor_a = first_return_after(qp, x1)
    anchor_b = rightmost_lowest_after(qp, x1)
    # split points just after A and B
    ia = bisect_right(qp.xs, anchor_a.x)
    ib = bisect_right(qp.xs, anchor_b.x)
    dec = SuperDecomposition(
        path=qp,
        case=Case.I if p == 0 else (Case.II if q == 0 else Case.III),
        leading_h=leading_h,
        ql_index=ql,
        d_indices=tuple(d),
        r_segments=tuple(r_segments),
        q_prime=(ia, ib),
        q_dprime=(ib, len(word)),
        anchor_a=anchor_a,
        anchor_b=anchor_b,
        p=p,
        q=q,
    )
    if check:
        _check(q - p == k, "q_l is not an up step")
        _check(word[:leading_h] == "H" * leading_h, f"prefix of {word} is not all horizontal")
        _check(dec.reassemble() == word, f"reassembly of {word} failed")
        for r in r_segments:
            _check(_is_dyck_like(r, k), f"recovered R segment {r!r} of {word} is not a path")
        _check(ia <= ib, "B lies left of A")
    return dec


def psi(qp: LatticePath, check: bool = True) -> ColoredHumpPath:
    """Inverse of :func:`phi`."""
    dec = decompose_super(qp, check=check)
    word, k = qp.word, qp.params.k
    rs = dec.r_segments
    parts = [rs[0], _cut(word, dec.q_dprime), "U", "H" * dec.leading_h, "D"]
    for i in range(1, k):
        parts.append(rs[i])
        parts.append("D")
    parts.append(_cut(word, dec.q_prime))
    out = LatticePath(qp.params, "".join(parts))
    up = len(rs[0]) + dec.q_dprime[1] - dec.q_dprime[0]
    hump = Hump(up, dec.leading_h, up + dec.leading_h + 1)
    if check:
        _check(is_nonnegative(out), f"psi({word}) = {out.word} dips below the axis")
    return ColoredHumpPath(out, hump, dec.color)
