"""Exhaustive checks of the hump/peak counting identities and of the bijection.

Every check returns :class:`IdentityReport` values: the two sides as exact
integers, and a replayable witness whenever they differ. Cells whose super
path count exceeds the enumeration budget raise :class:`BudgetExceeded`;
:func:`run_sweep` turns those into skips.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .bijection import decompose_colored, decompose_super, phi, psi
from .enumeration import (
    ColoredHumpPath,
    Mode,
    Restriction,
    count_kary_peak_paths,
    count_sud,
    count_suu,
    count_super,
    delta_divides,
    enumerate_colored,
    enumerate_restricted,
    enumerate_super,
    kary_peak_census,
    narayana,
    total_statistic,
)
from .paths import INFINITY, PathParams

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("KAPATH_BUDGET", DEFAULT_BUDGET))


class BudgetExceeded(RuntimeError):
    def __init__(self, size: int, budget: int):
        super().__init__(f"enumeration of {size} words exceeds budget {budget}")
        self.size = size
        self.budget = budget


class Claim(str, enum.Enum):
    EQ4 = "EQ4"  # (k+1) * total humps = |SP_n| - delta(a | n)
    EQ5 = "EQ5"  # (k+1) * total peaks = |SP_n| - |SP_{n-a}|
    EQ6 = "EQ6"  # |hump-colored paths| = |S'_n|
    EQ7 = "EQ7"  # |peak-colored paths| = |S''_n|
    THM1 = "THM1"  # run of colored hump = leading H count of image
    C1 = "C1"  # super k-ary paths starting UU, by peaks
    C2 = "C2"  # super k-ary paths starting UD, by peaks
    KARY = "KARY"  # k-ary paths by peaks
    NARAYANA = "NARAYANA"
    ROUNDTRIP = "ROUNDTRIP"
    SUPER = "SUPER"  # multinomial count of super paths vs enumeration


_CLAIM_ORDER = {c: i for i, c in enumerate(Claim)}


@dataclass(frozen=True)
class IdentityReport:
    claim: Claim
    params: dict
    lhs: int
    rhs: int
    witness: Optional[str] = None

    def __post_init__(self):
        if (self.lhs == self.rhs) == (self.witness is not None):
            raise ValueError("a witness is required exactly when the sides differ")

    @property
    def verified(self) -> bool:
        return self.lhs == self.rhs

    def sort_key(self):
        p = self.params
        a = p.get("a", 0)
        return (
            _CLAIM_ORDER[self.claim],
            p.get("n", 0),
            p.get("k", 0),
            float("inf") if a == "inf" else a,
            p.get("m", 0),
        )

    def to_json(self) -> dict:
        out = {"claim": self.claim.value, **self.params}
        out["lhs"] = str(self.lhs)
        out["rhs"] = str(self.rhs)
        out["verified"] = self.verified
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def describe(self) -> str:
        cell = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "ok  " if self.verified else "FAIL"
        line = f"{status} {self.claim.value:<9} {cell}: lhs={self.lhs} rhs={self.rhs}"
        if self.witness:
            line += f" witness={self.witness}"
        return line


def _cell(n: int, params: PathParams) -> dict:
    return {"n": n, "k": params.k, "a": params.a if params.a_is_finite else "inf"}


def _report(claim, cell, lhs, rhs, witness=None) -> IdentityReport:
    if lhs != rhs and witness is None:
        witness = json.dumps(cell)
    return IdentityReport(claim, cell, lhs, rhs, witness if lhs != rhs else None)


def _guard(n: int, params: PathParams, budget: Optional[int]):
    if budget is None:
        return
    size = count_super(n, params)
    if size > budget:
        raise BudgetExceeded(size, budget)


def verify_hump_identity(n, params, budget=None) -> IdentityReport:
    _guard(n, params, budget)
    lhs = (params.k + 1) * total_statistic(n, params, Mode.HUMP)
    rhs = count_super(n, params) - delta_divides(n, params)
    return _report(Claim.EQ4, _cell(n, params), lhs, rhs)


def verify_peak_identity(n, params, budget=None) -> IdentityReport:
    _guard(n, params, budget)
    lhs = (params.k + 1) * total_statistic(n, params, Mode.PEAK)
    rhs = count_super(n, params)
    if params.a_is_finite:
        rhs -= count_super(n - params.a, params)
    return _report(Claim.EQ5, _cell(n, params), lhs, rhs)


def verify_super_count(n, params, budget=None) -> IdentityReport:
    _guard(n, params, budget)
    lhs = sum(1 for _ in enumerate_super(n, params))
    return _report(Claim.SUPER, _cell(n, params), lhs, count_super(n, params))


def verify_cardinalities(n, params, budget=None) -> list[IdentityReport]:
    """Colored path counts against the restricted super path counts."""
    _guard(n, params, budget)
    cell = _cell(n, params)
    out = []
    for claim, mode, which in (
        (Claim.EQ6, Mode.HUMP, Restriction.S_PRIME),
        (Claim.EQ7, Mode.PEAK, Restriction.S_DPRIME),
    ):
        lhs = sum(1 for _ in enumerate_colored(n, params, mode))
        rhs = sum(1 for _ in enumerate_restricted(n, params, which))
        out.append(_report(claim, dict(cell), lhs, rhs))
    return out


def _colored_witness(cp: ColoredHumpPath, extra: str = "") -> str:
    obj = cp.to_json()
    if extra:
        obj["note"] = extra
    return json.dumps(obj)


def _inverse_anchors_ok(cp: ColoredHumpPath, image) -> bool:
    """The image's q_l, A and B sit where phi placed p_l and P''."""
    dec = decompose_colored(cp)
    k, c = cp.path.params.k, cp.color
    rs = [e - s for s, e in dec.r_segments]
    pl_at = dec.run + (c - 1) + sum(rs[: c - 1])
    tail_start = dec.run + k + 1 + sum(rs)
    tail_stop = tail_start + dec.p_dprime[1] - dec.p_dprime[0]
    sup = decompose_super(image)
    return (
        sup.ql_index == pl_at
        and sup.q_prime == (tail_start, tail_stop)
        and sup.case.value == ("I" if c == 1 else "II" if c == k + 1 else "III")
    )


def verify_bijection(n, params, budget=None) -> IdentityReport:
    """psi(phi(x)) = x on colored paths, phi(psi(y)) = y on S', and the
    images of the hump- and peak-colored paths are exactly S' and S''.

    ``lhs`` counts passed checks, ``rhs`` counts checks made.
    """
    _guard(n, params, budget)
    passed = total = 0
    witness = None

    def fail(w):
        nonlocal witness
        if witness is None:
            witness = w

    hump_image: set[str] = set()
    peak_image: set[str] = set()
    for cp in enumerate_colored(n, params, Mode.HUMP):
        total += 1
        image = phi(cp)
        hump_image.add(image.word)
        if cp.hump.run == 0:
            peak_image.add(image.word)
        if psi(image) == cp and _inverse_anchors_ok(cp, image):
            passed += 1
        else:
            fail(_colored_witness(cp, f"phi -> {image.word}"))
    s_prime = set()
    for q in enumerate_restricted(n, params, Restriction.S_PRIME):
        total += 1
        s_prime.add(q.word)
        back = phi(psi(q))
        if back == q:
            passed += 1
        else:
            fail(json.dumps({**q.to_json(), "note": f"phi(psi) -> {back.word}"}))
    s_dprime = {q.word for q in enumerate_restricted(n, params, Restriction.S_DPRIME)}
    for name, got, want in (("S'", hump_image, s_prime), ("S''", peak_image, s_dprime)):
        total += 1
        if got == want:
            passed += 1
        else:
            diff = sorted(got ^ want)
            fail(json.dumps({**_cell(n, params), "note": f"image != {name}", "word": diff[0]}))
    return _report(Claim.ROUNDTRIP, _cell(n, params), passed, total, witness)


def verify_theorem1_refinement(n, params, budget=None) -> IdentityReport:
    """A hump with ``l`` horizontal steps maps to a path with exactly ``l``
    leading horizontal steps."""
    _guard(n, params, budget)
    passed = total = 0
    witness = None
    for cp in enumerate_colored(n, params, Mode.HUMP):
        total += 1
        w = phi(cp).word
        lead = len(w) - len(w.lstrip("H"))
        if lead == cp.hump.run:
            passed += 1
        elif witness is None:
            witness = _colored_witness(cp, f"phi -> {w}")
    return _report(Claim.THM1, _cell(n, params), passed, total, witness)


@lru_cache(maxsize=64)
def _census(n: int, k: int):
    return kary_peak_census(n, k)


def verify_lemma_counts(n: int, k: int, m_max: Optional[int] = None) -> list[IdentityReport]:
    """Binomial counts of super k-ary paths starting UU / UD, per peak count."""
    census = _census(n, k)
    m_max = n + 1 if m_max is None else m_max
    out = []
    for m in range(1, m_max + 1):
        cell = {"n": n, "k": k, "m": m}
        out.append(_report(Claim.C1, dict(cell), census["uu"].get(m, 0), count_suu(n, k, m)))
        out.append(_report(Claim.C2, dict(cell), census["ud"].get(m, 0), count_sud(n, k, m)))
    return out


def verify_kary_peaks(n: int, k: int, m_max: Optional[int] = None) -> list[IdentityReport]:
    census = _census(n, k)["paths"]
    m_max = n + 1 if m_max is None else m_max
    return [
        _report(
            Claim.KARY,
            {"n": n, "k": k, "m": m},
            census.get(m, 0),
            count_kary_peak_paths(n, k, m),
        )
        for m in range(1, m_max + 1)
    ]


def verify_narayana_row(n: int) -> list[IdentityReport]:
    census = _census(n, 1)["paths"]
    return [
        _report(Claim.NARAYANA, {"n": n, "k": 1, "m": m}, census.get(m, 0), narayana(n, m))
        for m in range(1, n + 1)
    ]


def verify_narayana(n_max: int) -> list[IdentityReport]:
    out = []
    for n in range(1, n_max + 1):
        out.extend(verify_narayana_row(n))
    return out


# Sweeps over parameter grids.

PATH_CLAIMS = {
    Claim.EQ4: lambda n, p, b: [verify_hump_identity(n, p, b)],
    Claim.EQ5: lambda n, p, b: [verify_peak_identity(n, p, b)],
    Claim.SUPER: lambda n, p, b: [verify_super_count(n, p, b)],
    Claim.ROUNDTRIP: lambda n, p, b: [verify_bijection(n, p, b)],
    Claim.THM1: lambda n, p, b: [verify_theorem1_refinement(n, p, b)],
}


@dataclass
class SweepConfig:
    """Grid and feasibility cutoff for a verification sweep.

    The defaults are the acceptance grid.
    """

    ks: Sequence[int] = (1, 2, 3)
    as_: Sequence = (1, 2, 3, INFINITY)
    ns: Sequence[int] = tuple(range(13))
    budget: int = field(default_factory=default_budget)
    # up-step counts and peak-count cap for the k-ary lemma checks
    lemma_ns: Sequence[int] = tuple(range(1, 7))

    def cells(self) -> Iterable[tuple[int, PathParams]]:
        for k in self.ks:
            for a in self.as_:
                params = PathParams(k, a)
                for n in self.ns:
                    yield n, params


@dataclass
class SweepResult:
    reports: list[IdentityReport]
    skipped: list[tuple[str, dict]]

    @property
    def ok(self) -> bool:
        return all(r.verified for r in self.reports)

    @property
    def failures(self) -> list[IdentityReport]:
        return [r for r in self.reports if not r.verified]


def run_sweep(claims: Iterable[Claim], config: Optional[SweepConfig] = None) -> SweepResult:
    config = config or SweepConfig()
    claims = list(dict.fromkeys(Claim(c) for c in claims))
    reports: list[IdentityReport] = []
    skipped = []
    for claim in claims:
        if claim in PATH_CLAIMS or claim in (Claim.EQ6, Claim.EQ7):
            for n, params in config.cells():
                try:
                    if claim in PATH_CLAIMS:
                        reports.extend(PATH_CLAIMS[claim](n, params, config.budget))
                    else:
                        got = verify_cardinalities(n, params, config.budget)
                        reports.extend(r for r in got if r.claim is claim)
                except BudgetExceeded:
                    skipped.append((claim.value, _cell(n, params)))
        elif claim in (Claim.C1, Claim.C2, Claim.KARY):
            for k in config.ks:
                for n in config.lemma_ns:
                    if n < 1:
                        continue
                    if claim is Claim.KARY:
                        reports.extend(verify_kary_peaks(n, k))
                    else:
                        reports.extend(r for r in verify_lemma_counts(n, k) if r.claim is claim)
        elif claim is Claim.NARAYANA:
            for n in config.lemma_ns:
                if n >= 1:
                    reports.extend(verify_narayana_row(n))
    reports.sort(key=IdentityReport.sort_key)
    return SweepResult(reports, skipped)
