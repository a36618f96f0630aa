"""Exit criteria. Each test prints one PASS/FAIL line, visible even under
output capture. Run alone with ``pytest tests/test_acceptance.py``."""

import time

import pytest

from kapath import (
    INFINITY,
    Mode,
    PathParams,
    count_super,
    decompose_super,
    narayana,
    phi,
    total_statistic,
)
from kapath import figures
from kapath.identities import (
    Claim,
    SweepConfig,
    run_sweep,
    verify_kary_peaks,
    verify_lemma_counts,
)

KS = (1, 2, 3)
AS = (1, 2, 3, INFINITY)
NS = tuple(range(13))
GRID = SweepConfig(ks=KS, as_=AS, ns=NS, budget=10**7)
TIME_LIMIT = 60.0


@pytest.fixture
def say(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")

    return emit


def _sweep(claim):
    t0 = time.perf_counter()
    res = run_sweep([claim], GRID)
    return res, time.perf_counter() - t0


def _cells(reports):
    return ", ".join(
        f"(n={r.params['n']},k={r.params['k']},a={r.params['a']}: {r.lhs}!={r.rhs})"
        for r in reports
    )


def test_criterion_1_hump_identity(say):
    res, elapsed = _sweep(Claim.EQ4)
    ok = res.ok and not res.skipped and len(res.reports) == 156 and elapsed < TIME_LIMIT
    say(1, ok, f"(k+1)*sum humps = |SP_n| - delta on {len(res.reports)} cells in {elapsed:.1f}s"
        + (f"; failing {_cells(res.failures)}" if res.failures else ""))
    assert not res.skipped
    assert res.ok, _cells(res.failures)
    assert elapsed < TIME_LIMIT


def test_criterion_2_peak_identity(say):
    res, elapsed = _sweep(Claim.EQ5)
    ok = res.ok and not res.skipped and len(res.reports) == 156
    say(2, ok, f"(k+1)*sum peaks = |SP_n| - |SP_n-a| on {len(res.reports)} cells"
        + (f"; failing {_cells(res.failures)}" if res.failures else ""))
    assert not res.skipped
    assert res.ok, _cells(res.failures)


def test_criterion_3_bijectivity(say):
    res, elapsed = _sweep(Claim.ROUNDTRIP)
    checks = sum(r.rhs for r in res.reports)
    ok = res.ok and not res.skipped and len(res.reports) == 156
    say(3, ok, f"psi.phi = id, phi.psi = id, image = S' and S'' on 156 cells, "
        f"{checks} checks in {elapsed:.1f}s"
        + (f"; first witness {res.failures[0].witness}" if res.failures else ""))
    assert not res.skipped
    assert res.ok, [r.witness for r in res.failures]


def test_criterion_4_theorem1(say):
    res, elapsed = _sweep(Claim.THM1)
    colored = sum(r.rhs for r in res.reports)
    ok = res.ok and not res.skipped
    say(4, ok, f"leading H count = hump run for {colored} colored humps, "
        f"{sum(r.rhs - r.lhs for r in res.reports)} exceptions")
    assert not res.skipped
    assert res.ok, [r.witness for r in res.failures]


NARAYANA_ROWS = [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1], [1, 15, 50, 50, 15, 1]]


def test_criterion_5_closed_forms(say):
    reports = []
    for k in KS:
        for n in range(1, 7):
            reports += verify_lemma_counts(n, k)
            reports += verify_kary_peaks(n, k)
    bad = [r for r in reports if not r.verified]
    k1 = {(r.params["n"], r.params["m"]): r.lhs for r in reports
          if r.claim is Claim.KARY and r.params["k"] == 1}
    rows = [[k1[n, m] for m in range(1, n + 1)] for n in range(1, 7)]
    formula_rows = [[narayana(n, m) for m in range(1, n + 1)] for n in range(1, 7)]
    ok = not bad and rows == NARAYANA_ROWS == formula_rows
    say(5, ok, f"{len(reports)} (claim, n, k, m) closed-form counts match brute force; "
        f"k=1 rows {rows}")
    assert not bad, [r.describe() for r in bad]
    assert rows == NARAYANA_ROWS == formula_rows


def _specializations():
    """Eq. (1), (3) and (2) as displayed: constant -1 for humps with a = 1 and
    a = 2, no correction for peaks with a = inf."""
    out = []
    for label, a, mode, correction in (
        ("(1) Motzkin humps", 1, Mode.HUMP, 1),
        ("(3) Schroeder humps", 2, Mode.HUMP, 1),
        ("(2) Dyck peaks", INFINITY, Mode.PEAK, 0),
    ):
        params = PathParams(1, a)
        for n in NS:
            lhs = 2 * total_statistic(n, params, mode)
            rhs = count_super(n, params) - correction
            out.append((label, n, lhs, rhs))
    return out


def test_criterion_6_specializations(say):
    rows = _specializations()
    bad = [r for r in rows if r[2] != r[3]]
    detail = f"{len(rows) - len(bad)}/{len(rows)} (equation, n) cells exact"
    if bad:
        detail += "; failing " + ", ".join(f"{l} n={n}: {x}!={y}" for l, n, x, y in bad)
    say(6, not bad, detail)
    assert not bad


def test_criterion_7_figures(say):
    image = phi(figures.colored_path())
    dec = decompose_super(image)
    q = dec.path
    ql_start = (q.start_x(dec.ql_index), dec.p)
    found = {
        "image": image.word == figures.SUPER_WORD,
        "q_l start": ql_start == (7, -1),
        "q_l end": (q.xs[dec.ql_index], dec.q) == (8, 2),
        "A": tuple(dec.anchor_a) == (14, 0),
        "B": tuple(dec.anchor_b) == (30, -4),
        "R_3 empty": dec.r_segments[2] == "",
    }
    ok = all(found.values())
    say(7, ok, f"Figure 1 -> Figure 2/3, q_l from {ql_start}, A={tuple(dec.anchor_a)}, "
        f"B={tuple(dec.anchor_b)}, R_3={dec.r_segments[2]!r}")
    assert ok, found


def test_criterion_8_super_count_oracle(say):
    res, elapsed = _sweep(Claim.SUPER)
    ok = res.ok and not res.skipped and len(res.reports) == 156
    say(8, ok, f"multinomial |SP_n| = enumerated |SP_n| on {len(res.reports)} cells, "
        f"largest {max(r.rhs for r in res.reports)}")
    assert not res.skipped
    assert res.ok, _cells(res.failures)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
