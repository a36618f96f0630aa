import math
from math import comb

import pytest
from hypothesis import given, strategies as st

from kapath import (
    INFINITY,
    ColoredHumpPath,
    Hump,
    LatticePath,
    MalformedColoredPath,
    Mode,
    PathParams,
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
    is_nonnegative,
    narayana,
    total_statistic,
)
from kapath.enumeration import NonIntegerResult, kary_peak_census

import oracles

SMALL_GRID = [
    (k, a, n)
    for k in (1, 2, 3)
    for a in (1, 2, 3, INFINITY)
    for n in range(0, 9)
]


def words(stream):
    return [p.word for p in stream]


class TestCompositions:
    def test_examples(self):
        assert compositions(3, PathParams(1, 1)) == [StepComposition(0, 3), StepComposition(1, 1)]
        assert compositions(6, PathParams(2, INFINITY)) == [StepComposition(2, 0)]
        assert compositions(1, PathParams(1, 2)) == []
        assert compositions(-1, PathParams(1, 1)) == []

    @given(st.integers(0, 40), st.integers(1, 4), st.one_of(st.integers(1, 5), st.just(INFINITY)))
    def test_solutions_are_exact(self, n, k, a):
        params = PathParams(k, a)
        for c in compositions(n, params):
            assert c.u * (k + 1) + (a * c.h if c.h else 0) == n


class TestEnumeratePaths:
    def test_examples(self):
        assert words(enumerate_paths(2, PathParams(1, 1))) == ["UD", "HH"]
        assert words(enumerate_paths(6, PathParams(2, INFINITY))) == ["UUDDDD", "UDUDDD", "UDDUDD"]
        for params in (PathParams(1, 1), PathParams(3, INFINITY)):
            assert words(enumerate_paths(0, params)) == [""]

    @pytest.mark.parametrize("k,a,n", SMALL_GRID)
    def test_matches_product_oracle(self, k, a, n):
        params = PathParams(k, a)
        expected = [w for w in oracles.all_words(n, k, a) if oracles.nonnegative(w, k)]
        got = words(enumerate_paths(n, params))
        assert got == expected  # same set, same lexicographic order
        assert count_paths(n, params) == len(expected)

    @pytest.mark.parametrize("k,a,n", SMALL_GRID)
    def test_super_matches_product_oracle(self, k, a, n):
        params = PathParams(k, a)
        expected = oracles.all_words(n, k, a)
        assert words(enumerate_super(n, params)) == expected
        assert count_super(n, params) == len(expected)

    def test_known_sequences(self):
        motzkin = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
        assert [count_paths(n, PathParams(1, 1)) for n in range(11)] == motzkin
        schroeder = [1, 2, 6, 22, 90, 394]
        assert [count_paths(2 * n, PathParams(1, 2)) for n in range(6)] == schroeder
        catalan = [1, 1, 2, 5, 14, 42]
        assert [count_paths(2 * n, PathParams(1, INFINITY)) for n in range(6)] == catalan
        # ternary trees: C(3n, n) / (2n + 1)
        assert [count_paths(3 * n, PathParams(2, INFINITY)) for n in range(6)] == [
            comb(3 * n, n) // (2 * n + 1) for n in range(6)
        ]

    def test_streams_are_closed_and_unique(self):
        for k in (1, 2, 3):
            for a in (1, 2, INFINITY):
                params = PathParams(k, a)
                for n in range(11):
                    ps = list(enumerate_paths(n, params))
                    assert all(p.is_closed and is_nonnegative(p) for p in ps)
                    assert len(set(ps)) == len(ps)
                    ss = list(enumerate_super(n, params))
                    assert all(p.is_closed and p.order == n for p in ss)
                    assert len(set(ss)) == len(ss) == count_super(n, params)


class TestCountSuper:
    def test_examples(self):
        assert count_super(3, PathParams(1, 1)) == 7
        assert count_super(2, PathParams(1, INFINITY)) == 2
        assert count_super(0, PathParams(2, 3)) == 1
        assert count_super(-2, PathParams(1, 1)) == 0

    def test_central_binomial(self):
        for n in range(8):
            assert count_super(2 * n, PathParams(1, INFINITY)) == comb(2 * n, n)

    def test_delta(self):
        assert delta_divides(6, PathParams(1, 3)) == 1
        assert delta_divides(7, PathParams(1, 3)) == 0
        assert delta_divides(0, PathParams(1, INFINITY)) == 1
        assert delta_divides(4, PathParams(1, INFINITY)) == 0


class TestRestricted:
    def test_examples(self):
        p = PathParams(1, 1)
        assert words(enumerate_restricted(2, p, Restriction.S_PRIME)) == ["UD", "DU"]
        assert words(enumerate_restricted(2, p, Restriction.S_DPRIME)) == ["UD", "DU"]
        assert len(list(enumerate_restricted(4, PathParams(1, 2), Restriction.S_DPRIME))) == 10

    @pytest.mark.parametrize("k,a,n", SMALL_GRID)
    def test_sizes(self, k, a, n):
        params = PathParams(k, a)
        s1 = list(enumerate_restricted(n, params, Restriction.S_PRIME))
        s2 = list(enumerate_restricted(n, params, Restriction.S_DPRIME))
        assert all("U" in p.word for p in s1)
        assert not any(p.word.startswith("H") for p in s2)
        assert len(s1) == count_super(n, params) - delta_divides(n, params)
        tail = count_super(n - a, params) if a != INFINITY else 0
        # the empty path counts on the closed-form side but has no first step
        assert len(s2) == count_super(n, params) - tail - (n == 0)
        assert {p.word for p in s2} <= {p.word for p in s1}

    def test_empty_path_is_not_in_s_dprime(self):
        for params in (PathParams(1, 1), PathParams(2, INFINITY)):
            assert list(enumerate_restricted(0, params, Restriction.S_DPRIME)) == []
            assert list(enumerate_restricted(0, params, Restriction.S_PRIME)) == []


class TestColored:
    def test_examples(self):
        got = list(enumerate_colored(2, PathParams(1, 1), Mode.HUMP))
        assert [(c.path.word, c.hump, c.color) for c in got] == [
            ("UD", Hump(0, 0, 1), 1),
            ("UD", Hump(0, 0, 1), 2),
        ]
        got = list(enumerate_colored(3, PathParams(1, 1), Mode.PEAK))
        assert sorted((c.path.word, c.color) for c in got) == [
            ("HUD", 1), ("HUD", 2), ("UDH", 1), ("UDH", 2)
        ]
        assert list(enumerate_colored(1, PathParams(1, 2), Mode.HUMP)) == []

    def test_validation(self):
        path = LatticePath(PathParams(1, 1), "UHD")
        with pytest.raises(MalformedColoredPath):
            ColoredHumpPath(path, Hump(0, 0, 1), 1)
        with pytest.raises(MalformedColoredPath):
            ColoredHumpPath(path, Hump(0, 1, 2), 3)
        with pytest.raises(MalformedColoredPath):
            ColoredHumpPath.at(LatticePath(PathParams(1, 1), "DU"), 1, 1)

    @pytest.mark.parametrize("k,a,n", SMALL_GRID)
    def test_sizes_match_statistic(self, k, a, n):
        params = PathParams(k, a)
        for mode, counter in ((Mode.HUMP, oracles.hump_count), (Mode.PEAK, oracles.peak_count)):
            total = total_statistic(n, params, mode)
            oracle = sum(
                counter(w) for w in oracles.all_words(n, k, a) if oracles.nonnegative(w, k)
            )
            assert total == oracle
            assert sum(1 for _ in enumerate_colored(n, params, mode)) == (k + 1) * total

    def test_statistic_examples(self):
        p = PathParams(1, 1)
        assert total_statistic(3, p, Mode.HUMP) == 3
        assert total_statistic(3, p, Mode.PEAK) == 2
        assert total_statistic(0, p, Mode.HUMP) == 0


def brute_kary(n, k):
    """(uu, ud, paths) dicts of counts by peaks, from the combinations oracle."""
    uu, ud, ps = {}, {}, {}
    for w in oracles.kary_words(n, k):
        m = oracles.peak_count(w)
        if w.startswith("UU"):
            uu[m] = uu.get(m, 0) + 1
        elif w.startswith("UD"):
            ud[m] = ud.get(m, 0) + 1
        if oracles.nonnegative(w, k):
            ps[m] = ps.get(m, 0) + 1
    return uu, ud, ps


class TestClosedForms:
    def test_examples(self):
        assert count_suu(2, 1, 1) == 1
        assert count_suu(1, 1, 1) == 0
        assert count_suu(2, 2, 1) == 1
        assert count_sud(1, 1, 1) == 1
        assert count_sud(2, 1, 2) == 1
        assert count_sud(2, 1, 3) == 0
        assert count_kary_peak_paths(2, 2, 1) == 1
        assert count_kary_peak_paths(2, 2, 2) == 2
        assert count_kary_peak_paths(3, 1, 2) == 3

    @pytest.mark.parametrize("k", [1, 2, 3])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_brute_force(self, n, k):
        uu, ud, ps = brute_kary(n, k)
        census = kary_peak_census(n, k)
        assert census == {"uu": uu, "ud": ud, "paths": ps}
        for m in range(1, n + 2):
            assert count_suu(n, k, m) == uu.get(m, 0)
            assert count_sud(n, k, m) == ud.get(m, 0)
            assert count_kary_peak_paths(n, k, m) == ps.get(m, 0)

    @given(st.integers(1, 30), st.integers(1, 6), st.integers(1, 32))
    def test_final_derivation(self, n, k, m):
        # colored peak count = |S^UU(m-1)| + |S^UD(m)|, divided by m
        suu_prev = comb(n - 1, m - 1) * comb(k * n - 1, m - 2) if m >= 2 else 0
        lhs = suu_prev + comb(n - 1, m - 1) * comb(k * n - 1, m - 1)
        assert lhs % m == 0
        assert lhs // m == count_kary_peak_paths(n, k, m)
        if m >= 2:
            assert suu_prev == count_suu(n, k, m - 1)

    @given(st.integers(1, 9), st.integers(1, 3))
    def test_row_sums_are_generalized_catalan(self, n, k):
        total = sum(count_kary_peak_paths(n, k, m) for m in range(1, n + 1))
        assert total == count_paths((k + 1) * n, PathParams(k, INFINITY))

    def test_narayana_triangle(self):
        rows = [[narayana(n, m) for m in range(1, n + 1)] for n in range(1, 6)]
        assert rows == [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1]]

    def test_integrality_guard(self, monkeypatch):
        from kapath import enumeration

        monkeypatch.setattr(enumeration, "comb", lambda a, b: 1)
        with pytest.raises(NonIntegerResult):
            enumeration.count_kary_peak_paths(3, 1, 2)
