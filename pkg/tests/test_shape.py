from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_ppartitions, as_dict, cf_value, omega_dict, strip_cells
from qhcf.poly import IntLaurentPoly
from qhcf.qnum import qmultichoose
from qhcf.shape import (
    CFrac,
    IndexOutOfRange,
    InvalidRational,
    build_strip,
    cf_expand,
    common_prefix_length,
    deleted_first_column,
    enum_ppartitions,
    is_ppartition,
    iter_labelings,
    omega_gf,
    omega_table,
)

cfs = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple)

# the 14 fillings of G[2,2] with parts <= 2, cells listed bottom, middle, top-right
G22_FILLINGS = {
    (0, 0, 0), (0, 0, 1), (0, 0, 2),
    (1, 0, 0), (1, 0, 1), (1, 0, 2), (1, 1, 1), (1, 1, 2),
    (2, 0, 0), (2, 0, 1), (2, 0, 2), (2, 1, 1), (2, 1, 2), (2, 2, 2),
}


class TestContinuedFractions:
    @pytest.mark.parametrize(
        "r, s, terms", [(5, 2, (2, 2)), (7, 3, (2, 3)), (17, 3, (5, 1, 2)), (34, 6, (5, 1, 2)), (4, 1, (4,))]
    )
    def test_expand(self, r, s, terms):
        assert cf_expand(r, s).terms == terms

    def test_below_one(self):
        with pytest.raises(InvalidRational):
            cf_expand(2, 3)
        with pytest.raises(InvalidRational):
            cf_expand(3, 0)

    @given(st.integers(1, 400), st.integers(1, 60))
    def test_roundtrip(self, r, s):
        if r >= s:
            cf = cf_expand(r, s)
            assert cf.value == Fraction(r, s) == cf_value(cf.terms)
            assert len(cf) == 1 or cf.terms[-1] >= 2

    @given(cfs)
    def test_parity_forms(self, terms):
        cf = CFrac(terms)
        for even in (True, False):
            if cf.terms == (1,) and even:
                continue
            other = cf.with_parity(even)
            assert other.value == cf.value and (len(other) % 2 == 0) == even

    def test_parse(self):
        assert CFrac.parse("[5, 1, 2]") == CFrac.of(5, 1, 2)
        with pytest.raises(ValueError):
            CFrac.of(2, 0)


class TestStripGeometry:
    def test_four_term_strip(self):
        g = build_strip([5, 3, 2, 4])
        assert len(g) == 13
        assert g.cells == (
            (0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3),
            (5, 3), (6, 3), (6, 4), (6, 5), (6, 6),
        )

    def test_small(self):
        assert build_strip([2, 2]).cells == ((0, 0), (1, 0), (1, 1))
        assert len(build_strip([1])) == 0
        assert build_strip([4]).cells == ((0, 0), (1, 0), (2, 0))

    @given(cfs)
    def test_invariants(self, terms):
        g = build_strip(terms)
        cells = g.cells
        assert len(cells) == sum(terms) - 1
        assert list(cells) == strip_cells(terms)
        for (r1, c1), (r2, c2) in zip(cells, cells[1:]):
            assert (r2 - r1, c2 - c1) in ((1, 0), (0, 1))
        occupied = set(cells)
        for r, c in cells:
            assert not {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= occupied

    def test_render_and_json(self):
        g = build_strip([2, 2])
        assert g.render() == "##\n#."
        assert g.to_json() == {"cf": [2, 2], "cells": [[0, 0], [1, 0], [1, 1]]}


class TestEnumeration:
    def test_g22_fillings(self):
        got = [p.labels for p in enum_ppartitions(build_strip([2, 2]), 2)]
        assert len(got) == 14 and set(got) == G22_FILLINGS

    def test_degenerate(self):
        assert [p.labels for p in enum_ppartitions(build_strip([2, 2]), 0)] == [(0, 0, 0)]
        assert [p.labels for p in enum_ppartitions(build_strip([1]), 5)] == [()]

    def test_order_is_deterministic(self):
        labs = list(iter_labelings(build_strip([2, 2]), 2))
        assert labs[0] == (2, 2, 2) and labs[-1] == (0, 0, 0)
        assert labs == list(iter_labelings(build_strip([2, 2]), 2))

    @given(cfs, st.integers(0, 2))
    def test_matches_exhaustive_oracle(self, terms, m):
        g = build_strip(terms)
        got = [p.labels for p in enum_ppartitions(g, m)]
        assert len(got) == len(set(got))
        assert set(got) == set(all_ppartitions(strip_cells(terms), m))
        assert all(is_ppartition(g, lab, m) for lab in got)

    @pytest.mark.parametrize("p", range(0, 7))
    @pytest.mark.parametrize("m", range(0, 5))
    def test_chain_count(self, p, m):
        # a vertical chain of p cells
        g = build_strip([p + 1])
        gf = IntLaurentPoly.from_dict({})
        for part in enum_ppartitions(g, m):
            gf = gf + IntLaurentPoly.monomial(part.weight)
        assert gf == qmultichoose(p + 1, m)

    @pytest.mark.parametrize("p", range(1, 5))
    @pytest.mark.parametrize("r, s", [(0, 2), (1, 3), (2, 2), (1, 4)])
    def test_shifted_range_chain(self, p, r, s):
        g = build_strip([p + 1])
        terms = {}
        for lab in iter_labelings(g, s):
            if min(lab) >= r:
                terms[sum(lab)] = terms.get(sum(lab), 0) + 1
        assert IntLaurentPoly.from_dict(terms) == qmultichoose(p + 1, s - r).shift(p * r)


class TestOmega:
    def test_g22_values(self):
        g = build_strip([2, 2])
        assert omega_gf(g, 2, 1, 1) == IntLaurentPoly([1, 2, 3, 3, 3, 1, 1])
        assert omega_gf(g, 2, 2, 1) == IntLaurentPoly([1, 2, 2, 2, 1])
        assert omega_gf(g, 2, 1, 2).eval_q1() == 8

    def test_index_errors(self):
        g = build_strip([2, 2])
        for i, j in [(0, 1), (1, 4), (4, 4)]:
            with pytest.raises(IndexOutOfRange):
                omega_gf(g, 2, i, j)
        with pytest.raises(ValueError):
            omega_gf(g, 2, 1, 1, "other")

    def test_empty_strip_convention(self):
        g = build_strip([1])
        m = 3
        for i, j in product(range(1, m + 2), repeat=2):
            expected = 1 if m + 2 - i - j >= 0 else 0
            assert omega_gf(g, m, i, j) == IntLaurentPoly.constant(expected)
            assert omega_gf(g, m, i, j) == qmultichoose(1, m + 2 - i - j) if m + 2 - i - j >= 0 else True

    @given(cfs, st.integers(1, 2))
    def test_matches_oracle(self, terms, m):
        g, cells = build_strip(terms), strip_cells(terms)
        for variant in ("plain", "bar"):
            table = omega_table(g, m, variant)
            for i, j in product(range(1, m + 2), repeat=2):
                expected = omega_dict(cells, m, i, j, variant)
                assert as_dict(omega_gf(g, m, i, j, variant)) == expected
                assert as_dict(table[i - 1][j - 1]) == expected

    @given(cfs, st.integers(1, 3))
    def test_corner_and_monotone(self, terms, m):
        g = build_strip(terms)
        full = IntLaurentPoly.from_dict({})
        for p in enum_ppartitions(g, m):
            full = full + IntLaurentPoly.monomial(p.weight)
        plain, bar = omega_table(g, m, "plain"), omega_table(g, m, "bar")
        if len(g):
            assert plain[0][0] == bar[0][0] == full
        for i, j in product(range(m + 1), repeat=2):
            for di, dj in ((1, 0), (0, 1)):
                if i + di <= m and j + dj <= m:
                    assert (plain[i][j] - plain[i + di][j + dj]).is_nonnegative()
                    assert (bar[i][j] - bar[i + di][j + dj]).is_nonnegative()

    @given(st.lists(st.integers(1, 3), min_size=2, max_size=4).map(tuple), st.integers(1, 3))
    def test_denominator_is_smaller_strip(self, terms, m):
        cf = CFrac(terms)
        g, g2 = build_strip(cf), build_strip(deleted_first_column(cf))
        whole = IntLaurentPoly.from_dict({})
        for p in enum_ppartitions(g2, m):
            whole = whole + IntLaurentPoly.monomial(p.weight)
        assert omega_gf(g, m, m + 1, 1) == whole


def test_deleted_first_column():
    assert deleted_first_column(CFrac.of(2, 3)) == CFrac.of(1, 2)
    assert deleted_first_column(CFrac.of(2, 1, 3)) == CFrac.of(4)
    assert deleted_first_column(CFrac.of(3, 1)) == CFrac.of(1)


def test_common_prefix_length():
    assert common_prefix_length(build_strip([2, 2]), build_strip([2, 3])) == 3
    assert common_prefix_length(build_strip([2, 2]), build_strip([2, 1, 2])) == 3
    assert common_prefix_length(build_strip([2, 2]), build_strip([3, 2])) == 2
    assert common_prefix_length(build_strip([3]), build_strip([1, 2])) == 1
    assert common_prefix_length(build_strip([3]), build_strip([1])) == 0
