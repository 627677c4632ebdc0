from collections import Counter
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_ppartitions, strip_cells
from qhcf.poly import IntLaurentPoly
from qhcf.posit import (
    NoSwappablePosition,
    OrderViolation,
    PositivityProblem,
    complement_pairs,
    phi_injection,
    positivity_difference,
    complement_conditions,
    swappable_positions,
)
from qhcf.shape import cf_expand

LEFTOVER_PAIRS = {
    ((1, 1, 1), (0, 0, 0, 0)),
    ((2, 1, 2), (0, 0, 0, 0)),
    ((2, 1, 2), (0, 0, 0, 1)),
    ((1, 1, 2), (0, 0, 0, 0)),
    ((1, 1, 2), (0, 0, 0, 1)),
    ((2, 2, 2), (0, 0, 0, 1)),
    ((2, 1, 1), (0, 0, 0, 0)),
    ((2, 2, 2), (0, 0, 0, 0)),
    ((2, 2, 2), (0, 0, 1, 1)),
}


def gf(weights):
    return IntLaurentPoly.from_dict(Counter(weights))


def oracle_sets(rs, ab, i, m):
    left = all_ppartitions(strip_cells(cf_expand(rs.numerator, rs.denominator).terms), m)
    right = all_ppartitions(strip_cells(cf_expand(ab.numerator, ab.denominator).terms), m)

    def first(lab):
        return lab[0] if lab else 0

    S = [x for x in left if first(x) == 0]
    R = [x for x in left if first(x) <= i]
    A = [x for x in right if first(x) <= i]
    B = [x for x in right if first(x) == 0]
    return S, A, R, B


rationals = st.builds(lambda n, d: F(n, d), st.integers(1, 16), st.integers(1, 5)).filter(lambda x: 1 <= x <= 4)


@st.composite
def problems(draw):
    x, y = draw(rationals), draw(rationals)
    if x == y:
        y = x + 1
    m = draw(st.integers(1, 3))
    i = draw(st.integers(0, m))
    return max(x, y), min(x, y), i, m


class TestDifference:
    def test_worked_example(self):
        assert positivity_difference(F(5, 2), F(7, 3), 2, 2) == IntLaurentPoly([0, 0, 0, 1, 2, 2, 2, 1, 1])

    def test_integers(self):
        assert positivity_difference(2, 1, 1, 1) == IntLaurentPoly.monomial(1)
        assert positivity_difference(3, 2, 1, 1) == IntLaurentPoly.monomial(2)

    def test_i_zero_vanishes(self):
        assert positivity_difference(F(3, 2), F(4, 3), 0, 2) == IntLaurentPoly()
        S, A, R, B = oracle_sets(F(3, 2), F(4, 3), 0, 2)
        assert len(B) * len(R) == len(A) * len(S)

    def test_order_checked(self):
        with pytest.raises(OrderViolation):
            positivity_difference(F(7, 3), F(5, 2), 1, 2)
        with pytest.raises(OrderViolation):
            positivity_difference(F(5, 2), F(5, 2), 1, 2)
        with pytest.raises(OrderViolation):
            positivity_difference(3, F(1, 2), 1, 2)
        with pytest.raises(ValueError):
            positivity_difference(3, 2, 3, 2)


class TestSwaps:
    def setup_method(self):
        self.prob = PositivityProblem(F(5, 2), F(7, 3), 2, 2)

    def test_shared_run(self):
        assert self.prob.d == 3
        assert PositivityProblem(3, F(3, 2), 1, 2).d == 1

    def test_every_source_pair_swaps(self):
        for pair in self.prob.iter_SA():
            assert swappable_positions(pair)

    def test_complement_has_no_swaps(self):
        for pair in complement_pairs(F(5, 2), F(7, 3), 2, 2):
            assert swappable_positions(pair) == []
            with pytest.raises(ValueError):
                phi_injection(pair)

    def test_all_zero_pair_swaps_first_cell(self):
        pair = self.prob.pair((0, 0, 0), (0, 0, 0, 0))
        assert swappable_positions(pair)[0] == 1
        assert phi_injection(pair) == pair

    def test_equal_first_labels(self):
        pair = self.prob.pair((0, 0, 1), (0, 0, 2, 2))
        assert 1 in swappable_positions(pair)

    def test_m_mismatch(self):
        pair = self.prob.pair((0, 0, 0), (0, 0, 0, 0))
        with pytest.raises(ValueError):
            swappable_positions(pair, m=3)

    def test_phi_and_complement(self):
        image = {(p.left, p.right) for p in map(phi_injection, self.prob.iter_SA())}
        assert len(image) == len(self.prob.S) * len(self.prob.A) == 75
        pairs = complement_pairs(F(5, 2), F(7, 3), 2, 2)
        assert {(p.left, p.right) for p in pairs} == LEFTOVER_PAIRS
        assert {(p.left, p.right) for p in self.prob.iter_RB()} - image == LEFTOVER_PAIRS
        assert gf(p.weight for p in pairs) == positivity_difference(F(5, 2), F(7, 3), 2, 2)
        assert all(complement_conditions(p) == (True, True) for p in pairs)

    def test_rejects_non_partitions(self):
        with pytest.raises(ValueError):
            phi_injection(self.prob.pair((0, 0, 0), (2, 2, 0, 0)))

    def test_missing_swap_is_reported(self, monkeypatch):
        import qhcf.posit

        monkeypatch.setattr(qhcf.posit, "_swap_valid", lambda pair, j: False)
        with pytest.raises(NoSwappablePosition):
            phi_injection(self.prob.pair((0, 0, 0), (0, 0, 0, 0)))


@given(problems())
def test_against_exhaustive_sets(args):
    rs, ab, i, m = args
    prob = PositivityProblem(rs, ab, i, m)
    S, A, R, B = oracle_sets(rs, ab, i, m)
    assert (set(prob.S), set(prob.A), set(prob.R), set(prob.B)) == (set(S), set(A), set(R), set(B))

    diff = positivity_difference(rs, ab, i, m)
    assert diff.is_nonnegative()
    expected = gf(sum(x) + sum(y) for x in R for y in B) - gf(sum(x) + sum(y) for x in S for y in A)
    assert diff == expected

    image = {}
    for sigma in S:
        for alpha in A:
            out = phi_injection(prob.pair(sigma, alpha))
            key = (out.left, out.right)
            assert key not in image
            assert out.weight == sum(sigma) + sum(alpha)
            assert out.left in R and out.right in B
            image[key] = (sigma, alpha)
    rest = {(x, y) for x in R for y in B} - set(image)
    comp = complement_pairs(rs, ab, i, m)
    assert {(p.left, p.right) for p in comp} == rest
    assert gf(p.weight for p in comp) == diff
    for p in comp:
        assert complement_conditions(p) == (True, True)
