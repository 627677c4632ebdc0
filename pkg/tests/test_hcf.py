from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import as_dict, cf_value, hankel_product_q1, mchoose, omega_dict, strip_cells
from qhcf.hcf import (
    as_cfrac,
    cf_vector_q1,
    hcf_q1,
    hcf_q_matrix,
    hcf_q_recursive,
    mgo_qrational,
    q_vector_matrix,
)
from qhcf.poly import IntLaurentPoly, RatFunc
from qhcf.qnum import qint, qmultichoose
from qhcf.shape import CFrac, build_strip, deleted_first_column, omega_gf

P = lambda *c: IntLaurentPoly(c)  # noqa: E731

FIVE_HALVES = RatFunc(P(1, 2, 3, 3, 3, 1, 1), P(1, 1, 1))
SEVEN_THIRDS = RatFunc(P(1, 2, 4, 4, 5, 4, 3, 1, 1), P(1, 1, 2, 1, 1))

cfs = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)


def q1_oracle(terms, i, m):
    """Ratio of first-column entries of the integer matrix product."""
    X = hankel_product_q1(terms, m)
    return Fraction(X[m - i][0], X[m][0])


class TestAtQEqualsOne:
    def test_vector(self):
        assert cf_vector_q1([5, 1, 2], 2)[::-1] == [Fraction(59, 3), Fraction(35, 6), 1]
        assert hcf_q1(Fraction(17, 3), 2, 2) == Fraction(59, 3)

    def test_five_halves(self):
        assert hcf_q1([2, 2], 2, 2) == Fraction(14, 3)

    @pytest.mark.parametrize("n, i, m", [(n, i, m) for n in range(1, 6) for m in range(1, 4) for i in range(m + 1)])
    def test_integers(self, n, i, m):
        assert hcf_q1([n], i, m) == mchoose(n, i)

    @given(cfs, st.integers(1, 3))
    def test_matches_matrix_ratio(self, terms, m):
        vec = cf_vector_q1(terms, m)
        assert vec[0] == 1
        for i in range(m + 1):
            assert vec[i] == q1_oracle(terms, i, m)

    @given(cfs)
    def test_m1_is_the_rational(self, terms):
        assert hcf_q1(terms, 1, 1) == cf_value(terms)

    def test_range_checks(self):
        with pytest.raises(ValueError):
            hcf_q1([2], 3, 2)
        with pytest.raises(ValueError):
            hcf_q1([2], 0, 0)


class TestQDeformed:
    def test_examples(self):
        for route in (hcf_q_matrix, hcf_q_recursive):
            assert route([2, 2], 2, 2) == FIVE_HALVES
            assert route(Fraction(7, 3), 2, 2) == SEVEN_THIRDS

    def test_matrix_route_is_normalised(self):
        f = hcf_q_matrix([2, 3], 2, 2)
        assert f.numerator == SEVEN_THIRDS.numerator and f.denominator == SEVEN_THIRDS.denominator

    @given(st.integers(1, 6), st.integers(1, 3))
    def test_integer_base_case(self, n, m):
        for i in range(m + 1):
            assert hcf_q_recursive([n], i, m) == RatFunc(qmultichoose(n, i))
            assert hcf_q_matrix([n], i, m) == RatFunc(qmultichoose(n, i))

    def test_i_zero(self):
        assert hcf_q_matrix([2, 3, 1], 0, 2) == RatFunc(1)

    @given(cfs, st.integers(1, 3))
    def test_routes_agree(self, terms, m):
        for i in range(m + 1):
            f, g = hcf_q_matrix(terms, i, m), hcf_q_recursive(terms, i, m)
            assert f == g
            assert f.eval_q1() == hcf_q1(terms, i, m)
            assert f.numerator.is_nonnegative() and f.denominator.is_nonnegative()

    @given(st.lists(st.integers(1, 3), min_size=1, max_size=4).map(tuple), st.integers(1, 2))
    def test_ratio_of_ppartition_counts(self, terms, m):
        cells = strip_cells(terms)
        den = omega_dict(cells, m, m + 1, 1)
        nums, d = q_vector_matrix(terms, m)
        assert as_dict(d) == den
        for i in range(m + 1):
            assert as_dict(nums[i]) == omega_dict(cells, m, m + 1 - i, 1)

    @given(st.lists(st.integers(1, 3), min_size=2, max_size=4).map(tuple), st.integers(1, 3))
    def test_denominator_counts_smaller_strip(self, terms, m):
        _, den = q_vector_matrix(terms, m)
        smaller = build_strip(deleted_first_column(CFrac(terms)))
        assert den == omega_gf(smaller, m, 1, 1)

    @given(cfs, st.integers(1, 3))
    def test_parity_invariance(self, terms, m):
        cf = CFrac(terms)
        alt = cf.alternate()
        if alt is not None:
            for i in range(m + 1):
                assert hcf_q_matrix(cf, i, m) == hcf_q_matrix(alt, i, m)


class TestNestedForm:
    def test_integers(self):
        for n in range(1, 6):
            assert mgo_qrational([n]) == RatFunc(qint(n))

    def test_five_halves(self):
        assert mgo_qrational([2, 2]) == hcf_q_matrix([2, 2], 1, 1)
        assert mgo_qrational([2, 2]) == RatFunc(P(1, 2, 1, 1), P(1, 1))

    @given(cfs)
    def test_matches_m1(self, terms):
        assert mgo_qrational(terms) == hcf_q_matrix(terms, 1, 1)
        assert mgo_qrational(terms).eval_q1() == cf_value(terms)

    def test_accepts_rationals(self):
        assert as_cfrac("17/3") == CFrac.of(5, 1, 2)
        assert as_cfrac((2, 2)) == CFrac.of(2, 2)
