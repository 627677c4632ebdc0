import pytest
from hypothesis import given
from hypothesis import strategies as st
from math import comb

from oracles import as_dict, qbinom_dict
from qhcf.poly import IntLaurentPoly
from qhcf.qnum import qbinom, qfactorial, qint, qmultichoose

ONE = IntLaurentPoly.constant(1)
small = st.integers(0, 9)


def test_qint_values():
    assert qint(1) == ONE
    assert qint(3) == IntLaurentPoly([1, 1, 1])
    assert qint(0) == IntLaurentPoly()


def test_qbinom_values():
    assert qbinom(2, 1) == IntLaurentPoly([1, 1])
    assert qbinom(4, 2) == IntLaurentPoly([1, 1, 2, 1, 1])
    assert qbinom(7, 0) == ONE


def test_qbinom_out_of_range_is_zero():
    assert not qbinom(3, -1) and not qbinom(3, 4) and not qbinom(-2, 1)


def test_qmultichoose_values():
    assert all(qmultichoose(1, k) == ONE for k in range(6))
    assert qmultichoose(2, 2) == IntLaurentPoly([1, 1, 1])
    assert qmultichoose(5, 0) == ONE
    assert not qmultichoose(3, -1)
    with pytest.raises(ValueError):
        qmultichoose(0, 2)


@given(small, small)
def test_qbinom_matches_subset_sum_oracle(n, k):
    assert as_dict(qbinom(n, k)) == qbinom_dict(n, k)


@given(small, small)
def test_qbinom_via_factorials(n, k):
    if k <= n:
        assert qbinom(n, k) * qfactorial(k) * qfactorial(n - k) == qfactorial(n)


@given(small, small)
def test_q1_specialisation(n, k):
    assert qbinom(n, k).eval_q1() == (comb(n, k) if k <= n else 0)
    if n >= 1:
        assert qmultichoose(n, k).eval_q1() == comb(n + k - 1, k)


@given(small, small)
def test_palindromic(n, k):
    if k <= n:
        assert qbinom(n, k) == qbinom(n, k).subst_qinv().shift(k * (n - k))


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("k", range(0, 9))
def test_fermat_identities(n, k):
    lhs = qmultichoose(n, k)
    first = sum((qmultichoose(n - 1, l).shift(l) for l in range(k + 1)), IntLaurentPoly())
    second = sum((qmultichoose(n - 1, l).shift((k - l) * (n - 1)) for l in range(k + 1)), IntLaurentPoly())
    assert lhs == first == second


def test_nonnegative_coefficients():
    assert all(qbinom(n, k).is_nonnegative() for n in range(12) for k in range(n + 1))
