"""Higher continued fractions r_{i,m} and their q-deformations.

Three independent ways to get ``r^q_{i,m}(x)``:

* :func:`hcf_q_matrix` reads the first column of the strip product X_G(q);
* :func:`hcf_q_recursive` runs the nested recurrence with ``q -> 1/q`` at
  each level;
* ``shape.omega_gf`` counts P-partitions directly (used by the tests).

At q=1 :func:`hcf_q1` gives the rational numbers themselves.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence

from .matrixcalc import product_X
from .poly import IntLaurentPoly, RatFunc
from .qnum import qint, qmultichoose
from .shape import CFrac

__all__ = [
    "as_cfrac",
    "hcf_q1",
    "cf_vector_q1",
    "hcf_q_recursive",
    "q_vector_recursive",
    "hcf_q_matrix",
    "q_vector_matrix",
    "mgo_qrational",
]


def as_cfrac(x) -> CFrac:
    """Accept a CFrac, a sequence of terms, or a rational (Fraction/int/"r/s")."""
    if isinstance(x, CFrac):
        return x
    if isinstance(x, (list, tuple)):
        return CFrac(tuple(x))
    return CFrac.from_rational(Fraction(x))


def _check(i: int, m: int) -> None:
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0 <= i <= m:
        raise ValueError(f"need 0 <= i <= m, got i={i}, m={m}")


def _mchoose(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def cf_vector_q1(cf, m: int) -> list[Fraction]:
    """``[r_{0,m}(x), r_{1,m}(x), ..., r_{m,m}(x)]`` at q=1 (note: ascending in i)."""
    cf = as_cfrac(cf)
    _check(0, m)
    a = cf.terms
    vec = [Fraction(_mchoose(a[-1], i)) for i in range(m + 1)]
    for a1 in reversed(a[:-1]):
        top = vec[m]
        vec = [
            sum(_mchoose(a1, k) * vec[m - i + k] for k in range(i + 1)) / top
            for i in range(m + 1)
        ]
    return vec


def hcf_q1(cf, i: int, m: int) -> Fraction:
    """``r_{i,m}(x)`` for the rational ``x`` with the given continued fraction."""
    _check(i, m)
    return cf_vector_q1(cf, m)[i]


def q_vector_recursive(cf, m: int) -> tuple[list[IntLaurentPoly], IntLaurentPoly]:
    """Numerators ``N_0..N_m`` and a shared denominator ``D`` with ``r^q_{i,m}(x) = N_i / D``.

    The recurrence is run on projective coordinates: at every level all the
    ``r^q_{k,m}`` share one denominator, so ``r_{m-k}(x')/r_m(x')`` only needs
    the numerators of the previous level.
    """
    cf = as_cfrac(cf)
    _check(0, m)
    a = cf.terms
    nums = [qmultichoose(a[-1], i) for i in range(m + 1)]
    den = IntLaurentPoly.constant(1)
    for a1 in reversed(a[:-1]):
        inv = [p.subst_qinv() for p in nums]
        new = []
        for i in range(m + 1):
            acc = IntLaurentPoly()
            for k in range(i + 1):
                acc = acc + (qmultichoose(a1, i - k) * inv[m - k]).shift(k * a1)
            new.append(acc)
        nums, den = new, inv[m]
    return nums, den


def hcf_q_recursive(cf, i: int, m: int) -> RatFunc:
    _check(i, m)
    nums, den = q_vector_recursive(cf, m)
    return RatFunc(nums[i], den)


def q_vector_matrix(cf, m: int) -> tuple[list[IntLaurentPoly], IntLaurentPoly]:
    """Like :func:`q_vector_recursive` but read off the first column of X_G(q).

    The column is divided by its common power of q so the entries are the
    P-partition generating functions ``Omega^{m+1-i,1}`` themselves, and the
    denominator has constant term 1.
    """
    cf = as_cfrac(cf)
    _check(0, m)
    col = product_X(cf, m).column(0)
    shift = col[m].min_degree
    nums = [col[m - i].shift(-shift) for i in range(m + 1)]
    return nums, nums[0]


def hcf_q_matrix(cf, i: int, m: int) -> RatFunc:
    """``r^q_{i,m}(x) = X_{m+1-i,1} / X_{m+1,1}``, normalised to ``Omega^{m+1-i,1}(G) / Omega(G')``."""
    _check(i, m)
    nums, den = q_vector_matrix(cf, m)
    return RatFunc(nums[i], den)


def mgo_qrational(cf) -> RatFunc:
    """The nested q-continued fraction for m=1 on an even-length CF.

    ``[a_1]_q + q^{a_1} / ([a_2]_{1/q} + q^{-a_2} / ([a_3]_q + q^{a_3} / ...))``.
    Integers return ``[n]_q``; odd-length input is converted to even length first.
    """
    cf = as_cfrac(cf)
    if len(cf) == 1:
        return RatFunc(qint(cf[0]))
    a = cf.with_parity(even=True).terms
    n = len(a)
    # innermost level is a_n with n even: [a_n]_{1/q}
    num, den = qint(a[-1]).subst_qinv(), IntLaurentPoly.constant(1)
    for k in range(n - 1, 0, -1):  # 1-based position k of a_k
        ak = a[k - 1]
        if k % 2 == 1:
            head, link = qint(ak), IntLaurentPoly.monomial(ak)
        else:
            head, link = qint(ak).subst_qinv(), IntLaurentPoly.monomial(-ak)
        # head + link / (num/den) = (head*num + link*den) / num
        num, den = head * num + link * den, num
    return RatFunc(num, den).normalized()
