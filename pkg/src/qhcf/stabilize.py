"""Series expansions of higher q-rationals and their stabilisation at irrationals.

For an infinite continued fraction ``[a_1, a_2, ...]`` with convergents
``x_n`` and partial sums ``S_n = a_1 + ... + a_n``, the series of
``r^q_{i,m}(x_n)`` and ``r^q_{i,m}(x_{n-1})`` first differ no earlier than
``q^(S_n - 1)`` for even ``n`` and ``q^(S_{n-1} - 1)`` for odd ``n``,
independently of ``m``.  Consequently an even convergent is already correct
through ``q^(S_n - 2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .hcf import as_cfrac, hcf_q_matrix
from .poly import SeriesPrefix, series_expand
from .shape import CFrac

__all__ = [
    "IrrationalCF",
    "expand_hcf",
    "stable_series",
    "stabilizing_length",
    "difference_bound",
    "agreement_degree",
    "golden_ratio",
    "sqrt2",
    "euler_e",
]


@dataclass(frozen=True)
class IrrationalCF:
    """An infinite continued fraction: a finite prefix followed by a periodic or generated tail.

    ``generator`` receives the 1-based position of the term and returns it.
    """

    prefix: tuple[int, ...] = ()
    period: tuple[int, ...] | None = None
    generator: Callable[[int], int] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(a) for a in self.prefix))
        if self.period is not None:
            object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        if (self.period is None) == (self.generator is None):
            raise ValueError("give exactly one of period= or generator=")
        if self.period is not None and not self.period:
            raise ValueError("period must be nonempty")
        if any(a < 1 for a in self.prefix + (self.period or ())):
            raise ValueError("continued fraction terms must be positive")

    @classmethod
    def periodic(cls, prefix: Sequence[int], period: Sequence[int]) -> IrrationalCF:
        return cls(tuple(prefix), tuple(period))

    @classmethod
    def from_function(cls, f: Callable[[int], int], prefix: Sequence[int] = ()) -> IrrationalCF:
        return cls(tuple(prefix), None, f)

    @classmethod
    def parse(cls, text: str) -> IrrationalCF:
        """Parse ``"1,3,15:periodic=1,3,3"`` (a prefix, then a repeating block)."""
        head, sep, tail = text.partition(":")
        if not sep or not tail.startswith("periodic="):
            raise ValueError(f"expected 'a,b,...:periodic=c,d,...', got {text!r}")

        def ints(s):
            return tuple(int(t) for t in s.replace(" ", "").split(",") if t)

        return cls.periodic(ints(head), ints(tail[len("periodic="):]))

    def term(self, k: int) -> int:
        """The 1-based term ``a_k``."""
        if k < 1:
            raise IndexError("terms are numbered from 1")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        if self.period is not None:
            return self.period[(k - len(self.prefix) - 1) % len(self.period)]
        a = int(self.generator(k))
        if a < 1:
            raise ValueError(f"generator produced non-positive term {a} at position {k}")
        return a

    def terms(self, n: int) -> tuple[int, ...]:
        return tuple(self.term(k) for k in range(1, n + 1))

    def convergent(self, n: int) -> CFrac:
        return CFrac(self.terms(n))


def golden_ratio() -> IrrationalCF:
    return IrrationalCF.periodic((), (1,))


def sqrt2() -> IrrationalCF:
    return IrrationalCF.periodic((1,), (2,))


def euler_e() -> IrrationalCF:
    """``e = [2, 1, 2, 1, 1, 4, 1, 1, 6, ...]``."""
    def a(k):
        if k == 1:
            return 2
        return 2 * (k // 3) if k % 3 == 0 else 1
    return IrrationalCF.from_function(a)


def expand_hcf(cf, i: int, m: int, order: int) -> SeriesPrefix:
    """Power series of ``r^q_{i,m}(x)`` through ``q^order``."""
    f = hcf_q_matrix(as_cfrac(cf), i, m)
    if f.denominator.coeff(0) != 1 or f.denominator.min_degree != 0:
        raise ArithmeticError(f"denominator {f.denominator} should have constant term 1")
    return series_expand(f, order)


def difference_bound(cf) -> int:
    """Exponent ``N`` with ``r(x_n) - r(x_{n-1}) = O(q^N)`` for ``x_n = cf``, ``x_{n-1}`` its truncation."""
    a = as_cfrac(cf).terms
    n = len(a)
    if n < 2:
        raise ValueError("need at least two terms to compare with the previous convergent")
    return sum(a) - 1 if n % 2 == 0 else sum(a[:-1]) - 1


def stabilizing_length(x: IrrationalCF, order: int) -> int:
    """Smallest even ``n`` whose convergent is guaranteed correct through ``q^order``."""
    n, s = 0, 0
    while True:
        n += 2
        s += x.term(n - 1) + x.term(n)
        if s - 2 >= order:
            return n


def stable_series(x: IrrationalCF, i: int, m: int, order: int, extra_terms: int = 0) -> SeriesPrefix:
    """The limit series of ``r^q_{i,m}(x_n)`` through ``q^order``.

    Uses the first even convergent past the guarantee; ``extra_terms``
    consumes further terms, which must not change the answer.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = stabilizing_length(x, order) + extra_terms
    return expand_hcf(x.convergent(n), i, m, order)


def agreement_degree(cf_a, cf_b, i: int, m: int, cap: int | None = None) -> int:
    """Largest ``D <= cap`` such that the two series agree through ``q^D`` (``-1`` if c_0 differs)."""
    a, b = as_cfrac(cf_a), as_cfrac(cf_b)
    if cap is None:
        cap = sum(a.terms) + sum(b.terms)
    return expand_hcf(a, i, m, cap).agreement_degree(expand_hcf(b, i, m, cap))
