"""Exact Laurent polynomials in q, rational functions of q, and truncated series.

Coefficients are Python ints, so everything is arbitrary precision.  Values are
immutable; every operation returns a new object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "IntLaurentPoly",
    "RatFunc",
    "SeriesPrefix",
    "NonUnitConstantTerm",
    "NonIntegerSeries",
    "Q",
    "poly_add",
    "poly_mul",
    "poly_neg",
    "poly_subst_qinv",
    "poly_eval_q1",
    "series_expand",
]


class NonUnitConstantTerm(ArithmeticError):
    """The denominator has no usable constant term for a power-series expansion."""


class NonIntegerSeries(ArithmeticError):
    """Long division produced a coefficient that is not an integer."""


Scalar = int
PolyLike = Union["IntLaurentPoly", int]


def _trim(coeffs: Sequence[int], min_degree: int) -> tuple[tuple[int, ...], int]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), min_degree + lo


class IntLaurentPoly:
    """A Laurent polynomial ``sum(c_k q^k)`` with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``q**(min_degree + k)``.  The stored
    coefficient list is always trimmed, and the zero polynomial is
    ``IntLaurentPoly(())`` with ``min_degree == 0``.
    """

    __slots__ = ("_coeffs", "_min")

    def __init__(self, coeffs: Iterable[int] = (), min_degree: int = 0):
        c = [int(x) for x in coeffs]
        self._coeffs, self._min = _trim(c, int(min_degree))

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], min_degree: int) -> IntLaurentPoly:
        # caller guarantees the coefficients are already trimmed
        p = object.__new__(cls)
        p._coeffs = coeffs
        p._min = min_degree if coeffs else 0
        return p

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntLaurentPoly:
        if coeff == 0:
            return cls._raw((), 0)
        return cls._raw((int(coeff),), int(degree))

    @classmethod
    def constant(cls, c: int) -> IntLaurentPoly:
        return cls.monomial(0, c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> IntLaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls._raw((), 0)
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, x: PolyLike) -> IntLaurentPoly:
        if isinstance(x, IntLaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a polynomial")

    # -- basic accessors ----------------------------------------------
    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def min_degree(self) -> int:
        return self._min

    @property
    def max_degree(self) -> int:
        """Highest exponent present; ``min_degree - 1`` for the zero polynomial."""
        return self._min + len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def coeff(self, k: int) -> int:
        idx = k - self._min
        if 0 <= idx < len(self._coeffs):
            return self._coeffs[idx]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` for the nonzero terms."""
        for k, c in enumerate(self._coeffs):
            if c:
                yield self._min + k, c

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs)

    # -- ring operations ----------------------------------------------
    def __add__(self, other: PolyLike) -> IntLaurentPoly:
        if isinstance(other, int):
            other = IntLaurentPoly.constant(other)
        elif not isinstance(other, IntLaurentPoly):
            return NotImplemented
        if not self._coeffs:
            return other
        if not other._coeffs:
            return self
        lo = min(self._min, other._min)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        off = self._min - lo
        for k, c in enumerate(self._coeffs):
            out[off + k] = c
        off = other._min - lo
        for k, c in enumerate(other._coeffs):
            out[off + k] += c
        return IntLaurentPoly(out, lo)

    __radd__ = __add__

    def __neg__(self) -> IntLaurentPoly:
        return IntLaurentPoly._raw(tuple(-c for c in self._coeffs), self._min)

    def __sub__(self, other: PolyLike) -> IntLaurentPoly:
        if isinstance(other, int):
            other = IntLaurentPoly.constant(other)
        elif not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolyLike) -> IntLaurentPoly:
        return (-self) + other

    def __mul__(self, other: PolyLike) -> IntLaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return IntLaurentPoly._raw((), 0)
            return IntLaurentPoly._raw(tuple(c * other for c in self._coeffs), self._min)
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntLaurentPoly._raw((), 0)
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        # schoolbook; rows indexed by the shorter operand
        for j, y in enumerate(b):
            if y:
                for i, x in enumerate(a):
                    out[i + j] += x * y
        # product of two trimmed polynomials over Z is trimmed at both ends
        return IntLaurentPoly._raw(tuple(out), self._min + other._min)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntLaurentPoly:
        if n < 0:
            if len(self._coeffs) == 1 and self._coeffs[0] in (1, -1):
                return IntLaurentPoly.monomial(-self._min * (-n), self._coeffs[0] ** (-n))
            raise ValueError("negative powers are only defined for unit monomials")
        result = IntLaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> IntLaurentPoly:
        """Multiply by ``q**k``."""
        if not self._coeffs:
            return self
        return IntLaurentPoly._raw(self._coeffs, self._min + k)

    def subst_qinv(self) -> IntLaurentPoly:
        """Return ``p(1/q)``."""
        if not self._coeffs:
            return self
        return IntLaurentPoly._raw(self._coeffs[::-1], -self.max_degree)

    def eval_q1(self) -> int:
        return sum(self._coeffs)

    def __call__(self, x):
        """Evaluate at ``x`` (int, Fraction or anything supporting ** and +)."""
        if not self._coeffs:
            return 0
        if self._min < 0 and isinstance(x, int):
            x = Fraction(x)
        total = 0
        for k, c in self.terms():
            total += c * x**k
        return total

    # -- comparison & hashing -----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntLaurentPoly.constant(other)
        if not isinstance(other, IntLaurentPoly):
            return NotImplemented
        return self._min == other._min and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._min, self._coeffs))

    # -- rendering ----------------------------------------------------
    def __repr__(self) -> str:
        return f"IntLaurentPoly({list(self._coeffs)!r}, min_degree={self._min})"

    def __str__(self) -> str:
        """Canonical text form, e.g. ``1*q^0 + 2*q^1 - 3*q^4``."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, c in self.terms():
            body = f"{abs(c)}*q^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def pretty(self, var: str = "q") -> str:
        """Human-oriented rendering such as ``1 + 2q + 3q^2``."""
        if not self._coeffs:
            return "0"
        out = []
        for k, c in self.terms():
            mag = abs(c)
            if k == 0:
                mono = str(mag)
            else:
                pw = var if k == 1 else f"{var}^{k}"
                mono = pw if mag == 1 else f"{mag}{pw}"
            if not out:
                out.append(mono if c > 0 else f"-{mono}")
            else:
                out.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(out)

    def to_json(self) -> dict:
        return {"minDegree": self._min, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> IntLaurentPoly:
        return cls([int(c) for c in obj["coeffs"]], int(obj["minDegree"]))


Q = IntLaurentPoly.monomial(1)


def poly_add(a: PolyLike, b: PolyLike) -> IntLaurentPoly:
    return IntLaurentPoly.coerce(a) + IntLaurentPoly.coerce(b)


def poly_mul(a: PolyLike, b: PolyLike) -> IntLaurentPoly:
    return IntLaurentPoly.coerce(a) * IntLaurentPoly.coerce(b)


def poly_neg(a: PolyLike) -> IntLaurentPoly:
    return -IntLaurentPoly.coerce(a)


def poly_subst_qinv(p: PolyLike) -> IntLaurentPoly:
    return IntLaurentPoly.coerce(p).subst_qinv()


def poly_eval_q1(p: PolyLike) -> int:
    return IntLaurentPoly.coerce(p).eval_q1()


class RatFunc:
    """A quotient of two Laurent polynomials, kept without GCD reduction.

    The sign is normalised so the lowest-degree coefficient of the denominator
    is positive.  Equality is decided by cross-multiplication, so two
    representations of the same function compare equal.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: PolyLike, denominator: PolyLike = 1):
        num = IntLaurentPoly.coerce(numerator)
        den = IntLaurentPoly.coerce(denominator)
        if den.is_zero():
            raise ZeroDivisionError("RatFunc denominator is zero")
        if den.coeffs[0] < 0:
            num, den = -num, -den
        self.numerator = num
        self.denominator = den

    @classmethod
    def coerce(cls, x) -> RatFunc:
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntLaurentPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # equality is not structural

    def __add__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        if self.denominator == o.denominator:
            return RatFunc(self.numerator + o.numerator, self.denominator)
        return RatFunc(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.numerator, self.denominator)

    def __sub__(self, other) -> RatFunc:
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other) -> RatFunc:
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        return RatFunc(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        o = RatFunc.coerce(other)
        return RatFunc(self.numerator * o.denominator, self.denominator * o.numerator)

    def __rtruediv__(self, other) -> RatFunc:
        return RatFunc.coerce(other) / self

    def subst_qinv(self) -> RatFunc:
        return RatFunc(self.numerator.subst_qinv(), self.denominator.subst_qinv())

    def normalized(self) -> RatFunc:
        """Same function, rescaled by a power of q so the denominator starts at q^0."""
        k = self.denominator.min_degree
        return RatFunc(self.numerator.shift(-k), self.denominator.shift(-k))

    def eval_q1(self) -> Fraction:
        den = self.denominator.eval_q1()
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at q=1")
        return Fraction(self.numerator.eval_q1(), den)

    def __repr__(self) -> str:
        return f"RatFunc({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}


@dataclass(frozen=True)
class SeriesPrefix:
    """Coefficients ``c_0 .. c_order`` of a power series; nothing is claimed beyond ``order``."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.order < 0 or len(self.coeffs) != self.order + 1:
            raise ValueError("SeriesPrefix needs exactly order+1 coefficients")

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient of q^{k} is not known (order {self.order})")
        return self.coeffs[k]

    def truncate(self, order: int) -> SeriesPrefix:
        if order > self.order:
            raise ValueError("cannot extend a series prefix")
        return SeriesPrefix(self.coeffs[: order + 1], order)

    def agreement_degree(self, other: SeriesPrefix) -> int:
        """Largest D with equal coefficients through q^D (capped at the common order, -1 if c_0 differs)."""
        cap = min(self.order, other.order)
        for k in range(cap + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k - 1
        return cap

    def as_poly(self) -> IntLaurentPoly:
        return IntLaurentPoly(self.coeffs, 0)


def series_expand(f: RatFunc, order: int) -> SeriesPrefix:
    """Power-series coefficients of ``f`` at q=0 through ``q**order``.

    The denominator must start at q^0 with a nonzero constant term; the
    numerator must have no negative powers.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num, den = f.numerator, f.denominator
    if den.min_degree != 0 or den.coeff(0) == 0:
        raise NonUnitConstantTerm(f"denominator {den} does not have a nonzero q^0 lowest term")
    if num.min_degree < 0:
        raise ValueError("numerator has negative powers of q; normalise first")
    d0 = den.coeff(0)
    dc = den.coeffs
    out: list[int] = []
    for k in range(order + 1):
        acc = num.coeff(k)
        for j in range(1, min(k, len(dc) - 1) + 1):
            acc -= dc[j] * out[k - j]
        c, r = divmod(acc, d0)
        if r:
            raise NonIntegerSeries(f"coefficient of q^{k} is {Fraction(acc, d0)}")
        out.append(c)
    return SeriesPrefix(tuple(out), order)
