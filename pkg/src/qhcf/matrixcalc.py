"""Polynomial transfer matrices R_m(q), L_m(q), their powers and the strip product X_G(q).

Matrices are indexed from 0 in code; docstrings use the 1-based ``(i, j)`` of
the formulas.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterable, Sequence

from .poly import IntLaurentPoly
from .qnum import qmultichoose
from .shape import CFrac

__all__ = [
    "PolyMatrix",
    "mat_R",
    "mat_L",
    "mat_Q",
    "mat_W",
    "mat_R_pow",
    "mat_L_pow",
    "mat_lambda",
    "product_X",
]

_ZERO = IntLaurentPoly()
_ONE = IntLaurentPoly.constant(1)


def _q(k: int) -> IntLaurentPoly:
    return IntLaurentPoly.monomial(k)


class PolyMatrix:
    """Immutable square matrix of :class:`IntLaurentPoly` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(IntLaurentPoly.coerce(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("PolyMatrix must be square and nonempty")
        self.rows = rows

    @classmethod
    def identity(cls, dim: int) -> PolyMatrix:
        return cls([[_ONE if i == j else _ZERO for j in range(dim)] for i in range(dim)])

    @classmethod
    def build(cls, dim: int, entry: Callable[[int, int], IntLaurentPoly | int]) -> PolyMatrix:
        """Build from a function of the 1-based indices ``(i, j)``."""
        return cls([[entry(i, j) for j in range(1, dim + 1)] for i in range(1, dim + 1)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> IntLaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = _ZERO
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return PolyMatrix(out)

    def __pow__(self, a: int) -> PolyMatrix:
        """Repeated multiplication (the slow route, kept for cross-checks)."""
        if a < 0:
            raise ValueError("negative matrix power")
        out = PolyMatrix.identity(self.dim)
        for _ in range(a):
            out = out @ self
        return out

    def map(self, f: Callable[[IntLaurentPoly], IntLaurentPoly]) -> PolyMatrix:
        return PolyMatrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(list(zip(*self.rows)))

    def subst_qinv(self) -> PolyMatrix:
        return self.map(IntLaurentPoly.subst_qinv)

    def shift(self, k: int) -> PolyMatrix:
        return self.map(lambda x: x.shift(k))

    def eval_q1(self) -> list[list[int]]:
        return [[x.eval_q1() for x in r] for r in self.rows]

    def column(self, j: int) -> tuple[IntLaurentPoly, ...]:
        return tuple(r[j] for r in self.rows)

    def minor2(self, rows: Sequence[int], cols: Sequence[int]) -> IntLaurentPoly:
        """2x2 minor on 0-based ``rows = (r1, r2)``, ``cols = (c1, c2)``."""
        (r1, r2), (c1, c2) = rows, cols
        return self.rows[r1][c1] * self.rows[r2][c2] - self.rows[r1][c2] * self.rows[r2][c1]

    def det(self) -> IntLaurentPoly:
        """Leibniz expansion; only meant for the small dimensions used here."""
        n = self.dim
        total = _ZERO
        for perm in permutations(range(n)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            term = _ONE
            for i, j in enumerate(perm):
                term = term * self.rows[i][j]
                if not term:
                    break
            total = total + (-term if inv % 2 else term)
        return total

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    def pretty(self) -> str:
        cells = [[x.pretty() for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"PolyMatrix({[[str(x) for x in r] for r in self.rows]})"


def mat_Q(m: int) -> PolyMatrix:
    """``diag(q^m, q^(m-1), ..., q, 1)``."""
    return PolyMatrix.build(m + 1, lambda i, j: _q(m + 1 - i) if i == j else _ZERO)


def mat_W(m: int) -> PolyMatrix:
    """Anti-diagonal permutation matrix; an involution."""
    return PolyMatrix.build(m + 1, lambda i, j: _ONE if i + j == m + 2 else _ZERO)


def mat_R(m: int) -> PolyMatrix:
    """``R_m(q) = R_m Q_m``: upper triangle with ``q^(m+1-j)`` in column ``j``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return PolyMatrix.build(m + 1, lambda i, j: _q(m + 1 - j) if i <= j else _ZERO)


def mat_L(m: int) -> PolyMatrix:
    """``L_m(q) = L_m Q_m``: lower triangle with ``q^(m+1-j)`` in column ``j``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return PolyMatrix.build(m + 1, lambda i, j: _q(m + 1 - j) if i >= j else _ZERO)


def _mb(a: int, k: int) -> IntLaurentPoly:
    return qmultichoose(a, k) if k >= 0 else _ZERO


def mat_R_pow(m: int, a: int) -> PolyMatrix:
    """Closed form of ``R_m(q)^a``: entry ``(i, i+k)`` is ``q^(a(m+1-i-k)) mbinom(a, k)_q``."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    if a == 0:
        return PolyMatrix.identity(m + 1)

    def entry(i, j):
        k = j - i
        if k < 0:
            return _ZERO
        return _mb(a, k).shift(a * (m + 1 - j))

    return PolyMatrix.build(m + 1, entry)


def mat_L_pow(m: int, a: int) -> PolyMatrix:
    """``(L_m(q)^a)_{ij} = q^(i-j) (R_m(q)^a)_{ji}``."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    r = mat_R_pow(m, a)
    return PolyMatrix.build(m + 1, lambda i, j: r[j - 1, i - 1].shift(i - j))


def mat_lambda(m: int, a: int, sign: str = "plus") -> PolyMatrix:
    """``Lambda+ = R_m(q)^a W_m`` or ``Lambda- = W_m L_m(q)^a`` from their entry formulas.

    plus:  ``q^((j-1)a) mbinom(a, m+2-i-j)_q``
    minus: ``q^(m+2-i-j) q^((i-1)a) mbinom(a, m+2-i-j)_q``
    """
    if a < 1:
        raise ValueError("a must be positive")
    if sign in ("plus", "+"):
        return PolyMatrix.build(m + 1, lambda i, j: _mb(a, m + 2 - i - j).shift((j - 1) * a))
    if sign in ("minus", "-"):
        return PolyMatrix.build(
            m + 1, lambda i, j: _mb(a, m + 2 - i - j).shift(m + 2 - i - j + (i - 1) * a)
        )
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


def product_X(cf: CFrac | Sequence[int], m: int) -> PolyMatrix:
    """``Lambda+(a_1) Lambda-(a_2) Lambda+(a_3) ...``, multiplied left to right."""
    terms = cf.terms if isinstance(cf, CFrac) else tuple(cf)
    if m < 1:
        raise ValueError("m must be at least 1")
    if not terms:
        raise ValueError("empty continued fraction")
    out = None
    for k, a in enumerate(terms):
        factor = mat_lambda(m, a, "plus" if k % 2 == 0 else "minus")
        out = factor if out is None else out @ factor
    return out
