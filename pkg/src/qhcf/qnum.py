"""q-integers, Gaussian binomials and q-multichoose coefficients."""

from __future__ import annotations

from functools import lru_cache

from .poly import IntLaurentPoly

__all__ = ["qint", "qfactorial", "qbinom", "qmultichoose"]

_ZERO = IntLaurentPoly()
_ONE = IntLaurentPoly.constant(1)


def qint(n: int) -> IntLaurentPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("qint is defined for n >= 0")
    return IntLaurentPoly([1] * n)


def qfactorial(n: int) -> IntLaurentPoly:
    if n < 0:
        raise ValueError("qfactorial is defined for n >= 0")
    out = _ONE
    for k in range(2, n + 1):
        out = out * qint(k)
    return out


@lru_cache(maxsize=None)
def _binom_column(k: int, n_max: int) -> tuple[IntLaurentPoly, ...]:
    # binom(n, k)_q for n = 0..n_max via binom(n,j) = binom(n-1,j-1) + q^j binom(n-1,j)
    prev = [_ONE] + [_ZERO] * k  # row n = 0, entries j = 0..k
    col = [prev[k]]
    for n in range(1, n_max + 1):
        cur = [_ONE]
        for j in range(1, k + 1):
            cur.append(prev[j - 1] + prev[j].shift(j))
        col.append(cur[k])
        prev = cur
    return tuple(col)


@lru_cache(maxsize=4096)
def qbinom(n: int, k: int) -> IntLaurentPoly:
    """Gaussian binomial ``binom(n, k)_q``, zero outside ``0 <= k <= n``.

    Built from the q-Pascal recurrence, so no polynomial division is needed.
    """
    if n < 0 or k < 0 or k > n:
        return _ZERO
    k = min(k, n - k)  # symmetric in k <-> n-k
    # grow the cached column in coarse steps so repeated calls share work
    n_max = max(n, 8)
    n_max = 1 << (n_max - 1).bit_length()
    return _binom_column(k, n_max)[n]


def qmultichoose(a: int, k: int) -> IntLaurentPoly:
    """``mbinom(a, k)_q = binom(a + k - 1, k)_q``; zero for ``k < 0``."""
    if a < 1:
        raise ValueError("qmultichoose needs a >= 1")
    if k < 0:
        return _ZERO
    return qbinom(a + k - 1, k)
