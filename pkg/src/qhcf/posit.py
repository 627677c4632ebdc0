"""Positivity of ``B R - A S`` and the prefix-swap injection behind it.

For ``r/s > a/b >= 1`` write ``r^q_{i,m}(r/s) = R/S`` and
``r^q_{i,m}(a/b) = A/B`` with numerators and denominators taken as
P-partition generating functions:

* R: P-partitions of G(r/s) with first part ``<= i``
* S: P-partitions of G(r/s) with first part ``0``
* A, B: the same two conditions on G(a/b).

Swapping labels on a common initial run of cells sends S x A into R x B
without changing total weight, so ``B R - A S`` counts what is left over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .hcf import hcf_q_matrix
from .poly import IntLaurentPoly
from .shape import (
    UP,
    BorderStrip,
    CFrac,
    build_strip,
    common_prefix_length,
    is_ppartition,
    iter_labelings,
)

__all__ = [
    "OrderViolation",
    "PositivityViolation",
    "NoSwappablePosition",
    "PositivityProblem",
    "PartitionPair",
    "positivity_difference",
    "swappable_positions",
    "phi_injection",
    "complement_pairs",
    "complement_conditions",
]


class OrderViolation(ValueError):
    """Inputs do not satisfy ``r/s > a/b >= 1``."""


class PositivityViolation(AssertionError):
    """A negative coefficient appeared.  Positivity always holds, so this signals a bug."""


class NoSwappablePosition(RuntimeError):
    pass


def _rational(x) -> Fraction:
    if isinstance(x, CFrac):
        return x.value
    return Fraction(x)


@dataclass(frozen=True)
class PositivityProblem:
    """Everything fixed by ``(r/s, a/b, i, m)``: the two strips and the common run length ``d``."""

    rs: Fraction
    ab: Fraction
    i: int
    m: int

    def __post_init__(self):
        rs, ab = _rational(self.rs), _rational(self.ab)
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "ab", ab)
        if ab < 1:
            raise OrderViolation(f"need a/b >= 1, got {ab}")
        if rs <= ab:
            raise OrderViolation(f"need r/s > a/b, got {rs} <= {ab}")
        if self.m < 1 or not 0 <= self.i <= self.m:
            raise ValueError(f"need 0 <= i <= m and m >= 1, got i={self.i}, m={self.m}")

    @cached_property
    def left_strip(self) -> BorderStrip:
        return build_strip(CFrac.from_rational(self.rs))

    @cached_property
    def right_strip(self) -> BorderStrip:
        return build_strip(CFrac.from_rational(self.ab))

    @cached_property
    def d(self) -> int:
        """Cells shared by both strips before their shapes part ways."""
        return common_prefix_length(self.left_strip, self.right_strip)

    @property
    def positions(self) -> range:
        # with a/b = 1 the right strip is empty and only the trivial swap exists
        return range(1, self.d + 1) if self.d else range(0, 1)

    def _labelings(self, strip: BorderStrip, first_max: int) -> list[tuple[int, ...]]:
        return list(iter_labelings(strip, self.m, first_max=first_max))

    @cached_property
    def R(self) -> list[tuple[int, ...]]:
        return self._labelings(self.left_strip, self.i)

    @cached_property
    def S(self) -> list[tuple[int, ...]]:
        return self._labelings(self.left_strip, 0)

    @cached_property
    def A(self) -> list[tuple[int, ...]]:
        return self._labelings(self.right_strip, self.i)

    @cached_property
    def B(self) -> list[tuple[int, ...]]:
        return self._labelings(self.right_strip, 0)

    def in_SA(self, left: Sequence[int], right: Sequence[int]) -> bool:
        return left[0] == 0 and (not right or right[0] <= self.i)

    def in_RB(self, left: Sequence[int], right: Sequence[int]) -> bool:
        return left[0] <= self.i and (not right or right[0] == 0)

    def pair(self, left: Sequence[int], right: Sequence[int]) -> PartitionPair:
        return PartitionPair(tuple(left), tuple(right), self.d, self)

    def iter_SA(self) -> Iterator[PartitionPair]:
        for sigma in self.S:
            for alpha in self.A:
                yield self.pair(sigma, alpha)

    def iter_RB(self) -> Iterator[PartitionPair]:
        for rho in self.R:
            for beta in self.B:
                yield self.pair(rho, beta)


@dataclass(frozen=True)
class PartitionPair:
    """``left`` labels G(r/s), ``right`` labels G(a/b); ``d`` is the shared run length."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    d: int
    problem: PositivityProblem = field(compare=False, hash=False, repr=False)

    @property
    def weight(self) -> int:
        return sum(self.left) + sum(self.right)

    def swapped(self, j: int) -> PartitionPair:
        """Exchange the labels of cells ``1..j`` between the two sides."""
        l, r = self.left, self.right
        return PartitionPair(r[:j] + l[j:], l[:j] + r[j:], self.d, self.problem)


def _seam_ok(strip: BorderStrip, labels: Sequence[int], j: int) -> bool:
    # the only constraint a prefix swap can break is between cells j and j+1
    if j == 0 or j >= len(strip):
        return True
    step = strip.steps[j - 1]
    if step == UP:
        return labels[j - 1] >= labels[j]
    return labels[j - 1] <= labels[j]


def _swap_valid(pair: PartitionPair, j: int) -> bool:
    prob = pair.problem
    new = pair.swapped(j)
    if not (_seam_ok(prob.left_strip, new.left, j) and _seam_ok(prob.right_strip, new.right, j)):
        return False
    # the swapped pair must land in the opposite family
    if prob.in_SA(pair.left, pair.right) and not prob.in_RB(new.left, new.right):
        return False
    if prob.in_RB(pair.left, pair.right) and not prob.in_SA(new.left, new.right):
        return False
    return True


def swappable_positions(pair: PartitionPair, m: int | None = None) -> list[int]:
    """Positions ``j`` in ``1..d`` whose prefix swap gives a valid pair in the other family."""
    if m is not None and m != pair.problem.m:
        raise ValueError("m does not match the pair's problem")
    return [j for j in pair.problem.positions if _swap_valid(pair, j)]


def _first_swappable(pair: PartitionPair) -> int | None:
    for j in pair.problem.positions:
        if _swap_valid(pair, j):
            return j
    return None


def phi_injection(pair: PartitionPair, m: int | None = None) -> PartitionPair:
    """Swap labels up to and including the first swappable position."""
    prob = pair.problem
    if m is not None and m != prob.m:
        raise ValueError("m does not match the pair's problem")
    if not prob.in_SA(pair.left, pair.right):
        raise ValueError("phi is defined on S x A")
    if not (is_ppartition(prob.left_strip, pair.left, prob.m) and is_ppartition(prob.right_strip, pair.right, prob.m)):
        raise ValueError("both sides must be P-partitions")
    j = _first_swappable(pair)
    if j is None:
        raise NoSwappablePosition(f"no swappable position in {pair.left} / {pair.right}")
    return pair.swapped(j)


def complement_pairs(rs, ab, i: int, m: int) -> list[PartitionPair]:
    """Pairs in R x B with no swappable position, in enumeration order."""
    prob = PositivityProblem(rs, ab, i, m)
    return [p for p in prob.iter_RB() if _first_swappable(p) is None]


def positivity_difference(rs, ab, i: int, m: int) -> IntLaurentPoly:
    """``B(q) R(q) - A(q) S(q)``; raises if any coefficient is negative."""
    prob = PositivityProblem(rs, ab, i, m)
    f = hcf_q_matrix(CFrac.from_rational(prob.rs), i, m)
    g = hcf_q_matrix(CFrac.from_rational(prob.ab), i, m)
    diff = g.denominator * f.numerator - g.numerator * f.denominator
    if not diff.is_nonnegative():
        raise PositivityViolation(f"B R - A S = {diff} has a negative coefficient")
    return diff


def complement_conditions(pair: PartitionPair) -> tuple[bool, bool]:
    """The two combinatorial conditions stated for complement pairs, read literally.

    First: for ``1 <= j < d`` both ``max(rho_j, beta_j) > min(rho_{j+1}, beta_{j+1})``
    and ``min(rho_j, beta_j) < max(rho_{j+1}, beta_{j+1})``.
    Second: ``rho_d > beta_{d+1}`` or ``beta_d < rho_{d+1}``, where a cell
    past the end of its strip makes that clause false.
    """
    rho, beta, d = pair.left, pair.right, pair.d
    first = all(
        max(rho[j - 1], beta[j - 1]) > min(rho[j], beta[j])
        and min(rho[j - 1], beta[j - 1]) < max(rho[j], beta[j])
        for j in range(1, d)
    )
    if d == 0:
        return first, True
    c1 = d < len(beta) and rho[d - 1] > beta[d]
    c2 = d < len(rho) and beta[d - 1] < rho[d]
    return first, c1 or c2
