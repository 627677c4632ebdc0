"""Worked examples with known answers, runnable as a self-check (``qhcf verify``)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .hcf import cf_vector_q1, hcf_q1, hcf_q_matrix, hcf_q_recursive, mgo_qrational
from .lgv import build_network, disjoint_pair_sum, path_weight_matrix
from .matrixcalc import mat_L, mat_R, product_X
from .poly import IntLaurentPoly, RatFunc
from .posit import complement_pairs, positivity_difference
from .shape import CFrac, build_strip, cf_expand, enum_ppartitions, omega_gf
from .stabilize import IrrationalCF, golden_ratio, stable_series

__all__ = ["GoldenCase", "GOLDEN_CASES", "run_suite", "SUITES"]


def P(*coeffs: int) -> IntLaurentPoly:
    return IntLaurentPoly(coeffs)


OMEGA_11 = P(1, 2, 3, 3, 3, 1, 1)
OMEGA_21 = P(1, 2, 2, 2, 1)
R22_FIVE_HALVES = RatFunc(OMEGA_11, P(1, 1, 1))
R22_SEVEN_THIRDS = RatFunc(P(1, 2, 4, 4, 5, 4, 3, 1, 1), P(1, 1, 2, 1, 1))
DIFFERENCE = P(0, 0, 0, 1, 2, 2, 2, 1, 1)

GOLDEN_R22 = (1, 0, 1, 0, 1, -1, 0, 1, -3, 6, -10, 17, -24, 25, -15, -21, 107)
GOLDEN_R12 = (1, 0, 1, 0, 0, 0, -1, 2, -4, 7, -9, 11, -11, 2, 22, -74, 171)
SEC7 = (1, 0, 0, 0, 1, 0, -1, -1, 1, 2, 0, -3, -2, 3, 5, -1, -8, -4, 9, 11)

# (left labels on G[2,2], right labels on G[2,3]), cells bottom-left first
COMPLEMENT_5_2_7_3 = {
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


@dataclass(frozen=True)
class GoldenCase:
    name: str
    check: Callable[[], bool]


def _cf_expansions() -> bool:
    return (
        cf_expand(5, 2).terms == (2, 2)
        and cf_expand(7, 3).terms == (2, 3)
        and cf_expand(17, 3).terms == (5, 1, 2)
    )


def _strip_sizes() -> bool:
    g = build_strip([5, 3, 2, 4])
    return len(g) == 13 and len(build_strip([2, 2])) == 3 and len(build_strip([1])) == 0


def _count_14() -> bool:
    g = build_strip([2, 2])
    return len(enum_ppartitions(g, 2)) == 14 and omega_gf(g, 2, 1, 2).eval_q1() == 8


def _matrix_q1() -> bool:
    return product_X([2, 2], 2).eval_q1() == [[14, 8, 3], [8, 5, 2], [3, 2, 1]]


def _omega_gfs() -> bool:
    g = build_strip([2, 2])
    X = product_X([2, 2], 2)
    return (
        omega_gf(g, 2, 1, 1) == OMEGA_11
        and omega_gf(g, 2, 2, 1) == OMEGA_21
        and X[0, 0] == OMEGA_11.shift(2)
        and X[1, 0] == OMEGA_21.shift(2)
    )


def _small_matrices() -> bool:
    q = IntLaurentPoly.monomial
    R = [[q(2), q(1), 1], [0, q(1), 1], [0, 0, 1]]
    L = [[q(2), 0, 0], [q(2), q(1), 0], [q(2), q(1), 1]]
    return mat_R(2).rows == tuple(tuple(map(IntLaurentPoly.coerce, r)) for r in R) and mat_L(
        2
    ).rows == tuple(tuple(map(IntLaurentPoly.coerce, r)) for r in L)


def _cf2_17_3() -> bool:
    vec = cf_vector_q1(CFrac.of(5, 1, 2), 2)
    return vec[::-1] == [Fraction(59, 3), Fraction(35, 6), Fraction(1)]


def _r22_q1() -> bool:
    return hcf_q1([2, 2], 2, 2) == Fraction(14, 3)


def _r22_q() -> bool:
    return all(
        route(cf, 2, 2) == target
        for route in (hcf_q_matrix, hcf_q_recursive)
        for cf, target in (([2, 2], R22_FIVE_HALVES), ([2, 3], R22_SEVEN_THIRDS))
    )


def _mgo() -> bool:
    return mgo_qrational([2, 2]) == hcf_q_matrix([2, 2], 1, 1) and mgo_qrational([4]) == RatFunc(P(1, 1, 1, 1))


def _golden_ratio() -> bool:
    phi = golden_ratio()
    return (
        stable_series(phi, 2, 2, 16).coeffs == GOLDEN_R22
        and stable_series(phi, 1, 2, 16).coeffs == GOLDEN_R12
    )


def _sec7() -> bool:
    x = IrrationalCF.parse("1,3,15:periodic=1,3,3")
    return stable_series(x, 1, 1, 19).coeffs == SEC7


def _lgv_minimal_pair() -> bool:
    net = build_network([2, 1, 2, 3], 3)
    pair = disjoint_pair_sum(net, (2, 4), (1, 4))
    return path_weight_matrix(net) == product_X([2, 1, 2, 3], 3) and pair.min_degree == 10


def _positivity() -> bool:
    pairs = complement_pairs(Fraction(5, 2), Fraction(7, 3), 2, 2)
    gf = IntLaurentPoly()
    for p in pairs:
        gf = gf + IntLaurentPoly.monomial(p.weight)
    return (
        positivity_difference(Fraction(5, 2), Fraction(7, 3), 2, 2) == DIFFERENCE
        and {(p.left, p.right) for p in pairs} == COMPLEMENT_5_2_7_3
        and gf == DIFFERENCE
    )


GOLDEN_CASES = (
    GoldenCase("cf-expansions", _cf_expansions),
    GoldenCase("strip-sizes", _strip_sizes),
    GoldenCase("count-G22-m2", _count_14),
    GoldenCase("matrix-G22-q1", _matrix_q1),
    GoldenCase("omega-G22-q", _omega_gfs),
    GoldenCase("R2-L2-display", _small_matrices),
    GoldenCase("cf2-17/3", _cf2_17_3),
    GoldenCase("r22-5/2-q1", _r22_q1),
    GoldenCase("r22-q-5/2-7/3", _r22_q),
    GoldenCase("mgo-m1", _mgo),
    GoldenCase("golden-ratio-series", _golden_ratio),
    GoldenCase("sec7-series", _sec7),
    GoldenCase("lgv-minimal-pair", _lgv_minimal_pair),
    GoldenCase("positivity-5/2-7/3", _positivity),
)

SUITES = {"paper-examples": GOLDEN_CASES}


def run_suite(name: str = "paper-examples") -> list[tuple[str, bool]]:
    """Run every case in order; an exception counts as a failure."""
    out = []
    for case in SUITES[name]:
        try:
            ok = bool(case.check())
        except Exception:
            ok = False
        out.append((case.name, ok))
    return out
