"""Exact computation of q-deformed higher continued fractions.

The value type throughout is :class:`IntLaurentPoly`.  Rationals ``x >= 1``
are handled through their continued fractions and the border strips built
from them; ``r^q_{i,m}(x)`` is a ratio of P-partition generating functions.
"""

from .hcf import (
    as_cfrac,
    cf_vector_q1,
    hcf_q1,
    hcf_q_matrix,
    hcf_q_recursive,
    mgo_qrational,
)
from .lgv import Network, build_network, disjoint_pair_sum, minor2x2_by_paths, path_weight_matrix
from .matrixcalc import (
    PolyMatrix,
    mat_L,
    mat_L_pow,
    mat_lambda,
    mat_Q,
    mat_R,
    mat_R_pow,
    mat_W,
    product_X,
)
from .poly import (
    IntLaurentPoly,
    NonIntegerSeries,
    NonUnitConstantTerm,
    Q,
    RatFunc,
    SeriesPrefix,
    poly_add,
    poly_eval_q1,
    poly_mul,
    poly_neg,
    poly_subst_qinv,
    series_expand,
)
from .posit import (
    NoSwappablePosition,
    OrderViolation,
    PartitionPair,
    PositivityProblem,
    PositivityViolation,
    complement_pairs,
    phi_injection,
    positivity_difference,
    swappable_positions,
)
from .qnum import qbinom, qfactorial, qint, qmultichoose
from .shape import (
    BorderStrip,
    CFrac,
    IndexOutOfRange,
    InvalidRational,
    PPartition,
    build_strip,
    cf_expand,
    enum_ppartitions,
    omega_gf,
)
from .stabilize import (
    IrrationalCF,
    agreement_degree,
    difference_bound,
    expand_hcf,
    stable_series,
    stabilizing_length,
)

__version__ = "0.1.0"
