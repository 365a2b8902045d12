"""Exact unit-ball volume ratios, gamma-quotient products, and bound checks.

The package computes Gamma(x+a)/Gamma(x) through its slowly convergent
joint-factor product, keeps the ball-volume ratios v_n and w_n exact as
rational-times-pi-power values, evaluates a catalog of lower/upper bounds
for both, and machine-verifies the sidedness, ordering, and crossover
claims attached to them.
"""

from .analysis import (
    CrossoverResult,
    EvaluationRecord,
    TableReport,
    auxiliary_log_inequality,
    crossover,
    klein_rota_check,
    make_table,
    partials_below_upper_cap,
    product_overtake_index,
    verify_bounds,
    w_lower_p_vs_443_margin,
    w_upper_merkle_vs_alzer_margin,
    w_upper_refined_vs_51_margin,
)
from .ballvol import (
    ExactBallValue,
    omega_exact,
    v_exact,
    v_product,
    w_exact,
    w_product,
)
from .bounds import (
    BoundId,
    BoundSpec,
    V_LOWER_ALZER,
    V_LOWER_BORGWARDT,
    V_LOWER_D,
    V_LOWER_TRUNC,
    V_UPPER_ALZER,
    V_UPPER_BORGWARDT,
    V_UPPER_H,
    W_LOWER_443,
    W_LOWER_CLASSIC,
    W_LOWER_P,
    W_LOWER_TRIGAMMA,
    W_LOWER_TRUNC,
    W_UPPER_51,
    W_UPPER_ALZER,
    W_UPPER_MERKLE,
    W_UPPER_MERKLE_Q,
    W_UPPER_REFINED,
    catalog,
    eval_bound,
    eval_bound_mp,
    family_labels,
    parse_label,
)
from .errors import BallRatioError, DomainError, NonConvergenceError
from .gautschi import ProductResult, gautschi_ratio, joint_factor, joint_factor_truncate
from .specfun import (
    ALPHA,
    BETA,
    EULER_GAMMA,
    digamma_closed,
    digamma_series,
    psi_lower_ineq,
    trigamma_closed,
    trigamma_lower_ineq,
)
from .truncation import TruncationControl

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "BETA",
    "BallRatioError",
    "BoundId",
    "BoundSpec",
    "CrossoverResult",
    "DomainError",
    "EULER_GAMMA",
    "EvaluationRecord",
    "ExactBallValue",
    "NonConvergenceError",
    "ProductResult",
    "TableReport",
    "TruncationControl",
    "V_LOWER_ALZER",
    "V_LOWER_BORGWARDT",
    "V_LOWER_D",
    "V_LOWER_TRUNC",
    "V_UPPER_ALZER",
    "V_UPPER_BORGWARDT",
    "V_UPPER_H",
    "W_LOWER_443",
    "W_LOWER_CLASSIC",
    "W_LOWER_P",
    "W_LOWER_TRIGAMMA",
    "W_LOWER_TRUNC",
    "W_UPPER_51",
    "W_UPPER_ALZER",
    "W_UPPER_MERKLE",
    "W_UPPER_MERKLE_Q",
    "W_UPPER_REFINED",
    "auxiliary_log_inequality",
    "catalog",
    "crossover",
    "digamma_closed",
    "digamma_series",
    "eval_bound",
    "eval_bound_mp",
    "family_labels",
    "gautschi_ratio",
    "joint_factor",
    "joint_factor_truncate",
    "klein_rota_check",
    "make_table",
    "omega_exact",
    "parse_label",
    "partials_below_upper_cap",
    "product_overtake_index",
    "psi_lower_ineq",
    "trigamma_closed",
    "trigamma_lower_ineq",
    "v_exact",
    "v_product",
    "verify_bounds",
    "w_exact",
    "w_lower_p_vs_443_margin",
    "w_product",
    "w_upper_merkle_vs_alzer_margin",
    "w_upper_refined_vs_51_margin",
]
