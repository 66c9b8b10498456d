"""Gilbert-Varshamov type existence bounds for entanglement-assisted asymmetric quantum codes."""
from .bounds import (
    BoundParamsNew,
    BoundParamsOld,
    ExactRatio,
    InvalidParameters,
    ball_sum,
    binomial,
    check_new,
    check_old,
)
from .gf import Field, gf_inv, gf_mul, make_field
from .pareto import ParetoFrontier, frontier, improves, pareto_new, pareto_old, reproduce_table1
from .symplectic import CodeSpace, analyze_code, detection_check, eaqecc_params, symp_product, symplectic_dual

__version__ = "0.1.0"
