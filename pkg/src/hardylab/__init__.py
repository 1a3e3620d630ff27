"""hardylab: desk-scale numerical laboratory for Hardy-type spaces on the
unit disk.

Truncated Taylor series with exact-rational and float coefficient modes,
boundary-quadrature H^p and derivative-space norms, shift and Volterra
operators with their intertwining derivative pair, finite Blaschke products
with atomic singular factors, and invariant-subspace membership with
seeded invariance harnesses.
"""

from .series import (
    RationalComplex,
    TaylorSeries,
    add,
    subtract,
    scale,
    multiply,
    derivative,
    evaluate,
    zero,
    monomial,
    to_dict,
    from_dict,
    dumps,
    loads,
    save_series,
    load_series,
)
from .norms import (
    SpaceParams,
    QuadratureConfig,
    boundary_values,
    boundary_scale,
    integral_mean,
    hp_norm,
    sn_norm,
    sn_norm_unrolled,
    derivative_sum_norm,
    sup_sum_norm,
    sup_norm,
    hardy_sum,
)
from .operators import (
    shift,
    volterra,
    shift_plus_volterra,
    shift_plus_volterra_composed,
    nth_derivative,
    nth_antiderivative,
    lift_approximant,
    OperatorDescriptor,
    apply_operator,
)
from .inner import (
    InnerFunction,
    eval_inner,
    log_abs_inner,
    boundary_unimodularity_defect,
    blaschke_divisibility,
    singular_division_heuristic,
    inner_to_dict,
    inner_from_dict,
)
from .membership import (
    SubspaceSpec,
    ConditionResult,
    MembershipResult,
    validate_spec,
    ensure_valid,
    membership,
    sample_element,
    sampled_members,
    log_distance_integral,
    shift_invariance_check,
    combined_invariance_check,
    spec_to_dict,
    spec_from_dict,
)
from .report import ClaimResult, VerificationReport
from .verify import RunConfig, SUITES, run_suites, fixed_specs

__version__ = "0.1.0"

__all__ = [
    "RationalComplex",
    "TaylorSeries",
    "add",
    "subtract",
    "scale",
    "multiply",
    "derivative",
    "evaluate",
    "zero",
    "monomial",
    "to_dict",
    "from_dict",
    "dumps",
    "loads",
    "save_series",
    "load_series",
    "SpaceParams",
    "QuadratureConfig",
    "boundary_values",
    "boundary_scale",
    "integral_mean",
    "hp_norm",
    "sn_norm",
    "sn_norm_unrolled",
    "derivative_sum_norm",
    "sup_sum_norm",
    "sup_norm",
    "hardy_sum",
    "shift",
    "volterra",
    "shift_plus_volterra",
    "shift_plus_volterra_composed",
    "nth_derivative",
    "nth_antiderivative",
    "lift_approximant",
    "OperatorDescriptor",
    "apply_operator",
    "InnerFunction",
    "eval_inner",
    "log_abs_inner",
    "boundary_unimodularity_defect",
    "blaschke_divisibility",
    "singular_division_heuristic",
    "inner_to_dict",
    "inner_from_dict",
    "SubspaceSpec",
    "ConditionResult",
    "MembershipResult",
    "validate_spec",
    "ensure_valid",
    "membership",
    "sample_element",
    "sampled_members",
    "log_distance_integral",
    "shift_invariance_check",
    "combined_invariance_check",
    "spec_to_dict",
    "spec_from_dict",
    "ClaimResult",
    "VerificationReport",
    "RunConfig",
    "SUITES",
    "run_suites",
    "fixed_specs",
]
