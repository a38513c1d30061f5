"""Numerical laboratory for the class U(lambda) of univalent disk maps.

Members are the normalized analytic functions f on the unit disk with
|(z/f)^2 f' - 1| < lambda.  The package builds members from a Schwarz-type
generator, evaluates the classical coefficient functionals on them
(Zalcman, generalized Zalcman, Krushkal differences, Hankel determinants),
checks the catalogued sharp bounds, and independently reproduces the
constrained maxima behind those bounds over the admissible coefficient
region.
"""

from ._kernels import BACKEND
from .errors import (
    ConfigError,
    DenominatorVanishes,
    IndexOutOfRange,
    MembershipFailed,
    NormExceeded,
    NotNormalized,
    OutsideRegion,
    SharpnessFailure,
    UlambdaError,
    UnsupportedKind,
    ZeroConstantTerm,
)
from .functionals import (
    GEN_ZALCMAN_2_3,
    GEN_ZALCMAN_2_4,
    HANKEL_2_2,
    HANKEL_3_1,
    KRUSHKAL_4_1,
    KRUSHKAL_5_1,
    LAMBDA_STAR,
    PAPER_KINDS,
    ZALCMAN_2,
    ZALCMAN_3,
    BoundRecord,
    FunctionalKind,
    bound_for,
    eval_functional,
    verify_member_against_bounds,
    witness_member,
)
from .harness import RunConfig, run_random_search, run_reproduce_all, run_verify_sharpness
from .members import (
    MemberSpec,
    MembershipReport,
    a3_condition_holds,
    build_member,
    check_membership,
    coefficients_from_schwarz,
    extremal_f_lambda,
    extremal_hankel3,
    extremal_rotation,
    member_from_json,
    member_hash,
    member_to_json,
    rotate_member,
)
from .optimize import (
    MaxResult,
    RegionPoint,
    check_monotonicity_claims,
    g1,
    g2,
    g3,
    locate_g1_crossover,
    maximize_over_E,
    phi_curve,
)
from .schwarz import (
    CoefTriple,
    SchwarzFn,
    is_admissible_triple,
    make_schwarz,
    sample_schwarz,
    sample_triple,
    sup_norm_on_circle,
)
from .series import PowerSeries, derivative, evaluate, multiply, reciprocal, u_transform

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundRecord",
    "CoefTriple",
    "ConfigError",
    "DenominatorVanishes",
    "FunctionalKind",
    "GEN_ZALCMAN_2_3",
    "GEN_ZALCMAN_2_4",
    "HANKEL_2_2",
    "HANKEL_3_1",
    "IndexOutOfRange",
    "KRUSHKAL_4_1",
    "KRUSHKAL_5_1",
    "LAMBDA_STAR",
    "MaxResult",
    "MemberSpec",
    "MembershipFailed",
    "MembershipReport",
    "NormExceeded",
    "NotNormalized",
    "OutsideRegion",
    "PAPER_KINDS",
    "PowerSeries",
    "RegionPoint",
    "RunConfig",
    "SchwarzFn",
    "SharpnessFailure",
    "UlambdaError",
    "UnsupportedKind",
    "ZALCMAN_2",
    "ZALCMAN_3",
    "ZeroConstantTerm",
    "a3_condition_holds",
    "bound_for",
    "build_member",
    "check_membership",
    "check_monotonicity_claims",
    "coefficients_from_schwarz",
    "derivative",
    "eval_functional",
    "evaluate",
    "extremal_f_lambda",
    "extremal_hankel3",
    "extremal_rotation",
    "g1",
    "g2",
    "g3",
    "is_admissible_triple",
    "locate_g1_crossover",
    "make_schwarz",
    "maximize_over_E",
    "member_from_json",
    "member_hash",
    "member_to_json",
    "multiply",
    "phi_curve",
    "reciprocal",
    "rotate_member",
    "run_random_search",
    "run_reproduce_all",
    "run_verify_sharpness",
    "sample_schwarz",
    "sample_triple",
    "sup_norm_on_circle",
    "u_transform",
    "verify_member_against_bounds",
    "witness_member",
]
