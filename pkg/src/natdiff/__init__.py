"""Exact computation of natural derivations and differential operators on
coordinate rings of affine varieties over the rationals."""

from .dermod import (
    Derivation,
    HigherDerivation,
    InclusionError,
    NotADerivationError,
    apply,
    higher_image_ideal,
    higher_natural_derivation,
    image_ideal,
    in_natural_submodule,
    is_derivation,
    natural_derivation,
    natural_generators,
    reconstruct,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_contains,
    ideal_equal,
    krull_dimension,
    module_buchberger,
    module_member,
    normal_form,
)
from .jacobi import (
    JacobiData,
    SingularTupleError,
    change_of_basis_H,
    is_smooth,
    jacobi_data,
    jacobian_ideal,
    minor,
    point_report,
    rank,
    verify_minor_identity,
)
from .polyring import MonomialOrder, PolyRing, Polynomial, partial
from .quotient import (
    CoordinateRing,
    LocalizedElement,
    NotPrimeError,
    PreconditionError,
    Residue,
    localized_in_A,
)
from .relgen import (
    Gen,
    Mul,
    OperatorExpr,
    apply_operator,
    derel_instances,
    operators_equal_up_to_order,
    order_i_membership,
    presentation,
    rd2_constant,
    verify_derel,
    verify_presentation,
)
from .suites import run_suites

__version__ = "0.1.0"

__all__ = [
    "apply",
    "apply_operator",
    "buchberger",
    "change_of_basis_H",
    "CoordinateRing",
    "derel_instances",
    "Derivation",
    "Gen",
    "GroebnerBasis",
    "higher_image_ideal",
    "higher_natural_derivation",
    "HigherDerivation",
    "ideal_contains",
    "ideal_equal",
    "image_ideal",
    "in_natural_submodule",
    "InclusionError",
    "is_derivation",
    "is_smooth",
    "jacobi_data",
    "jacobian_ideal",
    "JacobiData",
    "krull_dimension",
    "localized_in_A",
    "LocalizedElement",
    "minor",
    "module_buchberger",
    "module_member",
    "MonomialOrder",
    "Mul",
    "natural_derivation",
    "natural_generators",
    "normal_form",
    "NotADerivationError",
    "NotPrimeError",
    "OperatorExpr",
    "operators_equal_up_to_order",
    "order_i_membership",
    "partial",
    "point_report",
    "Polynomial",
    "PolyRing",
    "PreconditionError",
    "presentation",
    "rank",
    "rd2_constant",
    "reconstruct",
    "Residue",
    "run_suites",
    "SingularTupleError",
    "verify_derel",
    "verify_minor_identity",
    "verify_presentation",
]
