"""Exact choice functions based on sets of strict partial vector orders."""

from .assessments import (
    AssessmentFamily, check_pk_axioms, in_natural_extension, is_consistent,
    k_compatible, refutation_certificate, selection_cones, settings,
)
from .choice_functions import (
    Assessment, Cones, check_pc_axioms, choose, extract_order, is_binary_on,
    is_compatible, rejects_zero, represent,
)
from .errors import (
    ChoiceKitError, CombinatorialLimit, DimensionError, EmptyOptionSet, EmptyOrderSet,
    InconsistentAssessment, InvalidProbe, NotBinary, NotBlunt, PremiseFree,
    UnknownScheme, VariableLimit,
)
from .exact_geometry import (
    RayStatus, conic_feasible, sup_ray_parameter, vec, vectors, zero_nontrivially_in_cone,
)
from .oracle import closure_witnesses, fm_conic_feasible
from .orders_cones import (
    ProperCone, check_order_axioms, choice_from_order, choice_from_order_set,
    cone_contains, dominates, make_cone,
)
from .rules import (
    FinitePoints, OpenRay, PosiHull, Rule, Union, archimedean_exact, coherent_exact,
    d_compatible, instantiate_scheme, monotonify, monotonify_rule, optset_meets_cone,
)

__all__ = [
    "Assessment",
    "AssessmentFamily",
    "ChoiceKitError",
    "CombinatorialLimit",
    "Cones",
    "DimensionError",
    "EmptyOptionSet",
    "EmptyOrderSet",
    "FinitePoints",
    "InconsistentAssessment",
    "InvalidProbe",
    "NotBinary",
    "NotBlunt",
    "OpenRay",
    "PosiHull",
    "PremiseFree",
    "ProperCone",
    "RayStatus",
    "Rule",
    "Union",
    "UnknownScheme",
    "VariableLimit",
    "archimedean_exact",
    "check_order_axioms",
    "check_pc_axioms",
    "check_pk_axioms",
    "choice_from_order",
    "choice_from_order_set",
    "choose",
    "closure_witnesses",
    "coherent_exact",
    "cone_contains",
    "conic_feasible",
    "d_compatible",
    "dominates",
    "extract_order",
    "fm_conic_feasible",
    "in_natural_extension",
    "instantiate_scheme",
    "is_binary_on",
    "is_compatible",
    "is_consistent",
    "k_compatible",
    "make_cone",
    "monotonify",
    "monotonify_rule",
    "optset_meets_cone",
    "refutation_certificate",
    "rejects_zero",
    "represent",
    "selection_cones",
    "settings",
    "sup_ray_parameter",
    "vec",
    "vectors",
    "zero_nontrivially_in_cone",
]

__version__ = "0.1.0"
