"""groupaut: exact invariance groups of closed-form dense subgroups of R^n."""

from .autgroup import (
    Bounds,
    CardinalityClass,
    Certificate,
    Exact,
    Realizability,
    acts_invariantly,
    aut_group,
    aut_member,
    cardinality_class,
    conjugation_transfer,
    contains,
    descriptor_code,
    descriptor_json,
    dim_of_aut,
    is_unit,
    realize_Ax,
)
from .descriptors import (
    MembershipVerdict,
    cyclic_form,
    dimension,
    fraction_ring,
    hull_closure,
    image,
    is_dense,
    is_divisible,
    member,
    normalize,
)
from .dsl import (
    group_to_text,
    matrix_to_text,
    parse_descriptor,
    parse_matrix,
    parse_scalar,
    scalar_to_text,
)
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    ContextError,
    DescriptorError,
    DomainError,
    GroupAutError,
    ParseError,
    SingularMatrixError,
    UnsupportedError,
)
from .matrices import (
    ExactMatrix,
    circle_sum_witness,
    classify,
    identity,
    matrix,
    shear,
)
from .oracle import (
    OracleReport,
    Refutation,
    brute_force_aut,
    cross_check,
    enumerate_members,
    finite_permutation_action,
    injectivity_demo,
    report_to_json,
)
from .scalars import rational, sqrt_rational, t_monomial
from .witnesses import sl_obstruction_witness

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "BudgetExceededError",
    "CardinalityClass",
    "Certificate",
    "ConsistencyError",
    "ContextError",
    "DescriptorError",
    "DomainError",
    "Exact",
    "ExactMatrix",
    "GroupAutError",
    "MembershipVerdict",
    "OracleReport",
    "ParseError",
    "Realizability",
    "Refutation",
    "SingularMatrixError",
    "UnsupportedError",
    "acts_invariantly",
    "aut_group",
    "aut_member",
    "brute_force_aut",
    "cardinality_class",
    "circle_sum_witness",
    "classify",
    "conjugation_transfer",
    "contains",
    "cross_check",
    "cyclic_form",
    "descriptor_code",
    "descriptor_json",
    "dim_of_aut",
    "dimension",
    "enumerate_members",
    "finite_permutation_action",
    "fraction_ring",
    "group_to_text",
    "hull_closure",
    "identity",
    "image",
    "injectivity_demo",
    "is_dense",
    "is_divisible",
    "is_unit",
    "matrix",
    "matrix_to_text",
    "member",
    "normalize",
    "parse_descriptor",
    "parse_matrix",
    "parse_scalar",
    "rational",
    "realize_Ax",
    "report_to_json",
    "scalar_to_text",
    "shear",
    "sl_obstruction_witness",
    "sqrt_rational",
    "t_monomial",
]
