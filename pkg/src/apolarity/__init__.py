"""Exact apolarity, Lefschetz properties and Schubert calculus for cubic threefolds."""

__version__ = "0.1.0"

from .apolar import (
    AGAlgebra,
    GenericityError,
    JordanType,
    ann_generators_match,
    build_algebra,
    generic_jordan_type,
    has_slp,
    has_vanishing_hessian,
    higher_hessian,
    is_cone,
    is_lefschetz_element,
    jordan_type,
    multiplication_matrix,
)
from .classify import (
    CubicClass,
    Label,
    canonical_form,
    classify,
    dual_variety_dimension,
    random_pgl_conjugate,
    stabilizer_dimension,
)
from .kernel import Matrix, NumberField, NumberFieldElement, det_fraction_free, kernel_basis, rank
from .polyring import (
    DiffOperator,
    Form,
    Polynomial,
    apply,
    evaluate,
    gradient,
    hessian_matrix,
    parse_operator,
    parse_polynomial,
)
from .schubert import (
    degree_cone_locus,
    degree_intersection_locus,
    degree_vanishing_hessian_locus,
)
