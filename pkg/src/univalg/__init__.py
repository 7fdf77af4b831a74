"""Exact universal algebras and universal modules for finite-dimensional Lie
algebra data over Q."""

from .coalgebra import (
    CoalgebraOnU,
    FiniteCoalgebraModule,
    bmodule_on_tensor_square,
    build_coalgebra,
    universal_coalgebra_map,
    verify_bmodule_coalgebra,
    verify_comodule,
)
from .lie import (
    LieAlgebra,
    LieModule,
    LinearMap,
    Report,
    direct_sum,
    is_module_morphism,
    sl2,
    validate_lie_algebra,
    validate_lie_module,
)
from .poly import (
    DEGREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    PolyRing,
    Polynomial,
    ResourceBudgetError,
    buchberger,
    groebner,
    ideal_equal,
    normal_form,
)
from .representations import (
    MatrixARep,
    is_arep_morphism,
    tensor_lie_module,
    tensor_on_morphism,
    validate_arep,
)
from .universal_algebra import (
    UniversalAlgebra,
    bialgebra_structure,
    build_universal_algebra,
    monomial_basis_up_to_degree,
    universal_polynomials,
)
from .universal_modules import (
    UniversalAModule,
    UniversalLieHModule,
    build_universal_amodule,
    build_universal_lie_hmodule,
    direct_sum_check,
    factorize_lie,
    factorize_through_universal,
    functor_on_morphism_U,
    functor_on_morphism_V,
    gamma,
    gamma_lie,
)

__all__ = [
    "CoalgebraOnU",
    "FiniteCoalgebraModule",
    "bmodule_on_tensor_square",
    "build_coalgebra",
    "universal_coalgebra_map",
    "verify_bmodule_coalgebra",
    "verify_comodule",
    "LieAlgebra",
    "LieModule",
    "LinearMap",
    "Report",
    "direct_sum",
    "is_module_morphism",
    "sl2",
    "validate_lie_algebra",
    "validate_lie_module",
    "DEGREVLEX",
    "LEX",
    "GroebnerBasis",
    "MonomialOrder",
    "PolyRing",
    "Polynomial",
    "ResourceBudgetError",
    "buchberger",
    "groebner",
    "ideal_equal",
    "normal_form",
    "MatrixARep",
    "is_arep_morphism",
    "tensor_lie_module",
    "tensor_on_morphism",
    "validate_arep",
    "UniversalAlgebra",
    "bialgebra_structure",
    "build_universal_algebra",
    "monomial_basis_up_to_degree",
    "universal_polynomials",
    "UniversalAModule",
    "UniversalLieHModule",
    "build_universal_amodule",
    "build_universal_lie_hmodule",
    "direct_sum_check",
    "factorize_lie",
    "factorize_through_universal",
    "functor_on_morphism_U",
    "functor_on_morphism_V",
    "gamma",
    "gamma_lie",
]
