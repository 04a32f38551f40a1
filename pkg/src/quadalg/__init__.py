"""Finite-dimensional nonassociative algebras over exchangeable coefficient
fields: idempotents, absolute nilpotents, and eigenvectors of the squaring
operator, with exact, exhaustive, and numeric solution engines.
"""

from .errors import (
    BudgetExceeded,
    CharTwo,
    DimensionMismatch,
    DivisionByZero,
    EvenOrTrivialDegree,
    FieldMismatch,
    NotAnEigenvector,
    NotAnExtensionField,
    NotInValuationRing,
    NotIntegerCoefficients,
    NotNilpotentAtGivenOrder,
    ParseError,
    QuadAlgError,
    ReducibleModulus,
    SearchExhausted,
    UnsupportedField,
    ValuationViolation,
    WrongDimension,
    ZeroSeries,
    ZeroVector,
)
from .algebra import (
    SigmaDescription,
    SpectrumReport,
    StructureTensor,
    absolute_nilpotent_from_nilpotent,
    circle_product,
    classify_spectrum,
    counterexample_algebra,
    eigencheck,
    eigenvalue_set,
    is_absolute_nilpotent,
    is_idempotent,
    matrix_algebra,
    multiply,
    power,
    quadratic_operator,
    random_structure_tensor,
    rescale_to_canonical,
    restrict_scalars,
    symmetrize,
    zero_algebra,
)
from .fields import (
    ExtensionField,
    Field,
    LaurentSeries,
    Polynomial,
    PrimeField,
    Rationals,
    Reals,
    eisenstein_irreducible,
    field_arith,
    field_from_json,
    field_to_json,
    finite_field,
    laurent_valuation,
    poly_has_root,
    polynomial_roots,
    residue_decompose,
)
from .solver import (
    Dim2Result,
    GenericityVerdict,
    ProbeReport,
    ProjectiveSolution,
    QuadraticSystem,
    SolveConfig,
    build_system,
    count_solutions_extension,
    draw_perturbation,
    genericity_probe,
    perturb_system,
    solve_exact_dim2,
    solve_exhaustive,
    solve_real,
    trivial_jacobian_check,
    unit_eigenpair,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CharTwo",
    "Dim2Result",
    "DimensionMismatch",
    "DivisionByZero",
    "EvenOrTrivialDegree",
    "FieldMismatch",
    "NotAnEigenvector",
    "NotAnExtensionField",
    "NotInValuationRing",
    "NotIntegerCoefficients",
    "NotNilpotentAtGivenOrder",
    "ParseError",
    "QuadAlgError",
    "ReducibleModulus",
    "SearchExhausted",
    "UnsupportedField",
    "ValuationViolation",
    "WrongDimension",
    "ZeroSeries",
    "ZeroVector",
    "ExtensionField",
    "Field",
    "GenericityVerdict",
    "LaurentSeries",
    "Polynomial",
    "PrimeField",
    "ProbeReport",
    "ProjectiveSolution",
    "QuadraticSystem",
    "Rationals",
    "Reals",
    "SigmaDescription",
    "SolveConfig",
    "SpectrumReport",
    "StructureTensor",
    "absolute_nilpotent_from_nilpotent",
    "build_system",
    "circle_product",
    "classify_spectrum",
    "count_solutions_extension",
    "counterexample_algebra",
    "draw_perturbation",
    "eigencheck",
    "eigenvalue_set",
    "eisenstein_irreducible",
    "field_arith",
    "field_from_json",
    "field_to_json",
    "finite_field",
    "genericity_probe",
    "is_absolute_nilpotent",
    "is_idempotent",
    "laurent_valuation",
    "matrix_algebra",
    "multiply",
    "perturb_system",
    "poly_has_root",
    "polynomial_roots",
    "power",
    "quadratic_operator",
    "random_structure_tensor",
    "rescale_to_canonical",
    "residue_decompose",
    "restrict_scalars",
    "solve_exact_dim2",
    "solve_exhaustive",
    "solve_real",
    "symmetrize",
    "trivial_jacobian_check",
    "unit_eigenpair",
    "zero_algebra",
]
