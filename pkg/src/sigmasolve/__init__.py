"""Exact rational solutions of symmetric-polynomial Diophantine systems.

The package generates infinite families of n-tuples of rationals with
prescribed elementary symmetric polynomial values, by pulling multiples
of a rational point back through a genus-1 quartic model, and verifies
every output by exact substitution.  All arithmetic is over
``fractions.Fraction``; nothing is ever rounded.
"""

from .curves import TORSION_BOUND, Point, WeierstrassCurve
from .errors import (
    DegenerateDoublingError,
    DegenerateIdentityError,
    DegenerateParameterError,
    InfiniteOrderRequiredError,
    NonGenusOneError,
    SigmaSolveError,
)
from .polynomials import (
    SigmaVector,
    UniPoly,
    elem_sym_all,
    identity_check,
    quadratic_roots,
    quartic_discriminant,
    quartic_invariants,
    sigma_expand3,
)
from .quartic import (
    BirationalMap,
    QuarticModel,
    double_via_parabola,
    multiples,
    to_weierstrass,
    translate_base,
)
from .rationals import (
    Rational,
    canonicalize,
    format_rational,
    parse_rational,
    rational_sqrt,
)
from .solvers import (
    DEFAULT_SEED,
    ReducedSigmaSystem,
    SameValueParams,
    Solution,
    SymmetricSystem,
    reduce_reciprocal,
    reduce_scale,
    sigma123_system,
    sigma_product_closed_form,
    sigma_product_system,
    solve_same_sigma_pair,
    solve_sigma123,
    solve_sigma_i_product,
    solve_sum_product,
    solve_triple_123,
    solve_triple_134,
    sum_product_closed_form,
    sum_product_system,
    triple_123_targets,
    triple_134_model,
    triple_134_targets,
)
from .verify import (
    VerificationReport,
    check_solution,
    distinct_multisets,
    make_primitive,
    rational_roots,
    to_monic_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "BirationalMap",
    "DEFAULT_SEED",
    "DegenerateDoublingError",
    "DegenerateIdentityError",
    "DegenerateParameterError",
    "InfiniteOrderRequiredError",
    "NonGenusOneError",
    "Point",
    "QuarticModel",
    "Rational",
    "ReducedSigmaSystem",
    "SameValueParams",
    "SigmaSolveError",
    "SigmaVector",
    "Solution",
    "SymmetricSystem",
    "TORSION_BOUND",
    "UniPoly",
    "VerificationReport",
    "WeierstrassCurve",
    "canonicalize",
    "check_solution",
    "distinct_multisets",
    "double_via_parabola",
    "elem_sym_all",
    "format_rational",
    "identity_check",
    "make_primitive",
    "multiples",
    "parse_rational",
    "quadratic_roots",
    "quartic_discriminant",
    "quartic_invariants",
    "rational_roots",
    "rational_sqrt",
    "reduce_reciprocal",
    "reduce_scale",
    "sigma123_system",
    "sigma_expand3",
    "sigma_product_closed_form",
    "sigma_product_system",
    "solve_same_sigma_pair",
    "solve_sigma123",
    "solve_sigma_i_product",
    "solve_sum_product",
    "solve_triple_123",
    "solve_triple_134",
    "sum_product_closed_form",
    "sum_product_system",
    "to_monic_polynomial",
    "to_weierstrass",
    "translate_base",
    "triple_123_targets",
    "triple_134_model",
    "triple_134_targets",
    "__version__",
]
