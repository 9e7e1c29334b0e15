"""Exact arithmetic for the trinomial coefficient triangle and the
decomposition of tensor powers of the three dimensional sl2 representation.

Two integer triangles, several independent ways to compute each, and a
harness that plays the routes against each other:

    a(n, k)   coefficient of x^k in (1 + x + 1/x)^n          (laurent, recurrences)
    b(n, k)   multiplicity of the spin-k summand in the       (laurent, recurrences)
              n-th tensor power, b = first difference of a
    F, G      generating functions of the central columns     (series)
    Q_k       polynomials giving the triangle near its edge   (qpolys)

Everything is exact: plain ints, Fraction where division appears, and
every integer division checked for zero remainder.
"""

from .errors import (
    InexactDivision,
    InvalidRange,
    NonIntegerResult,
    NonInvertible,
    NonSquareLeadingTerm,
    TrinomError,
    UnknownRoute,
    UnsupportedK,
)
from .laurent import (
    MultiplicityVector,
    SymmetricLaurentPoly,
    X,
    character,
    decompose,
    inner_product,
    laurent_mul,
    synthesize,
    trinomial_power,
    trinomial_power_binary,
    trinomial_powers,
)
from .qpolys import (
    FACTORED_FORMS,
    RationalPolynomial,
    q_edge_entry,
    q_factorization_check,
    q_family,
)
from .recurrences import (
    CentralSequence,
    Triangle,
    a_central_two_term,
    a_column_two_term,
    a_from_central_differences,
    a_row_descending,
    a_triangle_pascal,
    b1_from_central,
    b2_from_central,
    b3_from_central,
    b4_from_central,
    b4_from_central_variant,
    b_central_from_a,
    b_central_two_term,
    b_column_four_term,
    b_from_a,
    b_row_descending,
    b_triangle_pascal,
    check_cross_row_identities,
    exact_div,
    four_term_coefficients,
)
from .series import (
    PowerSeries,
    f_series,
    g_from_f_identity,
    g_series,
    series_inverse,
    series_mul,
    series_sqrt,
)
from .verify import (
    ROUTES,
    CheckResult,
    ConsistencyReport,
    Route,
    first_divergence,
    route_rows,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "TrinomError",
    "InexactDivision",
    "UnsupportedK",
    "InvalidRange",
    "NonInvertible",
    "NonSquareLeadingTerm",
    "NonIntegerResult",
    "UnknownRoute",
    "SymmetricLaurentPoly",
    "MultiplicityVector",
    "X",
    "laurent_mul",
    "trinomial_power",
    "trinomial_powers",
    "trinomial_power_binary",
    "character",
    "decompose",
    "synthesize",
    "inner_product",
    "Triangle",
    "CentralSequence",
    "exact_div",
    "a_triangle_pascal",
    "a_central_two_term",
    "a_column_two_term",
    "a_row_descending",
    "check_cross_row_identities",
    "a_from_central_differences",
    "b_from_a",
    "b_triangle_pascal",
    "b_central_from_a",
    "b_central_two_term",
    "four_term_coefficients",
    "b_column_four_term",
    "b_row_descending",
    "b1_from_central",
    "b2_from_central",
    "b3_from_central",
    "b4_from_central",
    "b4_from_central_variant",
    "PowerSeries",
    "series_mul",
    "series_inverse",
    "series_sqrt",
    "f_series",
    "g_series",
    "g_from_f_identity",
    "RationalPolynomial",
    "FACTORED_FORMS",
    "q_family",
    "q_edge_entry",
    "q_factorization_check",
    "ROUTES",
    "Route",
    "CheckResult",
    "ConsistencyReport",
    "route_rows",
    "first_divergence",
    "run_all",
    "__version__",
]
