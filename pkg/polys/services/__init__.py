from .poly import (
    BINARY,
    LINE_COORDS,
    LINE_PARAMS,
    PENCIL,
    UVWT,
    XYZ,
    Poly,
    homogeneous_monomials,
    monomial_basis,
    partial_derivative,
    poly_arith,
    restrict_to_line,
    substitute_linear,
)
from .linalg import (
    PolyMatrix,
    canonical_poly_vector,
    canonical_vector,
    coefficient_matrix,
    determinant_scalar,
    express_in_basis,
    identity,
    inverse_matrix,
    kernel_basis,
    linear_dependencies,
    mat_mul,
    mat_vec,
    proportional,
    rank,
    solve_linear,
    symbolic_kernel_vector,
    transpose,
)
from .elimination import (
    poly_gcd,
    poly_gcd_many,
    resultant,
    univariate_coefficients,
    univariate_divmod,
    univariate_gcd,
    univariate_squarefree,
)
from .quadratic_forms import (
    QuadraticFactors,
    factor_into_linear,
    quadratic_form_matrix,
    quadratic_form_rank,
)
