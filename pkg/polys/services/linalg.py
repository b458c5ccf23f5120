"""
Exact linear algebra over Q and Q(sqrt(D)), plus polynomial matrices.

Scalar matrices are lists of rows. Elimination is fraction-free (Bareiss):
rational rows are first scaled to integers so the intermediate entries stay
integral minors of the input.
"""

import logging
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from planarize.exceptions import DegenerateKernel, DimensionMismatchError, NoKernel
from planarize.sampling import RationalSampler
from scalars.services import QuadExtScalar, to_scalar

from .poly import Poly, monomial_basis, sum_of_products

logger = logging.getLogger(__name__)


def _is_rational_row(row):
    return all(not isinstance(v, QuadExtScalar) for v in row)


def _integral_row(row):
    """Scale a rational row to integer entries; returns (row, scale)."""
    row = [to_scalar(v) for v in row]
    if not _is_rational_row(row):
        return row, Fraction(1)
    scale = Fraction(reduce(lcm, (v.denominator for v in row), 1))
    return [v * scale for v in row], scale


def fraction_free_echelon(matrix):
    """
    Row echelon form by Bareiss elimination.

    Returns ``(rows, pivots, free_vars, sign, scale)``: the echelon rows, the
    pivot column of each nonzero row, the columns without pivot, the sign of
    the row permutation and the product of the row scalings applied first.
    """
    if not matrix:
        return [], [], [], 1, Fraction(1)
    n_cols = len(matrix[0])
    rows, scale = [], Fraction(1)
    for row in matrix:
        if len(row) != n_cols:
            raise DimensionMismatchError("Matrix rows have different lengths")
        integral, factor = _integral_row(row)
        rows.append(integral)
        scale *= factor
    n_rows = len(rows)
    pivots, free_vars = [], []
    sign, previous, piv_r = 1, Fraction(1), 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            free_vars.append(piv_c)
            continue
        for i_row in range(piv_r, n_rows):
            if rows[i_row][piv_c]:
                break
        else:
            free_vars.append(piv_c)
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
            sign = -sign
        fp = rows[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = rows[r][piv_c]
            rows[r] = [
                (fp * rows[r][c] - fr * rows[piv_r][c]) / previous if c >= piv_c else rows[r][c]
                for c in range(n_cols)
            ]
        previous = fp
        pivots.append(piv_c)
        piv_r += 1
    return rows, pivots, free_vars, sign, scale


def rank(matrix):
    return len(fraction_free_echelon(matrix)[1])


def determinant_scalar(matrix):
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("Determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    rows, pivots, _, sign, scale = fraction_free_echelon(matrix)
    if len(pivots) < n:
        return Fraction(0)
    return rows[n - 1][n - 1] * sign / scale


def canonical_vector(vector):
    """
    Integer entries with content 1 and a positive first nonzero entry for
    rational vectors; first nonzero entry 1 otherwise.
    """
    vector = [to_scalar(v) for v in vector]
    first = next((v for v in vector if v), None)
    if first is None:
        return vector
    if not _is_rational_row(vector):
        return [v / first for v in vector]
    denominators = reduce(lcm, (v.denominator for v in vector), 1)
    numerators = [v.numerator * (denominators // v.denominator) for v in vector]
    content = reduce(gcd, numerators, 0)
    if first < 0:
        content = -content
    return [Fraction(n, content) for n in numerators]


def _back_substitution(rows, pivots, n_cols, solution, rhs_col=None):
    """Solve for the pivot variables; ``rhs_col`` names an augmented column."""
    for r in range(len(pivots) - 1, -1, -1):
        piv_c = pivots[r]
        s = -rows[r][rhs_col] if rhs_col is not None else Fraction(0)
        for c in range(piv_c + 1, n_cols):
            if rows[r][c] and solution[c]:
                s = s + rows[r][c] * solution[c]
        solution[piv_c] = -s / rows[r][piv_c]
    return solution


def kernel_basis(matrix, n_cols=None):
    """Basis of the right null space, each vector in canonical form."""
    if not matrix:
        if n_cols is None:
            raise DimensionMismatchError("Empty matrix needs an explicit column count")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    n_cols = len(matrix[0])
    rows, pivots, free_vars, _, _ = fraction_free_echelon(matrix)
    basis = []
    for free in free_vars:
        solution = [Fraction(0)] * n_cols
        solution[free] = Fraction(1)
        basis.append(canonical_vector(_back_substitution(rows, pivots, n_cols, solution)))
    return basis


def solve_linear(matrix, rhs):
    """One solution of matrix * x = rhs (free variables set to 0), or None."""
    if len(matrix) != len(rhs):
        raise DimensionMismatchError("Right-hand side length does not match the matrix")
    n_cols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    rows, pivots, _, _, _ = fraction_free_echelon(augmented)
    if n_cols in pivots:
        return None
    solution = [Fraction(0)] * n_cols
    return _back_substitution(rows, pivots, n_cols, solution, rhs_col=n_cols)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def mat_mul(a, b):
    if a and len(a[0]) != len(b):
        raise DimensionMismatchError("Incompatible matrix product")
    columns = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in columns] for row in a]


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def inverse_matrix(matrix):
    n = len(matrix)
    columns = []
    for j in range(n):
        column = solve_linear(matrix, [Fraction(int(i == j)) for i in range(n)])
        if column is None:
            raise ZeroDivisionError("Singular matrix has no inverse")
        columns.append(column)
    return transpose(columns)


def canonical_poly_vector(vector):
    """
    Scale a vector of polynomials as a whole: integer coefficients with
    content 1 and the first nonzero entry's leading coefficient positive
    when everything is rational, otherwise that coefficient made 1.
    """
    first = next((v for v in vector if v), None)
    if first is None:
        return list(vector)
    coefficients = [c for v in vector for c in v.terms.values()]
    if not _is_rational_row(coefficients):
        return [v.scale(1 / to_scalar(first.leading_coefficient())) for v in vector]
    denominators = reduce(lcm, (c.denominator for c in coefficients), 1)
    content = reduce(gcd, (c.numerator * (denominators // c.denominator) for c in coefficients), 0)
    factor = Fraction(denominators, content)
    if first.leading_coefficient() < 0:
        factor = -factor
    return [v.scale(factor) for v in vector]


def proportional(first, second):
    """True when two polynomial vectors agree up to one nonzero scalar."""
    if len(first) != len(second):
        return False
    lead_a = next((v for v in first if v), None)
    lead_b = next((v for v in second if v), None)
    if lead_a is None or lead_b is None:
        return lead_a is None and lead_b is None
    a = [v.scale(1 / to_scalar(lead_a.leading_coefficient())) for v in first]
    b = [v.scale(1 / to_scalar(lead_b.leading_coefficient())) for v in second]
    return a == b


def coefficient_matrix(polys):
    """Monomials (rows) by polynomials (columns)."""
    monomials = monomial_basis(polys)
    return [[poly.coefficient(m) for poly in polys] for m in monomials], monomials


def linear_dependencies(polys):
    """Basis of the vectors c with sum(c_i * polys[i]) = 0."""
    matrix, _ = coefficient_matrix(polys)
    return kernel_basis(matrix, n_cols=len(polys))


def express_in_basis(target, basis):
    """Coefficients c with target = sum(c_i * basis[i]), or None."""
    matrix, monomials = coefficient_matrix(list(basis) + [target])
    if not monomials:
        return [Fraction(0)] * len(basis)
    system = [row[:-1] for row in matrix]
    rhs = [row[-1] for row in matrix]
    return solve_linear(system, rhs)


class PolyMatrix:
    """Rectangular matrix of polynomials over one ring."""

    def __init__(self, entries, ring):
        self.ring = tuple(ring)
        self.entries = []
        width = None
        for row in entries:
            row = [e if isinstance(e, Poly) else Poly.constant(self.ring, e) for e in row]
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionMismatchError("PolyMatrix rows have different lengths")
            for entry in row:
                if entry.ring != self.ring:
                    raise DimensionMismatchError(f"Entry ring {entry.ring} is not {self.ring}")
            self.entries.append(row)
        self.n_rows = len(self.entries)
        self.n_cols = width or 0

    def __getitem__(self, index):
        return self.entries[index]

    def evaluate(self, point):
        return [[entry.evaluate(point) for entry in row] for row in self.entries]

    def submatrix(self, rows, cols):
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows], self.ring)

    def mul_vector(self, vector):
        return [
            sum_of_products(self.ring, ((1, entry, v) for entry, v in zip(row, vector)))
            for row in self.entries
        ]

    def determinant(self):
        """Laplace expansion along columns, memoized on the remaining rows."""
        n = self.n_rows
        if n != self.n_cols:
            raise DimensionMismatchError("Determinant of a non-square matrix")
        one = Poly.one(self.ring)
        cache = {}

        def minor(rows):
            col = n - len(rows)
            if col == n:
                return one
            if rows in cache:
                return cache[rows]
            products = []
            for position, i in enumerate(rows):
                entry = self.entries[i][col]
                if not entry:
                    continue
                rest = minor(rows[:position] + rows[position + 1:])
                if rest:
                    products.append((-1 if position % 2 else 1, entry, rest))
            value = sum_of_products(self.ring, products)
            cache[rows] = value
            return value

        return minor(tuple(range(n)))


def symbolic_kernel_vector(matrix, seed=0):
    """
    Polynomial vector v with matrix * v == 0 identically.

    The generic nullity is read off at a seeded random point; rows are chosen
    there as a maximal independent set and v is the vector of signed maximal
    minors, divided by the gcd of its entries.
    """
    from .elimination import poly_gcd_many

    sampler = RationalSampler(seed)
    point = sampler.vector(len(matrix.ring))
    numeric = matrix.evaluate(point)
    nullity = matrix.n_cols - rank(numeric)
    if nullity >= 2:
        raise DegenerateKernel(f"Kernel has dimension {nullity} at a generic point")
    if nullity == 0:
        raise NoKernel("Matrix has full column rank at a generic point")

    selected = []
    for i in range(matrix.n_rows):
        if len(selected) == matrix.n_cols - 1:
            break
        if rank([numeric[j] for j in selected + [i]]) > len(selected):
            selected.append(i)

    vector = []
    for j in range(matrix.n_cols):
        cols = [k for k in range(matrix.n_cols) if k != j]
        minor = matrix.submatrix(selected, cols).determinant()
        vector.append(-minor if j % 2 else minor)

    content = poly_gcd_many([v for v in vector if v])
    if not content.is_constant():
        vector = [v.exact_div(content) for v in vector]
    vector = canonical_poly_vector(vector)

    if any(matrix.mul_vector(vector)):
        raise NoKernel("Signed minors do not annihilate the matrix")
    logger.debug(f"Kernel vector of a {matrix.n_rows}x{matrix.n_cols} matrix, rows {selected}")
    return vector
