from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from planarize.exceptions import (
    DegenerateKernel,
    EliminationError,
    NoKernel,
    NonHomogeneousError,
    RingMismatchError,
)
from polys.services import (
    LINE_COORDS,
    PENCIL,
    UVWT,
    XYZ,
    Poly,
    PolyMatrix,
    determinant_scalar,
    factor_into_linear,
    homogeneous_monomials,
    identity,
    inverse_matrix,
    kernel_basis,
    linear_dependencies,
    mat_mul,
    mat_vec,
    partial_derivative,
    poly_arith,
    poly_gcd,
    proportional,
    rank,
    restrict_to_line,
    resultant,
    substitute_linear,
    symbolic_kernel_vector,
)
from scalars.services import QuadExtScalar

x, y, z = Poly.gens(XYZ)
u, v, w, t = Poly.gens(UVWT)
XY = ('x', 'y')
bx, by = Poly.gens(XY)

small = st.integers(min_value=-5, max_value=5)


@st.composite
def homogeneous_forms(draw, ring=XYZ, min_degree=0, max_degree=3):
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    monomials = homogeneous_monomials(len(ring), degree)
    coefficients = draw(st.lists(small, min_size=len(monomials), max_size=len(monomials)))
    return Poly(ring, dict(zip(monomials, coefficients)))


@st.composite
def binary_forms(draw, min_degree=1, max_degree=2):
    """Binary forms in (x, y) with a nonzero x-leading coefficient."""
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    lead = draw(small.filter(bool))
    rest = draw(st.lists(small, min_size=degree, max_size=degree))
    terms = {(degree, 0): lead}
    for k, coeff in enumerate(rest, start=1):
        terms[(degree - k, k)] = coeff
    return Poly(XY, terms)


small_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n_rows: st.integers(min_value=1, max_value=5).flatmap(
        lambda n_cols: st.lists(
            st.lists(st.integers(min_value=-3, max_value=3), min_size=n_cols, max_size=n_cols),
            min_size=n_rows, max_size=n_rows,
        )
    )
)


class PolyArithmeticTests(SimpleTestCase):

    def test_difference_of_squares(self):
        self.assertEqual(poly_arith(x + y, x - y, 'mul'), x ** 2 - y ** 2)

    def test_scale_by_zero(self):
        self.assertFalse(poly_arith(x ** 2 + y ** 2 + z ** 2, 0, 'scale'))

    def test_binomial_cube(self):
        expected = x ** 3 + (x ** 2 * y).scale(3) + (x * y ** 2).scale(3) + y ** 3
        self.assertEqual(poly_arith(x + y, 3, 'pow'), expected)

    def test_ring_mismatch(self):
        with self.assertRaises(RingMismatchError):
            poly_arith(x, u, 'add')

    def test_zero_degree(self):
        self.assertEqual(Poly.zero(XYZ).degree(), float('-inf'))
        self.assertTrue(Poly.zero(XYZ).is_homogeneous(5))

    def test_text_order(self):
        equation = t ** 3 * 4 - t * (u ** 2 + v ** 2 + w ** 2) + u * v * w
        self.assertEqual(str(equation), '4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w')

    def test_text_with_fractions_and_radicals(self):
        self.assertEqual(str(x.scale(Fraction(1, 2)) - y), '1/2*x - y')
        self.assertEqual(str(x - y.scale(QuadExtScalar(0, 1, 2))), 'x - sqrt(2)*y')
        self.assertEqual(str(Poly.zero(XYZ)), '0')

    def test_canonical_form(self):
        p = (x ** 2).scale(Fraction(-1, 2)) + (x * y).scale(Fraction(3, 4))
        self.assertEqual(str(p.canonical()), '2*x^2 - 3*x*y')
        self.assertTrue(p.canonical().is_canonical())

    def test_exact_division(self):
        self.assertEqual((x ** 2 - y ** 2).exact_div(x + y), x - y)
        with self.assertRaises(ValueError):
            (x ** 2 + y ** 2).exact_div(x + y)

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(homogeneous_forms(), homogeneous_forms(), homogeneous_forms())
    def test_ring_laws(self, a, b, c):
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a.canonical().canonical(), a.canonical())

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(homogeneous_forms(min_degree=1), homogeneous_forms(min_degree=1))
    def test_homogeneity_is_preserved(self, a, b):
        self.assertTrue((a * b).is_homogeneous())
        if a.degree() == b.degree():
            self.assertTrue((a + b).is_homogeneous())


class SubstitutionTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(substitute_linear(x ** 2, identity(3)), x ** 2)

    def test_sum_and_difference(self):
        matrix = [[1, 1], [1, -1]]
        result = substitute_linear(bx * by, matrix)
        self.assertEqual(result, bx ** 2 - by ** 2)

    def test_transposition_flips_sign(self):
        swap = [[0, 1], [1, 0]]
        self.assertEqual(substitute_linear(bx ** 2 - by ** 2, swap), -(bx ** 2 - by ** 2))

    def test_needs_homogeneous_input(self):
        with self.assertRaises(NonHomogeneousError):
            substitute_linear(x ** 2 + y, identity(3))

    @settings(max_examples=30, derandomize=True, deadline=None)
    @given(
        homogeneous_forms(),
        st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3),
        st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3),
    )
    def test_composition_law(self, p, a, b):
        a = [[Fraction(e) for e in row] for row in a]
        b = [[Fraction(e) for e in row] for row in b]
        nested = substitute_linear(substitute_linear(p, a), b)
        self.assertEqual(nested, substitute_linear(p, mat_mul(a, b)))

    def test_symbolic_line(self):
        s, tt, p0, _, _, q0, _, _ = Poly.gens(PENCIL)
        self.assertEqual(restrict_to_line(x), s * p0 + tt * q0)

    def test_concrete_lines(self):
        s, tt = Poly.gens(('s', 't'))
        self.assertEqual(restrict_to_line(x * y * z, (1, 0, 0), (0, 1, 1)), s * tt ** 2)
        self.assertEqual(restrict_to_line(x ** 2 + y ** 2 + z ** 2, (1, 0, 0), (0, 1, 0)), s ** 2 + tt ** 2)

    def test_symbolic_line_degrees(self):
        restricted = restrict_to_line(x ** 2 * y + z ** 3)
        for exps in restricted.terms:
            self.assertEqual(exps[0] + exps[1], 3)
            self.assertEqual(sum(exps[2:]), 3)


class DerivativeTests(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(partial_derivative(x ** 3, 'x'), (x ** 2).scale(3))
        self.assertEqual(partial_derivative(x * y * z, 'y'), x * z)

    def test_euler_on_example(self):
        p = x ** 2 * y
        total = x * partial_derivative(p, 'x') + y * partial_derivative(p, 'y') + z * partial_derivative(p, 'z')
        self.assertEqual(total, p.scale(3))

    @settings(max_examples=100, derandomize=True, deadline=None)
    @given(homogeneous_forms())
    def test_euler_identity(self, p):
        total = sum((g * partial_derivative(p, name) for g, name in zip((x, y, z), XYZ)), Poly.zero(XYZ))
        degree = p.degree() if p else 0
        self.assertEqual(total, p.scale(degree))


class GcdAndResultantTests(SimpleTestCase):

    def test_gcd_examples(self):
        self.assertEqual(poly_gcd(x ** 2 * y, x * y ** 2), x * y)
        self.assertEqual(poly_gcd(x ** 2 - y ** 2, x + y), x + y)
        self.assertEqual(poly_gcd(x ** 2 + y ** 2, x + y), Poly.one(XYZ))

    def test_gcd_with_zero(self):
        self.assertEqual(poly_gcd((x * y).scale(-6), Poly.zero(XYZ)), x * y)

    def test_gcd_divides_inputs(self):
        a = (x + y * 2) * (x * z - y ** 2) * z
        b = (x * z - y ** 2) * (x - z) * z
        g = poly_gcd(a, b)
        self.assertEqual(g, ((x * z - y ** 2) * z).canonical())
        self.assertTrue(g.divides(a))
        self.assertTrue(g.divides(b))

    def test_resultant_examples(self):
        self.assertEqual(resultant(x - y, x - z, 'x'), y - z)
        self.assertFalse(resultant(x ** 2 - y ** 2, x - y, 'x'))
        self.assertEqual(resultant(x ** 2 + y ** 2, x - y, 'x'), (y ** 2).scale(2))

    def test_resultant_needs_the_variable(self):
        with self.assertRaises(EliminationError):
            resultant(y ** 2, x - y, 'x')

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(binary_forms(), binary_forms(), binary_forms())
    def test_resultant_multiplicativity(self, p, q1, q2):
        self.assertEqual(
            resultant(p, q1 * q2, 'x'),
            resultant(p, q1, 'x') * resultant(p, q2, 'x'),
        )

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(binary_forms(), binary_forms(), st.booleans(), small)
    def test_resultant_detects_common_factors(self, p, q, share, shift):
        if share:
            common = bx + by.scale(shift)
            p, q = p * common, q * common
        vanishes = not resultant(p, q, 'x')
        self.assertEqual(vanishes, poly_gcd(p, q).involves('x'))


class ScalarLinearAlgebraTests(SimpleTestCase):

    def test_kernel_examples(self):
        self.assertEqual(kernel_basis([[1, 1]]), [[1, -1]])
        self.assertEqual(kernel_basis([[1, 0], [0, 1]]), [])
        self.assertEqual(kernel_basis([[1, 2, 3], [2, 4, 6]]), [[2, -1, 0], [3, 0, -1]])

    @settings(max_examples=60, derandomize=True, deadline=None)
    @given(small_matrices)
    def test_kernel_vectors_annihilate(self, matrix):
        basis = kernel_basis(matrix)
        for vector in basis:
            self.assertTrue(all(value == 0 for value in mat_vec(matrix, vector)))
        self.assertEqual(len(basis) + rank(matrix), len(matrix[0]))

    def test_determinant_and_inverse(self):
        matrix = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
        self.assertEqual(determinant_scalar(matrix), 18)
        product = mat_mul(matrix, inverse_matrix(matrix))
        self.assertEqual(product, identity(3))

    def test_determinant_over_extension(self):
        root = QuadExtScalar(0, 1, 2)
        self.assertEqual(determinant_scalar([[root, 1], [1, root]]), 1)

    def test_linear_dependencies(self):
        deps = linear_dependencies([x ** 2, x * y, y ** 2, x ** 2 + x * y])
        self.assertEqual(deps, [[1, 1, 0, -1]])


class SymbolicKernelTests(SimpleTestCase):

    def test_row_vector(self):
        l0, l1 = Poly.gens(('l0', 'l1'))
        vector = symbolic_kernel_vector(PolyMatrix([[l0, l1]], ('l0', 'l1')))
        self.assertEqual(vector, [l1, -l0])

    def test_cramer(self):
        l0, l1 = Poly.gens(('l0', 'l1'))
        one, zero = Poly.one(('l0', 'l1')), Poly.zero(('l0', 'l1'))
        matrix = PolyMatrix([[one, zero, l0], [zero, one, l1]], ('l0', 'l1'))
        self.assertTrue(proportional(symbolic_kernel_vector(matrix), [-l0, -l1, one]))

    def test_identity_holds(self):
        l0, l1, l2 = Poly.gens(LINE_COORDS)
        matrix = PolyMatrix([[l0, l1, l2, l0 + l1], [l1, l2, l0, Poly.zero(LINE_COORDS)]], LINE_COORDS)
        with self.assertRaises(DegenerateKernel):
            symbolic_kernel_vector(matrix)
        square = PolyMatrix([[l0, l1], [l1, l0]], ('l0', 'l1', 'l2'))
        with self.assertRaises(NoKernel):
            symbolic_kernel_vector(square)

    def test_polynomial_determinant(self):
        l0, l1, l2 = Poly.gens(LINE_COORDS)
        matrix = PolyMatrix([[l0, l1], [l2, l0]], LINE_COORDS)
        self.assertEqual(matrix.determinant(), l0 ** 2 - l1 * l2)


class QuadraticFormTests(SimpleTestCase):

    def test_monomial_product(self):
        factors = factor_into_linear(bx * by)
        self.assertEqual(set(factors.factors), {bx, by})
        self.assertEqual(factors.disc, 0)
        self.assertEqual(factors.first * factors.second * factors.scalar, bx * by)

    def test_difference_of_squares_over_sqrt2(self):
        form = bx ** 2 - (by ** 2).scale(2)
        factors = factor_into_linear(form)
        root = QuadExtScalar(0, 1, 2)
        self.assertEqual(factors.disc, 2)
        self.assertEqual(set(factors.factors), {bx - by.scale(root), bx + by.scale(root)})
        self.assertEqual((factors.first * factors.second).scale(factors.scalar), form)

    def test_full_rank_is_irreducible(self):
        self.assertIsNone(factor_into_linear(x ** 2 + y ** 2 + z ** 2))

    def test_square(self):
        factors = factor_into_linear((x + y) ** 2 * 3)
        self.assertEqual(factors.first, x + y)
        self.assertEqual(factors.second, x + y)
        self.assertEqual(factors.scalar, 3)

    def test_zero_form(self):
        with self.assertRaises(ValueError):
            factor_into_linear(Poly.zero(XYZ))
