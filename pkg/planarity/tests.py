from django.test import SimpleTestCase

from planarize.exceptions import DegenerateKernel, DegreeBoundExceeded, NoKernel
from planarize.sampling import RationalSampler
from planarity.services import (
    COTRIVIAL,
    DUAL_QUADRATIC,
    NOT_A_PLANARIZATION,
    QUADRATIC,
    TRIVIAL,
    UNCLASSIFIED,
    concrete_restriction_matrix,
    cotriviality,
    degree_formula_check,
    double_dual_check,
    dual_map,
    implicitize,
    is_cotrivial,
    is_planarization,
    is_trivial,
    line_restriction_matrix,
    main_theorem_class,
    plane_of_line,
    planarity_polynomial,
)
from polys.services import LINE_COORDS, LINE_PARAMS, UVWT, XYZ, Poly, determinant_scalar
from ratmaps.services import ProjPoint, normalize_map

x, y, z = Poly.gens(XYZ)
u, v, w, t = Poly.gens(UVWT)
l0, l1, l2 = Poly.gens(LINE_COORDS)
p0, p1, p2, q0, q1, q2 = Poly.gens(LINE_PARAMS)

LINEAR = normalize_map([x, y, z, Poly.zero(XYZ)])
PHI1A = normalize_map([x ** 2, x * y, x * z, y * z])
PHI1B = normalize_map([x ** 2, x * y, x * z, y ** 2 + z ** 2])
PHI2 = normalize_map([x ** 2, x * y, y ** 2, x * z])
Q1 = normalize_map([x * y, x * z, y * z, x ** 2 + y ** 2 + z ** 2])
Q7 = normalize_map([y ** 2 - z ** 2, x * y, x * z, y * z])
Q8 = normalize_map([x * y, x * z, y ** 2, z ** 2])
Q10 = normalize_map([x ** 2, x * y, y ** 2, z ** 2])
C1 = normalize_map([
    z * (x ** 2 + y ** 2), y * (x ** 2 + z ** 2), x * (y ** 2 + z ** 2), x * y * z,
])
C6 = normalize_map([
    x ** 3, x * y ** 2, (x * y * z).scale(2) - y ** 3, z * (x * z - y ** 2),
])
CUBES = normalize_map([x ** 3, y ** 3, z ** 3, x * y * z])
NOT_PLANAR = normalize_map([x ** 3, y ** 3, z ** 3, x ** 2 * y])
TRIVIAL_QUADRATIC = normalize_map([x ** 2, x * y, y ** 2, x ** 2 + x * y])


class LineRestrictionTests(SimpleTestCase):

    def test_linear_map(self):
        matrix = line_restriction_matrix(LINEAR)
        self.assertEqual(matrix.n_rows, 2)
        self.assertEqual(matrix[0], [p0, p1, p2, Poly.zero(LINE_PARAMS)])
        self.assertEqual(matrix[1], [q0, q1, q2, Poly.zero(LINE_PARAMS)])

    def test_quadratic_leading_row(self):
        matrix = line_restriction_matrix(Q10)
        self.assertEqual(matrix.n_rows, 3)
        self.assertEqual(matrix[0], [p0 ** 2, p0 * p1, p1 ** 2, p2 ** 2])

    def test_end_rows_are_values_at_the_points(self):
        matrix = line_restriction_matrix(C1)
        for alpha, component in enumerate(C1.components):
            self.assertEqual(matrix[0][alpha], component.compose([p0, p1, p2], LINE_PARAMS))
            self.assertEqual(matrix[3][alpha], component.compose([q0, q1, q2], LINE_PARAMS))

    def test_concrete_determinant(self):
        matrix = concrete_restriction_matrix(NOT_PLANAR, (1, 1, 1), (1, 2, 3))
        self.assertEqual(determinant_scalar(matrix), 12)


class PlanarityTests(SimpleTestCase):

    def test_quadratic_maps_are_planarizations(self):
        self.assertTrue(is_planarization(Q1))
        self.assertTrue(is_planarization(LINEAR))

    def test_cubic_planarization(self):
        self.assertTrue(is_planarization(C1))
        self.assertFalse(planarity_polynomial(C1))

    def test_not_a_planarization(self):
        self.assertFalse(is_planarization(NOT_PLANAR))
        self.assertTrue(planarity_polynomial(NOT_PLANAR))

    def test_cubes_with_product(self):
        self.assertTrue(is_planarization(CUBES))

    def test_trivial(self):
        self.assertTrue(is_trivial(TRIVIAL_QUADRATIC))
        self.assertTrue(is_trivial(normalize_map([x ** 3, y ** 3, z ** 3, x ** 3 + y ** 3 + z ** 3])))
        self.assertFalse(is_trivial(Q10))

    def test_main_theorem_classes(self):
        self.assertEqual(main_theorem_class(TRIVIAL_QUADRATIC), TRIVIAL)
        self.assertEqual(main_theorem_class(PHI1A), COTRIVIAL)
        self.assertEqual(main_theorem_class(Q10), QUADRATIC)
        self.assertEqual(main_theorem_class(C1), DUAL_QUADRATIC)
        self.assertEqual(main_theorem_class(CUBES), UNCLASSIFIED)
        self.assertEqual(main_theorem_class(NOT_PLANAR), NOT_A_PLANARIZATION)


class DualMapTests(SimpleTestCase):

    def test_dual_of_cone_map(self):
        dual = dual_map(Q10)
        self.assertEqual(dual.components, (l0 ** 2, (l0 * l1).scale(2), l1 ** 2, -l2 ** 2))
        self.assertEqual(dual.degree, 2)

    def test_dual_degrees(self):
        self.assertEqual(dual_map(Q7).degree, 2)
        self.assertEqual(dual_map(Q1).degree, 3)
        self.assertEqual(dual_map(C1).degree, 2)

    def test_dual_of_cubes(self):
        dual = dual_map(CUBES)
        self.assertEqual(dual.components, (l0 ** 3, l1 ** 3, l2 ** 3, (l0 * l1 * l2).scale(-3)))

    def test_trivial_map_has_no_dual(self):
        with self.assertRaises(DegenerateKernel):
            dual_map(TRIVIAL_QUADRATIC)

    def test_non_planarization_has_no_dual(self):
        with self.assertRaises(NoKernel):
            dual_map(NOT_PLANAR)

    def test_cotrivial_centers(self):
        self.assertEqual(cotriviality(PHI1A).center, ProjPoint.from_coords((0, 0, 0, 1)))
        self.assertEqual(cotriviality(PHI1B).center, ProjPoint.from_coords((0, 0, 0, 1)))
        self.assertEqual(cotriviality(PHI2).center, ProjPoint.from_coords((0, 0, 1, 0)))

    def test_cotrivial_flags(self):
        self.assertTrue(is_cotrivial(TRIVIAL_QUADRATIC))
        self.assertFalse(is_cotrivial(Q10))
        self.assertFalse(is_cotrivial(C1))

    def test_double_dual(self):
        self.assertTrue(double_dual_check(Q10))
        self.assertTrue(double_dual_check(C1))
        self.assertTrue(double_dual_check(Q7))


class PlaneOfLineTests(SimpleTestCase):

    def test_plane_of_a_coordinate_line(self):
        analysis = plane_of_line(Q10, (0, 0, 1))
        self.assertFalse(analysis.special)
        self.assertEqual(analysis.plane, (0, 0, 0, 1))
        self.assertIsNone(analysis.residual_conic)

    def test_line_through_both_base_points_is_special(self):
        self.assertTrue(plane_of_line(PHI1A, (1, 0, 0)).special)

    def test_random_lines_of_a_cubic_planarization(self):
        sampler = RationalSampler(7)
        for index in range(50):
            line = sampler.vector(3)
            with self.subTest(line=index):
                analysis = plane_of_line(C1, line)
                self.assertFalse(analysis.special)
                member = C1.web_member(analysis.plane)
                self.assertEqual(member, Poly.linear_form(XYZ, line) * analysis.residual_conic)
                self.assertEqual(analysis.residual_conic.degree(), 2)


class ImplicitizationTests(SimpleTestCase):

    def test_cubic_surface(self):
        surface = implicitize(C1)
        self.assertEqual(surface.degree, 3)
        self.assertEqual(surface.image_dimension, 2)
        self.assertEqual([str(e) for e in surface.equations],
                         ['4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w'])

    def test_quadric_cone(self):
        surface = implicitize(Q10)
        self.assertEqual(surface.equations, (u * w - v ** 2,))

    def test_cuspidal_form(self):
        surface = implicitize(C6)
        expected = (u * ((t * v).scale(4) - w ** 2) + v ** 3).canonical()
        self.assertEqual(surface.equations, (expected,))

    def test_trivial_map_has_linear_equation(self):
        surface = implicitize(TRIVIAL_QUADRATIC)
        self.assertEqual(surface.degree, 1)
        self.assertEqual(surface.equations, (t - u - v,))

    def test_degree_bound(self):
        with self.assertRaises(DegreeBoundExceeded):
            implicitize(Q10, dmax=1)


class DegreeFormulaTests(SimpleTestCase):

    def test_cubic_form(self):
        result = degree_formula_check(C1)
        self.assertEqual(
            (result.map_degree_squared, result.surface_degree, result.topological_degree,
             result.base_weight),
            (9, 3, 2, 3),
        )
        self.assertTrue(result.holds)

    def test_quadratic_forms(self):
        cone = degree_formula_check(Q10)
        self.assertEqual((cone.surface_degree, cone.topological_degree, cone.base_weight), (2, 2, 0))
        self.assertTrue(cone.holds)
        cubic = degree_formula_check(Q8)
        self.assertEqual((cubic.surface_degree, cubic.topological_degree, cubic.base_weight), (3, 1, 1))
        self.assertTrue(cubic.holds)

    def test_as_dict(self):
        data = degree_formula_check(Q10).as_dict()
        self.assertEqual(data['lhs'], 4)
        self.assertEqual(data["rhs"], 4)
