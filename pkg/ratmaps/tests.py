from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies as st

from planarize.exceptions import (
    DimensionMismatchError,
    NonHomogeneousError,
    NotABasePoint,
    NotASurfaceImage,
    UnsupportedDegree,
)
from polys.services import XYZ, Poly
from ratmaps.services import (
    INFINITE,
    ProjPoint,
    base_locus,
    base_point_multiplicity,
    common_zeros,
    evaluate,
    fiber_over,
    intersection_multiplicity,
    is_strictly_cubic,
    jacobian_degeneracy,
    normalize_map,
    topological_degree,
)

x, y, z = Poly.gens(XYZ)
XY = ('x', 'y')
ax, ay = Poly.gens(XY)
ORIGIN = (0, 0)

PHI1 = normalize_map([x ** 2, x * y, x * z, y * z])
PHI2 = normalize_map([x ** 2, x * y, y ** 2, x * z])
Q1 = normalize_map([x * y, x * z, y * z, x ** 2 + y ** 2 + z ** 2])
Q8 = normalize_map([x * y, x * z, y ** 2, z ** 2])
Q10 = normalize_map([x ** 2, x * y, y ** 2, z ** 2])
C1 = normalize_map([
    z * (x ** 2 + y ** 2), y * (x ** 2 + z ** 2), x * (y ** 2 + z ** 2), x * y * z,
])


def point(*coords):
    return ProjPoint.from_coords(coords)


small = st.integers(min_value=-4, max_value=4)


@st.composite
def affine_curves(draw):
    """Polynomials of degree <= 2 in (x, y) through the origin."""
    monomials = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    coefficients = draw(st.lists(small, min_size=5, max_size=5))
    return Poly(XY, dict(zip(monomials, coefficients)))


class ProjPointTests(SimpleTestCase):

    def test_normalization(self):
        p = point(0, 2, 4)
        self.assertEqual(p.coords, (0, 1, 2))
        self.assertEqual(str(p), '[0:1:2]')
        self.assertEqual(p, point(0, Fraction(1, 3), Fraction(2, 3)))

    def test_zero_vector(self):
        with self.assertRaises(ValueError):
            point(0, 0, 0)


class NormalizeMapTests(SimpleTestCase):

    def test_extracts_common_factor(self):
        phi = normalize_map([x * x ** 2, x * x * y, x * y ** 2, x * z ** 2])
        self.assertEqual(phi.components, (x ** 2, x * y, y ** 2, z ** 2))
        self.assertEqual(phi.extracted_content, x)
        self.assertEqual(phi.degree, 2)
        self.assertFalse(is_strictly_cubic(phi))

    def test_coprime_components_are_kept(self):
        phi = normalize_map([x ** 3, y ** 3, z ** 3, x ** 2 * y])
        self.assertEqual(phi.extracted_content, Poly.one(XYZ))
        self.assertEqual(phi.components[3], x ** 2 * y)
        self.assertTrue(is_strictly_cubic(phi))

    def test_catalog_form_is_unchanged(self):
        self.assertEqual(Q10.components, (x ** 2, x * y, y ** 2, z ** 2))

    def test_errors(self):
        with self.assertRaises(DimensionMismatchError):
            normalize_map([x, y, z])
        with self.assertRaises(NonHomogeneousError):
            normalize_map([x, y, z, x ** 2])
        with self.assertRaises(UnsupportedDegree):
            normalize_map([Poly.zero(XYZ)] * 4)
        with self.assertRaises(UnsupportedDegree):
            normalize_map([x, x.scale(2), x, x])
        with self.assertRaises(UnsupportedDegree):
            normalize_map([x ** 4, y ** 4, z ** 4, x * y ** 3])


class EvaluateTests(SimpleTestCase):

    def test_indeterminate_points(self):
        self.assertIsNone(evaluate(PHI1, point(0, 1, 0)))
        self.assertIsNone(evaluate(C1, point(1, 0, 0)))

    def test_image(self):
        self.assertEqual(evaluate(Q10, point(1, 1, 1)), point(1, 1, 1, 1))
        self.assertEqual(evaluate(Q1, point(1, 0, 0)), point(0, 0, 0, 1))

    @settings(max_examples=30, derandomize=True, deadline=None)
    @given(st.lists(small, min_size=3, max_size=3), small.filter(bool))
    def test_projectively_well_defined(self, coords, scalar):
        assume(any(coords))
        scaled = [scalar * c for c in coords]
        self.assertEqual(evaluate(C1, point(*coords)), evaluate(C1, point(*scaled)))


class CommonZerosTests(SimpleTestCase):

    def test_coordinate_points(self):
        solution = common_zeros([x * y, x * z, y * z])
        self.assertTrue(solution.complete)
        self.assertEqual(
            set(solution.points), {point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)}
        )

    def test_conjugate_pair(self):
        solution = common_zeros([x ** 2 - (z ** 2).scale(2), x * y, y ** 2])
        self.assertTrue(solution.complete)
        self.assertEqual(len(solution.points), 2)
        first, second = solution.points
        self.assertEqual(first.disc, 2)
        self.assertEqual(first.conjugate(), second)
        for p in solution.points:
            self.assertEqual((x ** 2 - (z ** 2).scale(2)).evaluate(p.coords), 0)

    def test_no_zeros(self):
        solution = common_zeros([x ** 2 + y ** 2 + z ** 2, x * y, y * z, x * z])
        self.assertEqual(solution.points, ())
        self.assertTrue(solution.complete)

    def test_common_curve(self):
        solution = common_zeros([x * y, x * z])
        self.assertTrue(solution.positive_dimensional)
        self.assertFalse(solution.complete)


class IntersectionMultiplicityTests(SimpleTestCase):

    def test_transversal_axes(self):
        self.assertEqual(intersection_multiplicity(ax, ay, ORIGIN), 1)

    def test_tangent_parabola(self):
        self.assertEqual(intersection_multiplicity(ay, ay - ax ** 2, ORIGIN), 2)

    def test_point_off_a_curve(self):
        self.assertEqual(intersection_multiplicity(ax - ay, ax + ay, (1, 1)), 0)

    def test_common_component(self):
        self.assertEqual(intersection_multiplicity(ax * ay, ax * (ax + ay), ORIGIN), INFINITE)
        # the shared line misses (1, 1), the remaining factors meet transversally there
        f = (ax + 1) * (ax - ay)
        g = (ax + 1) * (ax + ay - 2)
        self.assertEqual(intersection_multiplicity(f, g, (1, 1)), 1)

    def test_cusp_and_line(self):
        self.assertEqual(intersection_multiplicity(ay ** 2 - ax ** 3, ay, ORIGIN), 3)

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(affine_curves(), affine_curves())
    def test_symmetry(self, f, g):
        assume(f and g)
        self.assertEqual(
            intersection_multiplicity(f, g, ORIGIN), intersection_multiplicity(g, f, ORIGIN)
        )

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(affine_curves(), affine_curves(), affine_curves())
    def test_additivity(self, f, g, h):
        assume(f and g and h)
        self.assertEqual(
            intersection_multiplicity(f, g * h, ORIGIN),
            intersection_multiplicity(f, g, ORIGIN) + intersection_multiplicity(f, h, ORIGIN),
        )

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(affine_curves(), affine_curves(), affine_curves())
    def test_invariance(self, f, g, a):
        assume(f and g and g + a * f)
        self.assertEqual(
            intersection_multiplicity(f, g + a * f, ORIGIN),
            intersection_multiplicity(f, g, ORIGIN),
        )

    @settings(max_examples=50, derandomize=True, deadline=None)
    @given(affine_curves(), affine_curves())
    def test_positive_at_common_point(self, f, g):
        assume(f and g)
        self.assertGreaterEqual(intersection_multiplicity(f, g, ORIGIN), 1)
        self.assertEqual(intersection_multiplicity(f + 1, g, ORIGIN), 0)


class BaseLocusTests(SimpleTestCase):

    def test_two_simple_base_points(self):
        locus = base_locus(PHI1)
        self.assertTrue(locus.complete)
        self.assertEqual({b.point for b in locus.points}, {point(0, 1, 0), point(0, 0, 1)})
        self.assertEqual(locus.multiplicities(), [1, 1])
        self.assertEqual(locus.weight, 2)

    def test_empty_base_locus(self):
        locus = base_locus(Q1)
        self.assertTrue(locus.complete)
        self.assertEqual(locus.weight, 0)

    def test_cubic_with_coordinate_base_points(self):
        locus = base_locus(C1)
        self.assertTrue(locus.complete)
        self.assertEqual(
            {b.point for b in locus.points}, {point(1, 0, 0), point(0, 1, 0), point(0, 0, 1)}
        )
        self.assertEqual(locus.weight, 3)

    def test_tangent_web_members(self):
        self.assertEqual(base_point_multiplicity(PHI2, point(0, 0, 1)), 2)

    def test_simple_points(self):
        self.assertEqual(base_point_multiplicity(PHI1, point(0, 1, 0)), 1)
        self.assertEqual(base_point_multiplicity(Q8, point(1, 0, 0)), 1)

    def test_not_a_base_point(self):
        with self.assertRaises(NotABasePoint):
            base_point_multiplicity(PHI1, point(1, 1, 1))

    def test_content_marks_positive_dimension(self):
        phi = normalize_map([x * x ** 2, x * x * y, x * y ** 2, x * z ** 2])
        self.assertTrue(base_locus(phi).positive_dimensional)
        self.assertFalse(base_locus(Q10).positive_dimensional)

    @settings(max_examples=25, derandomize=True, deadline=None)
    @given(st.lists(small, min_size=3, max_size=3))
    def test_indeterminate_points_are_base_points(self, coords):
        assume(any(coords))
        base_points = {b.point for b in base_locus(PHI1).points}
        p = point(*coords)
        self.assertEqual(evaluate(PHI1, p) is None, p in base_points)


class FiberTests(SimpleTestCase):

    def test_involution_fiber(self):
        fiber = fiber_over(Q10, point(1, 1, 1, 1))
        self.assertTrue(fiber.complete)
        self.assertEqual(set(fiber.points), {point(1, 1, 1), point(1, 1, -1)})

    def test_birational_fiber(self):
        fiber = fiber_over(PHI1, point(1, 1, 1, 1))
        self.assertTrue(fiber.complete)
        self.assertEqual(fiber.points, (point(1, 1, 1),))

    def test_fiber_contains_source(self):
        source = point(3, -2, 5)
        fiber = fiber_over(C1, evaluate(C1, source))
        self.assertIn(source, fiber.points)
        for p in fiber.points:
            self.assertEqual(evaluate(C1, p), evaluate(C1, source))

    def test_topological_degrees(self):
        self.assertEqual(topological_degree(Q10).sampled, 2)
        self.assertEqual(topological_degree(PHI1).sampled, 1)
        result = topological_degree(C1)
        self.assertEqual(result.sampled, 2)
        self.assertTrue(result.samples_complete)

    def test_curve_image(self):
        with self.assertRaises(NotASurfaceImage):
            topological_degree(normalize_map([x, y, x + y, x - y]))


class JacobianTests(SimpleTestCase):

    def test_ramification_line(self):
        result = jacobian_degeneracy(Q10)
        self.assertEqual(result.common_factor, z)
        self.assertEqual(result.generic_rank, 3)

    def test_linear_immersion(self):
        result = jacobian_degeneracy(normalize_map([x, y, z, Poly.zero(XYZ)]))
        self.assertEqual(result.generic_rank, 3)
        self.assertEqual(result.common_factor, Poly.one(XYZ))

    def test_curve_image_rank(self):
        phi = normalize_map([x ** 2, x * y, y ** 2, (x + y) ** 2])
        self.assertLessEqual(jacobian_degeneracy(phi).generic_rank, 2)
