from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from planarize.exceptions import IncompatibleFieldError
from scalars.services import (
    QuadExtScalar,
    field_ops,
    format_scalar,
    make_scalar,
    scalar_disc,
    sqrt_in_field,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
DISCS = (2, 3, 5, -1, -3, 6)


@st.composite
def quad_triples(draw):
    disc = draw(st.sampled_from(DISCS))
    return tuple(make_scalar(draw(rationals), draw(rationals), disc) for _ in range(3))


class FieldOpsTests(SimpleTestCase):

    def test_rational_sum(self):
        self.assertEqual(field_ops(Fraction(1, 2), Fraction(1, 3), 'add'), Fraction(5, 6))

    def test_conjugate_product_is_rational(self):
        x = QuadExtScalar(1, 1, 2)
        product = field_ops(x, x.conjugate(), 'mul')
        self.assertIsInstance(product, Fraction)
        self.assertEqual(product, -1)

    def test_inverse_by_conjugate(self):
        x = QuadExtScalar(3, 1, 5)
        inverse = field_ops(x, op='inv')
        self.assertEqual(inverse, QuadExtScalar(Fraction(3, 4), Fraction(-1, 4), 5))
        self.assertEqual(x * inverse, 1)

    def test_inverse_of_zero(self):
        with self.assertRaises(ZeroDivisionError):
            field_ops(0, op='inv')

    def test_mixed_extensions(self):
        with self.assertRaises(IncompatibleFieldError):
            field_ops(QuadExtScalar(0, 1, 2), QuadExtScalar(0, 1, 3), 'add')

    def test_demotion_when_radical_part_cancels(self):
        x = QuadExtScalar(1, 2, 7)
        value = x - QuadExtScalar(0, 2, 7)
        self.assertIsInstance(value, Fraction)
        self.assertEqual(scalar_disc(value), 0)

    def test_equality_with_rationals(self):
        self.assertNotEqual(QuadExtScalar(1, 1, 2), 1)
        self.assertEqual(make_scalar(4, 0, 2), 4)

    def test_text_form(self):
        self.assertEqual(format_scalar(Fraction(5, 1)), '5')
        self.assertEqual(format_scalar(Fraction(-3, 4)), '-3/4')
        self.assertEqual(format_scalar(QuadExtScalar(Fraction(3, 4), Fraction(-1, 4), 5)), '3/4 - 1/4*sqrt(5)')
        self.assertEqual(format_scalar(QuadExtScalar(0, 1, -1)), 'sqrt(-1)')

    @settings(max_examples=60, derandomize=True, deadline=None)
    @given(quad_triples())
    def test_field_axioms(self, triple):
        x, y, z = triple
        self.assertEqual((x + y) + z, x + (y + z))
        self.assertEqual((x * y) * z, x * (y * z))
        self.assertEqual(x * (y + z), x * y + x * z)
        self.assertEqual(x + y, y + x)
        if x != 0:
            self.assertEqual(x * field_ops(x, op='inv'), 1)

    @settings(max_examples=60, derandomize=True, deadline=None)
    @given(rationals, rationals, rationals)
    def test_rational_axioms(self, x, y, z):
        self.assertEqual(field_ops(field_ops(x, y, 'mul'), z, 'mul'), x * (y * z))
        self.assertEqual(field_ops(x, field_ops(y, z, 'add'), 'mul'), x * y + x * z)


class SqrtInFieldTests(SimpleTestCase):

    def test_perfect_square(self):
        self.assertEqual(sqrt_in_field(4), 2)

    def test_square_free(self):
        self.assertEqual(sqrt_in_field(2), QuadExtScalar(0, 1, 2))

    def test_rational_with_square_factor(self):
        root = sqrt_in_field(Fraction(9, 2))
        self.assertEqual((root.a, root.b, root.disc), (0, Fraction(3, 2), 2))

    def test_negative_goes_imaginary(self):
        root = sqrt_in_field(-4)
        self.assertEqual((root.a, root.b, root.disc), (0, 2, -1))

    def test_zero(self):
        self.assertEqual(sqrt_in_field(0), 0)

    @settings(max_examples=80, derandomize=True, deadline=None)
    @given(rationals.filter(lambda r: r != 0))
    def test_square_of_root(self, r):
        self.assertEqual(sqrt_in_field(r) ** 2, r)
