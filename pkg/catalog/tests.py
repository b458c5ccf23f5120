from fractions import Fraction

from django.contrib.auth import get_user_model
from django.test import SimpleTestCase, TestCase

from catalog.models import CatalogEntry
from catalog.services import (
    PHI1,
    PHI1A,
    PHI1B,
    PHI2,
    PHI3,
    EquivalenceWitness,
    apply_witness,
    catalog,
    classify_quadric_image,
    dual_pairs,
    expected_signature,
    get_form,
    identity_witness,
    invariant_signature,
    invert_witness,
    match_against_catalog,
    quadric_normal_form,
    random_witness,
    verify_equivalence,
)
from planarize.exceptions import InvalidWitness, NotAQuadricImageMap
from planarity.services import (
    degree_formula_check,
    double_dual_check,
    dual_map,
    implicitize,
    is_cotrivial,
    is_planarization,
)
from polys.services import XYZ, Poly, identity, proportional
from ratmaps.services import base_locus, normalize_map, topological_degree

x, y, z = Poly.gens(XYZ)

Q10 = normalize_map([x ** 2, x * y, y ** 2, z ** 2])
SWAP_XY = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
SWAP_UW = [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]


class CatalogTests(SimpleTestCase):

    def test_all_forms_are_loaded(self):
        labels = [form.label for form in catalog()]
        self.assertEqual(len(labels), 19)
        self.assertEqual(labels[:10], [f"Q{i}" for i in range(1, 11)])
        self.assertEqual(labels[10:16], [f"C{i}" for i in range(1, 7)])
        self.assertEqual(labels[16:], ['Phi1a', 'Phi1b', 'Phi2'])

    def test_components(self):
        self.assertEqual(
            get_form('C5').map.components,
            (x ** 2 * (x + y), y ** 2 * (x + y), z ** 2 * (x - y), x * y * z),
        )
        self.assertEqual(get_form('Q10').map.components, Q10.components)
        self.assertEqual(get_form('Phi1b').map.components, (x ** 2, x * y, x * z, y ** 2 + z ** 2))

    def test_unknown_label(self):
        with self.assertRaises(KeyError):
            get_form('Q11')

    def test_dual_pairs(self):
        pairs = dual_pairs()
        for i in range(1, 7):
            self.assertIn((f"Q{i}", f"C{i}"), pairs)
            self.assertIn((f"C{i}", f"Q{i}"), pairs)
        self.assertIn(('Q10', 'Q10'), pairs)

    def test_as_dict(self):
        data = get_form('C1').as_dict()
        self.assertEqual(data['surfaceEquation'], '4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w')
        self.assertEqual(data['expected']['baseWeight'], 3)


class CatalogSelfTests(SimpleTestCase):
    """Every stored invariant is recomputed from the map."""

    def test_planarity_and_degree(self):
        for form in catalog():
            with self.subTest(form=form.label):
                self.assertEqual(form.map.degree, form.expected['mapDegree'])
                self.assertTrue(is_planarization(form.map))

    def test_cotrivial_flags(self):
        for form in catalog():
            with self.subTest(form=form.label):
                self.assertEqual(is_cotrivial(form.map), form.expected['cotrivial'])

    def test_base_loci(self):
        for form in catalog():
            with self.subTest(form=form.label):
                locus = base_locus(form.map)
                self.assertTrue(locus.complete)
                self.assertEqual(locus.weight, form.expected['baseWeight'])
                self.assertEqual(locus.multiplicities(), form.expected['baseMultiplicities'])
                self.assertEqual(locus.discs(), form.expected['baseDiscs'])

    def test_surfaces(self):
        for form in catalog():
            with self.subTest(form=form.label):
                surface = implicitize(form.map)
                self.assertEqual(surface.degree, form.expected['surfaceDegree'])
                self.assertEqual(surface.image_dimension, 2)
                if form.surface_equation is not None:
                    self.assertTrue(proportional(list(surface.equations), [form.surface_equation]))

    def test_dual_degrees(self):
        for form in catalog():
            with self.subTest(form=form.label):
                self.assertEqual(dual_map(form.map).degree, form.expected['dualDegree'])

    def test_topological_degrees(self):
        for form in catalog():
            with self.subTest(form=form.label):
                degree = topological_degree(form.map)
                self.assertTrue(degree.samples_complete)
                self.assertEqual(degree.sampled, form.expected['topologicalDegree'])

    def test_degree_formula_over_seeds(self):
        for form in catalog():
            surface = implicitize(form.map)
            for seed in range(5):
                with self.subTest(form=form.label, seed=seed):
                    self.assertTrue(degree_formula_check(form.map, seed=seed, surface=surface).holds)

    def test_double_dual(self):
        for form in catalog():
            if form.expected['cotrivial']:
                continue
            with self.subTest(form=form.label):
                self.assertTrue(double_dual_check(form.map))


class DualCatalogTests(SimpleTestCase):

    def test_duals_of_quartic_forms_have_cubic_signatures(self):
        for i in range(1, 7):
            with self.subTest(form=f"Q{i}"):
                dual = dual_map(get_form(f"Q{i}").map).as_source_map()
                self.assertEqual(invariant_signature(dual), expected_signature(get_form(f"C{i}")))

    def test_duals_of_cubic_surface_forms_are_quadratic(self):
        signatures = [expected_signature(get_form(label)) for label in ('Q7', 'Q8', 'Q9')]
        for label in ('Q7', 'Q8', 'Q9'):
            with self.subTest(form=label):
                dual = dual_map(get_form(label).map).as_source_map()
                self.assertEqual(dual.degree, 2)
                self.assertIn(invariant_signature(dual), signatures)


class EquivalenceTests(SimpleTestCase):

    def test_identity(self):
        self.assertTrue(verify_equivalence(Q10, Q10, identity_witness()))

    def test_swap_of_source_and_target(self):
        self.assertTrue(verify_equivalence(Q10, Q10, EquivalenceWitness(SWAP_XY, SWAP_UW)))
        self.assertFalse(verify_equivalence(Q10, Q10, EquivalenceWitness(SWAP_XY, identity(4))))

    def test_sign_of_last_coordinate(self):
        flipped = normalize_map([x ** 2, x * y, y ** 2, -z ** 2])
        mu = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
        self.assertTrue(verify_equivalence(flipped, Q10, EquivalenceWitness(identity(3), mu)))

    def test_singular_witness(self):
        with self.assertRaises(InvalidWitness):
            EquivalenceWitness([[1, 0, 0], [0, 1, 0], [1, 1, 0]], identity(4))
        with self.assertRaises(InvalidWitness):
            EquivalenceWitness(identity(3), [[1, 0, 0, 0]] * 4)

    def test_inverted_witness(self):
        for seed in range(5):
            witness = random_witness(seed)
            for label in ('C1', 'Q7', 'Phi1b'):
                with self.subTest(seed=seed, form=label):
                    phi = get_form(label).map
                    moved = apply_witness(phi, witness)
                    self.assertTrue(verify_equivalence(moved, phi, witness))
                    self.assertTrue(verify_equivalence(phi, moved, invert_witness(witness)))

    def test_rational_witness_entries(self):
        witness = EquivalenceWitness([[Fraction(1, 2), 0, 0], [0, 1, 0], [0, 0, 1]], identity(4))
        self.assertEqual(witness.as_dict()['eta'][0], ['1/2', '0', '0'])


class ClassifyQuadricImageTests(SimpleTestCase):

    def test_normal_forms(self):
        labels = []
        for label in (PHI1A, PHI1B, PHI2, PHI3):
            with self.subTest(form=label):
                result = classify_quadric_image(quadric_normal_form(label))
                self.assertEqual(result.label, label)
                self.assertIsNotNone(result.witness)
                labels.append(result.label)
        self.assertEqual(len(set(labels)), 4)

    def test_cone_form_has_identity_witness(self):
        result = classify_quadric_image(Q10)
        self.assertEqual(result.label, PHI3)
        self.assertEqual(result.surface_rank, 3)
        self.assertEqual([list(r) for r in result.witness.eta], identity(3))

    def test_catalog_labels(self):
        self.assertEqual(classify_quadric_image(get_form('Phi2').map).label, PHI2)
        self.assertEqual(classify_quadric_image(normalize_map([x ** 2, x * y, y ** 2, x * z])).label, PHI2)
        self.assertEqual(classify_quadric_image(get_form('Phi1b').map).label, PHI1B)

    def test_negative_square_term(self):
        phi = normalize_map([x ** 2, x * y, y ** 2, x * z - (z ** 2).scale(2)])
        result = classify_quadric_image(phi)
        self.assertEqual(result.label, PHI3)
        self.assertTrue(verify_equivalence(phi, quadric_normal_form(PHI3), result.witness))

    def test_complex_mode_merges_smooth_classes(self):
        self.assertEqual(classify_quadric_image(quadric_normal_form(PHI1A), field='complex').label, PHI1)
        self.assertEqual(classify_quadric_image(quadric_normal_form(PHI1B), field='complex').label, PHI1)
        self.assertEqual(classify_quadric_image(Q10, field='complex').label, PHI3)

    def test_stable_under_random_witnesses(self):
        for label in (PHI1A, PHI1B, PHI2, PHI3):
            for seed in range(100):
                with self.subTest(form=label, seed=seed):
                    moved = apply_witness(quadric_normal_form(label), random_witness(seed))
                    result = classify_quadric_image(moved)
                    self.assertEqual(result.label, label)
                    self.assertIsNotNone(result.witness)
                    self.assertTrue(
                        verify_equivalence(moved, quadric_normal_form(label), result.witness)
                    )

    def test_preconditions(self):
        with self.assertRaises(NotAQuadricImageMap):
            classify_quadric_image(get_form('C1').map)
        with self.assertRaises(NotAQuadricImageMap):
            classify_quadric_image(get_form('Q1').map)
        with self.assertRaises(NotAQuadricImageMap):
            classify_quadric_image(normalize_map([x ** 2, x * y, y ** 2, x ** 2 + x * y]))

    def test_unknown_field(self):
        with self.assertRaises(ValueError):
            classify_quadric_image(Q10, field='p-adic')


class InvariantSignatureTests(SimpleTestCase):

    def test_cone_form(self):
        signature = invariant_signature(Q10)
        self.assertEqual(
            (signature.map_degree, signature.trivial, signature.cotrivial, signature.base_weight,
             signature.surface_degree, signature.topological_degree, signature.dual_degree),
            (2, False, False, 0, 2, 2, 2),
        )
        self.assertTrue(signature.complete)

    def test_cubic_form(self):
        signature = invariant_signature(get_form('C1').map)
        self.assertEqual(signature.base_multiplicities, (1, 1, 1))
        self.assertEqual(signature.base_weight, 3)
        self.assertEqual(signature.surface_degree, 3)
        self.assertEqual(signature.topological_degree, 2)
        self.assertEqual(signature.dual_degree, 2)

    def test_cotrivial_form(self):
        signature = invariant_signature(get_form('Phi1a').map)
        self.assertTrue(signature.cotrivial)
        self.assertEqual(signature.base_weight, 2)

    def test_invariance_under_random_witnesses(self):
        for label in ('Q7', 'Q10', 'C1', 'C3', 'Phi1b'):
            phi = get_form(label).map
            reference = invariant_signature(phi)
            for seed in range(25):
                with self.subTest(form=label, seed=seed):
                    moved = apply_witness(phi, random_witness(100 + seed))
                    self.assertEqual(invariant_signature(moved), reference)

    def test_match_against_catalog(self):
        self.assertEqual(match_against_catalog(get_form('C3').map), ['C3'])
        self.assertEqual(match_against_catalog(get_form('C6').map), ['C6'])
        self.assertEqual(match_against_catalog(get_form('C1').map), ['C1', 'C2'])
        moved = apply_witness(Q10, random_witness(3))
        self.assertEqual(match_against_catalog(moved), ['Q10'])

    def test_non_catalog_maps(self):
        trivial = normalize_map([x ** 2, x * y, y ** 2, x ** 2 + x * y])
        self.assertTrue(invariant_signature(trivial).trivial)
        self.assertEqual(match_against_catalog(trivial), [])
        self.assertEqual(match_against_catalog(normalize_map([x ** 3, y ** 3, z ** 3, x ** 2 * y])), [])


class CatalogEntryTests(TestCase):
    fixtures = ['normal_forms_fixture.json']

    def test_fixture_matches_catalog(self):
        self.assertEqual(CatalogEntry.objects.count(), 19)
        for form in catalog():
            entry = CatalogEntry.objects.get(label=form.label)
            with self.subTest(form=form.label):
                self.assertEqual(entry.as_dict()['expected'], form.expected)

    def test_str(self):
        entry = CatalogEntry.objects.get(label='Q10')
        self.assertEqual(str(entry), '(Q10) [x^2 : x*y : y^2 : z^2]')


class CatalogAdminTests(TestCase):
    fixtures = ['normal_forms_fixture.json']

    def setUp(self):
        user = get_user_model().objects.create_superuser('admin', 'admin@example.com', 'secret')
        self.client.force_login(user)

    def test_catalog_listed_first(self):
        response = self.client.get('/admin/')
        self.assertEqual(response.status_code, 200)
        labels = [app['app_label'] for app in response.context['app_list']]
        self.assertEqual(labels[0], 'catalog')
        self.assertIn('auth', labels)

    def test_changelist(self):
        response = self.client.get('/admin/catalog/catalogentry/')
        self.assertEqual(response.status_code, 200)
        self.assertContains(response, 'Q10')
