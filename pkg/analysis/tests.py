import json
from fractions import Fraction
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from analysis.services import MAX_EXPONENT, map_lines, parse_map, parse_poly
from analysis.services.report import analyze, render
from analysis.tasks import analyze_map_task
from catalog.services import catalog
from planarize.exceptions import MapParseError
from planarity.services import DUAL_QUADRATIC, NOT_A_PLANARIZATION
from polys.services import UVWT, XYZ, Poly

x, y, z = Poly.gens(XYZ)

Q10_TEXT = '[x^2 : x*y : y^2 : z^2]'
C1_TEXT = '[z*(x^2+y^2):y*(x^2+z^2):x*(y^2+z^2):x*y*z]'
PHI1A_TEXT = '[x^2 : x*y : x*z : y*z]'
NOT_PLANAR_TEXT = '[x^3 : y^3 : z^3 : x^2*y]'
C1_EQUATION = '4*t^3 - t*u^2 - t*v^2 - t*w^2 + u*v*w'


def _terms(max_degree):
    exponents = st.tuples(*(st.integers(0, max_degree),) * 3).filter(lambda e: sum(e) <= max_degree)
    coefficients = st.fractions(min_value=-50, max_value=50, max_denominator=12)
    return st.dictionaries(exponents, coefficients, max_size=8)


class ParseMapTests(SimpleTestCase):

    def test_quadratic_map(self):
        phi = parse_map(Q10_TEXT)
        self.assertEqual(phi.degree, 2)
        self.assertEqual(list(phi.components), [x ** 2, x * y, y ** 2, z ** 2])

    def test_products_and_parentheses(self):
        phi = parse_map(C1_TEXT)
        self.assertEqual(phi.degree, 3)
        self.assertEqual(phi.components[0], z * (x ** 2 + y ** 2))

    def test_implicit_product_and_double_star(self):
        self.assertEqual(parse_poly('2x y**2', XYZ), (x * y ** 2).scale(2))

    def test_rational_coefficients(self):
        self.assertEqual(parse_poly('1/2*x - y', XYZ), x.scale(Fraction(1, 2)) - y)

    def test_common_factor_is_cleared(self):
        phi = parse_map('[x^3 : x^2*y : x*y^2 : x^2*z]')
        self.assertEqual(phi.degree, 2)
        self.assertEqual(str(phi.extracted_content), 'x')

    def test_dangling_operator_position(self):
        with self.assertRaises(MapParseError) as ctx:
            parse_map('[x : y : z : x+]')
        self.assertEqual(ctx.exception.position, 14)
        self.assertIn('offset 14', str(ctx.exception))

    def test_unknown_character(self):
        with self.assertRaises(MapParseError) as ctx:
            parse_map('[x : y : z : x$y]')
        self.assertEqual(ctx.exception.position, 14)

    def test_exponent_limit(self):
        parse_poly(f'x^{MAX_EXPONENT}', XYZ)
        with self.assertRaises(MapParseError) as ctx:
            parse_poly(f'x^{MAX_EXPONENT + 1}', XYZ)
        self.assertEqual(ctx.exception.position, 2)

    def test_term_limit(self):
        with self.assertRaises(MapParseError):
            parse_poly('*'.join(['(x+y+z+1)^9'] * 5), XYZ)

    def test_zero_denominator(self):
        with self.assertRaises(MapParseError):
            parse_poly('1/0*x', XYZ)

    def test_mixed_alphabets(self):
        with self.assertRaises(MapParseError):
            parse_poly('x + u')

    def test_map_must_use_source_variables(self):
        with self.assertRaises(MapParseError):
            parse_map('[u : v : w : t]')

    def test_non_homogeneous_component(self):
        with self.assertRaises(MapParseError) as ctx:
            parse_map('[x^2 : x*y : y^2 : z^2 + z]')
        self.assertEqual(ctx.exception.position, 19)

    def test_mixed_degrees(self):
        with self.assertRaises(MapParseError):
            parse_map('[x^2 : x*y : y^2 : z^3]')

    def test_polynomial_is_not_a_map(self):
        with self.assertRaises(MapParseError):
            parse_map('x^2 + y^2')
        with self.assertRaises(MapParseError):
            parse_poly(Q10_TEXT)

    def test_alphabet_picks_ring(self):
        self.assertEqual(parse_poly('u*v - w*t').ring, UVWT)

    def test_map_lines(self):
        text = f"# catalog sample\n{Q10_TEXT}\n\n  {C1_TEXT}  \n"
        self.assertEqual(map_lines(text), [Q10_TEXT, C1_TEXT])


class ParseRoundTripTests(SimpleTestCase):

    def test_catalog_forms(self):
        for form in catalog():
            with self.subTest(label=form.label):
                self.assertEqual(parse_map(str(form.map)), form.map)
                self.assertEqual(parse_poly(str(form.surface_equation), UVWT), form.surface_equation)

    @hypothesis_settings(max_examples=200, derandomize=True, deadline=None)
    @given(_terms(4))
    def test_random_polynomials(self, terms):
        poly = Poly(XYZ, terms)
        self.assertEqual(parse_poly(str(poly), XYZ), poly)


class AnalyzeReportTests(SimpleTestCase):

    def test_cubic_with_quadratic_dual(self):
        report = analyze(parse_map(C1_TEXT), seed=0)
        self.assertEqual(report['schema'], 1)
        self.assertEqual(report['flags'], {
            'isPlanarization': True,
            'isTrivial': False,
            'imageSpansLine': False,
            'isCotrivial': False,
        })
        self.assertEqual(report['surface']['equations'], [C1_EQUATION])
        self.assertEqual(report['dual']['degree'], 2)
        self.assertEqual(report['topologicalDegree']['sampled'], 2)
        self.assertEqual(report['baseLocus']['weight'], 3)
        self.assertTrue(report['degreeFormula']['holds'])
        self.assertEqual(report['mainTheoremClass'], DUAL_QUADRATIC)
        self.assertEqual(report['classification']['catalogMatches'], ['C1', 'C2'])

    def test_not_a_planarization_stops_early(self):
        report = analyze(parse_map(NOT_PLANAR_TEXT), seed=0)
        self.assertEqual(report['flags'], {'isPlanarization': False})
        self.assertEqual(report['mainTheoremClass'], NOT_A_PLANARIZATION)
        self.assertNotIn('surface', report)

    def test_cotrivial_center(self):
        report = analyze(parse_map(PHI1A_TEXT), seed=0)
        self.assertEqual(report['cotriviality'], {'cotrivial': True, 'center': '[0:0:0:1]'})
        self.assertEqual(report['classification']['quadricLabel'], 'Phi1a')

    def test_complex_field_merges_quadric_classes(self):
        report = analyze(parse_map(PHI1A_TEXT), seed=0, field='complex')
        self.assertEqual(report['classification']['quadricLabel'], 'Phi1')

    def test_input_is_echoed(self):
        report = analyze(parse_map(Q10_TEXT), seed=3, source=Q10_TEXT)
        self.assertEqual(report['input'], Q10_TEXT)
        self.assertEqual(report['seed'], 3)
        self.assertEqual(report['map'], ['x^2', 'x*y', 'y^2', 'z^2'])

    def test_same_seed_same_bytes(self):
        for form in catalog():
            with self.subTest(label=form.label):
                first = render(analyze(form.map, seed=7))
                second = render(analyze(parse_map(str(form.map)), seed=7))
                self.assertEqual(first, second)


class AnalyzeTaskTests(SimpleTestCase):

    def test_task_returns_report(self):
        report = analyze_map_task.delay(Q10_TEXT, 0).get()
        self.assertEqual(report['input'], Q10_TEXT)
        self.assertTrue(report['flags']['isPlanarization'])

    def test_task_reports_parse_errors(self):
        report = analyze_map_task.delay('[x : y : z : x+]').get()
        self.assertEqual(report['error'], MapParseError.code)
        self.assertEqual(report['position'], 14)


class PlanarizeCommandTests(SimpleTestCase):

    def run_command(self, *args):
        out = StringIO()
        call_command('planarize', *args, stdout=out, stderr=StringIO())
        return out.getvalue()

    def test_check_yes(self):
        self.assertIn('planarization: yes (degree 2)', self.run_command('check', Q10_TEXT))

    def test_check_no_exits_with_one(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('planarize', 'check', NOT_PLANAR_TEXT, stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('planarization: no (degree 3)', out.getvalue())

    def test_parse_error_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('check', '[x : y : z : x+]')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('offset 14', str(ctx.exception))

    def test_missing_map_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('check')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertEqual(str(ctx.exception), 'Missing map (argument or --file)')

    def test_unreadable_file_exits_with_two(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('analyze', '--file', '/nonexistent/maps.txt')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertTrue(str(ctx.exception).startswith('Cannot read /nonexistent/maps.txt'))

    def test_implicitize_json(self):
        data = json.loads(self.run_command('implicitize', '--json', C1_TEXT))
        self.assertEqual(data['equation'], C1_EQUATION)
        self.assertEqual(data['degree'], 3)

    def test_implicitize_text(self):
        self.assertIn(f'surface: {C1_EQUATION} = 0 (degree 3)', self.run_command('implicitize', C1_TEXT))

    def test_dual(self):
        data = json.loads(self.run_command('dual', '--json', C1_TEXT))
        self.assertEqual(data['degree'], 2)

    def test_dual_of_trivial_map_is_an_error(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('dual', '[x^2 : x*y : y^2 : x^2 + x*y]')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_base_locus(self):
        out = self.run_command('base-locus', PHI1A_TEXT)
        self.assertIn('[0 : 1 : 0] multiplicity 1', out)
        self.assertIn('[0 : 0 : 1] multiplicity 1', out)
        self.assertIn('weight: 2', out)

    def test_classify(self):
        data = json.loads(self.run_command('classify', '--json', '--field', 'rational', PHI1A_TEXT))
        self.assertEqual(data['quadric']['label'], 'Phi1a')
        self.assertEqual(data['catalogMatches'], ['Phi1a'])

    def test_catalog_json(self):
        data = json.loads(self.run_command('catalog', '--json'))
        self.assertEqual(len(data), 19)
        self.assertEqual(data[0]['label'], 'Q1')
        self.assertIn('expected', data[0])

    def test_analyze_json_is_sorted_and_stable(self):
        first = self.run_command('analyze', '--json', '--seed', '7', Q10_TEXT)
        second = self.run_command('analyze', '--json', '--seed', '7', Q10_TEXT)
        self.assertEqual(first, second)
        data = json.loads(first)
        self.assertEqual(list(data), sorted(data))
        self.assertEqual(data['seed'], 7)

    def test_analyze_batch_keeps_input_order(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'maps.txt'
            path.write_text(f"# two maps\n{C1_TEXT}\n{Q10_TEXT}\n", encoding='utf-8')
            data = json.loads(self.run_command('analyze', '--json', '--file', str(path)))
        self.assertEqual([r['input'] for r in data], [C1_TEXT, Q10_TEXT])

    def test_analyze_batch_with_bad_line(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'maps.txt'
            path.write_text(f"{Q10_TEXT}\n[x : y]\n", encoding='utf-8')
            with self.assertRaises(CommandError) as ctx:
                self.run_command('analyze', '--json', '--file', str(path))
        self.assertEqual(ctx.exception.returncode, 2)

    def test_verify_equiv(self):
        witness = json.dumps({
            'eta': [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
            'mu': [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        })
        out = self.run_command('verify-equiv', '--witness', witness, '[y^2 : x*y : x^2 : z^2]', Q10_TEXT)
        self.assertIn('equivalent: yes', out)

    def test_verify_equiv_negative(self):
        witness = json.dumps({
            'eta': [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            'mu': [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
        })
        with self.assertRaises(CommandError) as ctx:
            self.run_command('verify-equiv', '--witness', witness, '[y^2 : x*y : x^2 : z^2]', Q10_TEXT)
        self.assertEqual(ctx.exception.returncode, 1)

    def test_verify_equiv_bad_witness(self):
        with self.assertRaises(CommandError) as ctx:
            self.run_command('verify-equiv', '--witness', '{"eta": 1}', Q10_TEXT, Q10_TEXT)
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertTrue(str(ctx.exception).startswith('Invalid witness'))


class AnalysisApiTests(TestCase):
    fixtures = ['normal_forms_fixture.json']

    def test_catalog_list(self):
        response = self.client.get('/api/catalog/')
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['count'], 19)
        self.assertEqual(data['entries'][0]['label'], 'Q1')

    def test_catalog_detail(self):
        response = self.client.get('/api/catalog/Q10/')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()['components'], ['x^2', 'x*y', 'y^2', 'z^2'])
        self.assertEqual(self.client.get('/api/catalog/Q11/').status_code, 404)

    def test_analyze(self):
        response = self.client.post(
            '/api/analyze/', data=json.dumps({'map': C1_TEXT, 'seed': 0}), content_type='application/json',
        )
        self.assertEqual(response.status_code, 200)
        data = response.json()
        self.assertEqual(data['surface']['equations'], [C1_EQUATION])
        self.assertEqual(data['classification']['catalogMatches'], ['C1', 'C2'])

    def test_analyze_parse_error(self):
        response = self.client.post(
            '/api/analyze/', data=json.dumps({'map': '[x : y : z : x+]'}), content_type='application/json',
        )
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['position'], 14)

    def test_analyze_rejects_bad_requests(self):
        response = self.client.post('/api/analyze/', data='{', content_type='application/json')
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json(), {'error': 'INVALID_JSON', 'message': 'Invalid JSON body'})
        response = self.client.post('/api/analyze/', data=json.dumps({'seed': 1}), content_type='application/json')
        self.assertEqual(response.status_code, 400)
        response = self.client.post(
            '/api/analyze/', data=json.dumps({'map': Q10_TEXT, 'seed': 'a'}), content_type='application/json',
        )
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.json()['message'], 'seed must be an integer')
        self.assertEqual(self.client.get('/api/analyze/').status_code, 405)
