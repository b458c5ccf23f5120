"""
``python manage.py planarize <subcommand> [options] MAP``

Exit status: 0 on success, 1 when a predicate subcommand answers no
(``check``, ``verify-equiv``), 2 on input errors.
"""

import argparse
import json
import logging
from fractions import Fraction
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from analysis.services import map_lines, parse_map
from analysis.services.report import (
    analyze,
    base_locus_report,
    catalog_report,
    check_report,
    classify_report,
    dual_report,
    equivalence_report,
    render,
    surface_report,
)
from catalog.services import EquivalenceWitness
from planarize.exceptions import MapParseError, PlanarizeError

logger = logging.getLogger(__name__)

NEGATIVE = 1
INPUT_ERROR = 2

FIELDS = ('rational', 'real', 'complex')


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Emit a JSON document')
    common.add_argument('--seed', type=int, default=None, help='Seed of the random draws')
    common.add_argument('--dmax', type=int, default=None, help='Largest implicit degree tried')
    common.add_argument('--field', choices=FIELDS, default='real', help='Base field of the classifier')
    common.add_argument('--file', default=None, help='Read maps from a file, one per line')
    return common


def _yes_no(value):
    return 'yes' if value else 'no'


class Command(BaseCommand):
    help = 'Analyze rational maps from the projective plane to projective 3-space'

    def add_arguments(self, parser):
        common = _common_flags()
        subcommands = parser.add_subparsers(dest='subcommand', required=True)

        for name, help_text in (
            ('check', 'Decide whether the map sends lines to plane curves'),
            ('analyze', 'Full analysis report'),
            ('dual', 'Dual planarization'),
            ('implicitize', 'Implicit equation of the image surface'),
            ('base-locus', 'Base points with multiplicities'),
            ('classify', 'Quadric-image class and catalog matches'),
        ):
            sub = subcommands.add_parser(name, parents=[common], help=help_text)
            sub.add_argument('map', nargs='?', help='Map such as "[x^2 : x*y : y^2 : z^2]"')

        subcommands.add_parser('catalog', parents=[common], help='Shipped normal forms')

        equivalence = subcommands.add_parser(
            'verify-equiv', parents=[common], help='Check a witness between two maps',
        )
        equivalence.add_argument('map', help='Map phi')
        equivalence.add_argument('other', help="Map phi' with phi(x) = mu * phi'(eta * x)")
        equivalence.add_argument(
            '--witness', required=True, help='JSON {"eta": [[...]], "mu": [[...]]}',
        )

    def handle(self, *args, **options):
        subcommand = options['subcommand']
        handler = getattr(self, f"handle_{subcommand.replace('-', '_')}")
        try:
            handler(options)
        except MapParseError as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)
        except PlanarizeError as e:
            raise CommandError(f"{e.code}: {e}", returncode=NEGATIVE)

    # ------------------------------------------------------------------
    # input

    def _sources(self, options):
        if options.get('file'):
            try:
                text = Path(options['file']).read_text(encoding='utf-8')
            except OSError as e:
                raise CommandError(f"Cannot read {options['file']}: {e}", returncode=INPUT_ERROR)
            lines = map_lines(text)
            if not lines:
                raise CommandError(f"{options['file']} contains no maps", returncode=INPUT_ERROR)
            return lines
        if not options.get('map'):
            raise CommandError('Missing map (argument or --file)', returncode=INPUT_ERROR)
        return [options['map']]

    def _maps(self, options):
        return [(text, parse_map(text)) for text in self._sources(options)]

    def _emit(self, options, documents, describe):
        if options['json']:
            self.stdout.write(render(documents[0] if len(documents) == 1 else documents))
            return
        for document in documents:
            self.stdout.write(describe(document))

    # ------------------------------------------------------------------
    # subcommands

    def handle_check(self, options):
        reports = []
        for text, phi in self._maps(options):
            report = check_report(phi, seed=options['seed'])
            report['input'] = text
            reports.append(report)
        self._emit(options, reports, lambda r: (
            f"planarization: {_yes_no(r['isPlanarization'])} (degree {r['degree']})"
        ))
        if not all(r['isPlanarization'] for r in reports):
            raise CommandError('Not a planarization', returncode=NEGATIVE)

    def handle_analyze(self, options):
        from analysis.tasks import analyze_map_task

        sources = self._sources(options)
        if len(sources) == 1:
            phi = parse_map(sources[0])
            reports = [analyze(
                phi, seed=options['seed'], dmax=options['dmax'], field=options['field'],
                source=sources[0],
            )]
        else:
            logger.info(f"Batch analysis of {len(sources)} maps")
            pending = [
                analyze_map_task.delay(text, options['seed'], options['dmax'], options['field'])
                for text in sources
            ]
            reports = [result.get() for result in pending]
        self._emit(options, reports, self._describe_analysis)
        failed = [r['input'] for r in reports if r.get('error') == MapParseError.code]
        if failed:
            raise CommandError(f"Invalid maps: {', '.join(failed)}", returncode=INPUT_ERROR)

    def handle_dual(self, options):
        documents = [dual_report(phi, seed=options['seed']) for _, phi in self._maps(options)]
        self._emit(options, documents, lambda d: (
            f"dual: [{' : '.join(d['components'])}] (degree {d['degree']})"
        ))

    def handle_implicitize(self, options):
        documents = [
            surface_report(phi, seed=options['seed'], dmax=options['dmax'])
            for _, phi in self._maps(options)
        ]
        self._emit(options, documents, lambda d: (
            f"surface: {' = 0, '.join(d['equations'])} = 0 (degree {d['degree']})"
        ))

    def handle_base_locus(self, options):
        documents = [base_locus_report(phi, seed=options['seed']) for _, phi in self._maps(options)]
        self._emit(options, documents, self._describe_locus)

    def handle_classify(self, options):
        documents = [
            classify_report(phi, seed=options['seed'], field=options['field'])
            for _, phi in self._maps(options)
        ]
        self._emit(options, documents, self._describe_classification)

    def handle_catalog(self, options):
        forms = catalog_report()
        if options['json']:
            self.stdout.write(render(forms))
            return
        for form in forms:
            self.stdout.write(f"{form['label']:<6} [{' : '.join(form['components'])}]")

    def handle_verify_equiv(self, options):
        phi = parse_map(options['map'])
        other = parse_map(options['other'])
        witness = self._witness(options['witness'])
        report = equivalence_report(phi, other, witness)
        self._emit(options, [report], lambda r: f"equivalent: {_yes_no(r['equivalent'])}")
        if not report['equivalent']:
            raise CommandError('The witness does not relate the maps', returncode=NEGATIVE)

    # ------------------------------------------------------------------
    # helpers

    def _witness(self, text):
        try:
            data = json.loads(text)
            eta = [[Fraction(str(v)) for v in row] for row in data['eta']]
            mu = [[Fraction(str(v)) for v in row] for row in data['mu']]
            return EquivalenceWitness(eta, mu)
        except (json.JSONDecodeError, KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise CommandError(f"Invalid witness: {e}", returncode=INPUT_ERROR)
        except PlanarizeError as e:
            raise CommandError(f"Invalid witness: {e}", returncode=INPUT_ERROR)

    def _describe_analysis(self, report):
        if 'error' in report:
            return f"{report['input']}: {report['message']}"
        flags = report['flags']
        lines = [
            f"map: [{' : '.join(report['map'])}] (degree {report['degree']})",
            f"planarization: {_yes_no(flags.get('isPlanarization'))}",
        ]
        if 'isTrivial' in flags:
            lines.append(f"trivial: {_yes_no(flags['isTrivial'])}")
        if 'isCotrivial' in flags:
            lines.append(f"cotrivial: {_yes_no(flags['isCotrivial'])}")
        surface = report.get('surface', {})
        if 'equations' in surface:
            lines.append(f"surface: {' = 0, '.join(surface['equations'])} = 0")
        degree = report.get('topologicalDegree', {})
        if 'sampled' in degree:
            lines.append(f"topological degree: {degree['sampled']}")
        dual = report.get('dual', {})
        if 'components' in dual:
            lines.append(f"dual: [{' : '.join(dual['components'])}]")
        if 'mainTheoremClass' in report:
            lines.append(f"class: {report['mainTheoremClass']}")
        classification = report.get('classification', {})
        if classification.get('quadricLabel'):
            lines.append(f"quadric class: {classification['quadricLabel']}")
        if classification.get('catalogMatches') is not None:
            lines.append(f"catalog: {', '.join(classification['catalogMatches']) or 'none'}")
        return '\n'.join(lines)

    def _describe_locus(self, document):
        lines = [
            f"[{' : '.join(point['point'])}] multiplicity {point['multiplicity']}"
            for point in document['points']
        ]
        lines.append(f"weight: {document['weight']}")
        if not document['complete']:
            lines.append('incomplete: some base points could not be resolved')
        return '\n'.join(lines)

    def _describe_classification(self, document):
        lines = []
        quadric = document.get('quadric')
        if quadric is not None:
            lines.append(f"quadric class: {quadric.get('label', quadric.get('message'))}")
        lines.append(f"catalog: {', '.join(document['catalogMatches']) or 'none'}")
        return '\n'.join(lines)
