"""
Analysis reports.

``analyze`` runs the whole pipeline on one map. Every stage is isolated:
a failing stage stores ``{"error": code, "message": text}`` under its key
and the report goes on with the stages that do not depend on it.
"""

import json
import logging

from django.conf import settings

from catalog.services import (
    InvariantSignature,
    catalog,
    classify_quadric_image,
    match_against_catalog,
    verify_equivalence,
)
from planarize.exceptions import ImageSpansLine, PlanarizeError
from planarity.services import (
    cotriviality,
    degree_formula_check,
    dual_map,
    implicitize,
    is_planarization,
    is_trivial,
    main_theorem_class,
)
from ratmaps.services import base_locus, topological_degree

logger = logging.getLogger(__name__)

FIELD_ALIASES = {'rational': 'real', 'real': 'real', 'complex': 'complex'}


def _error_response(error):
    if isinstance(error, PlanarizeError):
        return error.as_dict()
    return {'error': 'INTERNAL_ERROR', 'message': str(error)}


def _stage(report, key, func, to_dict=lambda value: value.as_dict()):
    """Run one stage; its result (or its error) is stored under ``key``."""
    try:
        value = func()
    except Exception as e:
        logger.error(f"Stage {key} failed: {e}")
        report[key] = _error_response(e)
        return None
    report[key] = to_dict(value)
    return value


def _options(seed, dmax, field):
    return (
        settings.PLANARIZE_DEFAULT_SEED if seed is None else seed,
        settings.PLANARIZE_DMAX if dmax is None else dmax,
        FIELD_ALIASES.get(field or 'real', field),
    )


def _header(phi, seed, source):
    return {
        'schema': settings.PLANARIZE_SCHEMA,
        'toolVersion': settings.PLANARIZE_VERSION,
        'seed': seed,
        'input': source if source is not None else str(phi),
        'map': phi.as_strings(),
        'degree': phi.degree,
        'extractedContent': str(phi.extracted_content),
    }


def analyze(phi, seed=None, dmax=None, field=None, source=None):
    """Full analysis report of a normalized map."""
    seed, dmax, field = _options(seed, dmax, field)
    report = _header(phi, seed, source)
    flags = {}
    report['flags'] = flags

    try:
        flags['isPlanarization'] = is_planarization(phi, seed=seed)
    except PlanarizeError as e:
        report['planarity'] = _error_response(e)
        return report
    if not flags['isPlanarization']:
        report['mainTheoremClass'] = main_theorem_class(phi, seed=seed)
        logger.info(f"{phi} is not a planarization; report stops at the flags")
        return report

    flags['isTrivial'] = is_trivial(phi)
    flags['imageSpansLine'] = False
    dual = None
    try:
        dual = dual_map(phi, seed=seed)
        report['dual'] = dual.as_dict()
    except ImageSpansLine as e:
        flags['imageSpansLine'] = True
        report['dual'] = _error_response(e)
    except PlanarizeError as e:
        report['dual'] = _error_response(e)

    cotrivial = _stage(report, 'cotriviality', lambda: cotriviality(phi, seed=seed), lambda c: {
        'cotrivial': c.cotrivial,
        'center': str(c.center) if c.center is not None else None,
    })
    if cotrivial is not None:
        flags['isCotrivial'] = cotrivial.cotrivial

    draws = settings.PLANARIZE_MULTIPLICITY_DRAWS
    samples = settings.PLANARIZE_FIBER_SAMPLES
    locus = _stage(report, 'baseLocus', lambda: base_locus(phi, seed=seed, draws=draws))
    surface = _stage(report, 'surface', lambda: implicitize(phi, dmax=dmax, seed=seed))
    degree = _stage(
        report, 'topologicalDegree', lambda: topological_degree(phi, seed=seed, samples=samples)
    )
    if locus is not None and surface is not None and degree is not None:
        _stage(report, 'degreeFormula', lambda: degree_formula_check(
            phi, seed=seed, dmax=dmax, locus=locus, surface=surface, degree=degree,
        ))

    _stage(report, 'mainTheoremClass', lambda: main_theorem_class(phi, seed=seed), lambda c: c)
    report['classification'] = _classification(phi, seed, field, flags, locus, surface, degree, dual)
    logger.info(f"Analysis of {phi} finished")
    return report


def _classification(phi, seed, field, flags, locus, surface, degree, dual):
    result = {}
    if phi.degree == 2 and surface is not None and surface.degree == 2 and not flags['isTrivial']:
        _stage(result, 'quadric', lambda: classify_quadric_image(phi, field=field, seed=seed))
        if 'label' in result['quadric']:
            result['quadricLabel'] = result['quadric']['label']
    pieces = (locus, surface, degree)
    if any(p is None for p in pieces) or not locus.complete or not degree.samples_complete:
        result['catalogMatches'] = None
        return result
    signature = InvariantSignature(
        map_degree=phi.degree,
        trivial=flags['isTrivial'],
        cotrivial=flags.get('isCotrivial'),
        base_multiplicities=tuple(locus.multiplicities()),
        base_weight=locus.weight,
        surface_degree=surface.degree,
        topological_degree=degree.sampled,
        dual_degree=dual.degree if dual is not None else None,
        base_discs=tuple(locus.discs()),
    )
    result['signature'] = signature.as_dict()
    result['catalogMatches'] = match_against_catalog(
        phi, seed=seed, signature=signature, path=settings.PLANARIZE_CATALOG_FILE,
    )
    return result


# ----------------------------------------------------------------------
# sub-reports of the command line


def check_report(phi, seed=None):
    seed, _, _ = _options(seed, None, None)
    return {'degree': phi.degree, 'isPlanarization': is_planarization(phi, seed=seed), 'seed': seed}


def dual_report(phi, seed=None):
    seed, _, _ = _options(seed, None, None)
    return dual_map(phi, seed=seed).as_dict()


def surface_report(phi, seed=None, dmax=None):
    seed, dmax, _ = _options(seed, dmax, None)
    data = implicitize(phi, dmax=dmax, seed=seed).as_dict()
    data['equation'] = data['equations'][0]
    return data


def base_locus_report(phi, seed=None):
    seed, _, _ = _options(seed, None, None)
    locus = base_locus(phi, seed=seed, draws=settings.PLANARIZE_MULTIPLICITY_DRAWS)
    data = locus.as_dict()
    data['multiplicities'] = locus.multiplicities()
    return data


def classify_report(phi, seed=None, field=None):
    seed, _, field = _options(seed, None, field)
    data = {'field': field}
    if phi.degree == 2:
        _stage(data, 'quadric', lambda: classify_quadric_image(phi, field=field, seed=seed))
    data['catalogMatches'] = match_against_catalog(
        phi, seed=seed, path=settings.PLANARIZE_CATALOG_FILE,
    )
    return data


def catalog_report():
    return [form.as_dict() for form in catalog(settings.PLANARIZE_CATALOG_FILE)]


def equivalence_report(phi, other, witness):
    return {
        'equivalent': verify_equivalence(phi, other, witness),
        'witness': witness.as_dict(),
    }


def render(report):
    """Stable JSON text: sorted keys, fixed separators."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
