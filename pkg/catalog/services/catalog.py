"""
Built-in normal forms.

The forms and their expected invariants are read from the same fixture
file that ``manage.py loaddata`` loads into ``CatalogEntry``.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from polys.services import UVWT

logger = logging.getLogger(__name__)

CATALOG_FILE = Path(__file__).resolve().parent.parent.parent / 'django_fixtures' / 'normal_forms_fixture.json'
CATALOG_MODEL = 'catalog.catalogentry'

QUADRATIC = 'quadratic'
CUBIC = 'cubic'
QUADRIC_IMAGE = 'quadric-image'


@dataclass(frozen=True)
class NormalForm:
    label: str
    family: str
    map: object
    expected: dict = field(hash=False, compare=False)
    surface_equation: object = None
    dual_label: str = ''
    notes: str = ''

    def as_dict(self):
        return {
            'label': self.label,
            'family': self.family,
            'components': self.map.as_strings(),
            'surfaceEquation': str(self.surface_equation) if self.surface_equation is not None else None,
            'dualLabel': self.dual_label or None,
            'expected': dict(self.expected),
        }


def _expected(fields):
    return {
        'mapDegree': fields['map_degree'],
        'surfaceDegree': fields['surface_degree'],
        'baseWeight': fields['base_weight'],
        'baseMultiplicities': sorted(fields.get('base_multiplicities', [])),
        'baseDiscs': sorted(fields.get('base_discs', [])),
        'topologicalDegree': fields['topological_degree'],
        'cotrivial': fields['cotrivial'],
        'dualDegree': fields['dual_degree'],
    }


def _normal_form(fields):
    from analysis.services.parser import parse_map, parse_poly

    phi = parse_map(f"[{' : '.join(fields['components'])}]")
    equation = fields.get('surface_equation') or ''
    return NormalForm(
        label=fields['label'],
        family=fields['family'],
        map=phi,
        expected=_expected(fields),
        surface_equation=parse_poly(equation, UVWT) if equation else None,
        dual_label=fields.get('dual_label', ''),
        notes=fields.get('notes', ''),
    )


@lru_cache(maxsize=4)
def _load(path):
    with open(path, encoding='utf-8') as handle:
        records = json.load(handle)
    entries = sorted(
        (r['fields'] for r in records if r.get('model') == CATALOG_MODEL),
        key=lambda f: f.get('order', 0),
    )
    forms = tuple(_normal_form(fields) for fields in entries)
    logger.info(f"Loaded {len(forms)} normal forms from {path}")
    return forms


def catalog(path=None):
    """All normal forms, in catalog order."""
    return list(_load(str(path or CATALOG_FILE)))


def get_form(label, path=None):
    for form in catalog(path):
        if form.label == label:
            return form
    raise KeyError(f"Unknown normal form: {label}")


def dual_pairs(path=None):
    """(label, label of its dual) for every form whose dual is in the catalog."""
    return [(form.label, form.dual_label) for form in catalog(path) if form.dual_label]
