"""
Projective invariants of a planarization, compared against the catalog.

Equal signatures are a necessary condition for equivalence only.
"""

import logging
from dataclasses import dataclass, field

from planarize.exceptions import DegenerateKernel, DegreeBoundExceeded, ImageSpansLine, NoKernel, NotASurfaceImage
from planarity.services import DMAX, dual_map, implicitize, is_cotrivial, is_planarization, is_trivial
from ratmaps.services import base_locus, topological_degree

from .catalog import catalog

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSignature:
    map_degree: int
    trivial: bool
    cotrivial: bool
    base_multiplicities: tuple
    base_weight: int
    surface_degree: int
    topological_degree: int
    dual_degree: int
    base_discs: tuple
    incomplete: tuple = field(default=(), compare=False)

    @property
    def complete(self):
        return not self.incomplete

    def as_dict(self):
        return {
            'mapDegree': self.map_degree,
            'trivial': self.trivial,
            'cotrivial': self.cotrivial,
            'baseMultiplicities': list(self.base_multiplicities),
            'baseWeight': self.base_weight,
            'surfaceDegree': self.surface_degree,
            'topologicalDegree': self.topological_degree,
            'dualDegree': self.dual_degree,
            'baseDiscs': list(self.base_discs),
            'incomplete': list(self.incomplete),
        }


def expected_signature(form):
    """Signature stored with a catalog entry; catalog forms are never trivial."""
    expected = form.expected
    return InvariantSignature(
        map_degree=expected['mapDegree'],
        trivial=False,
        cotrivial=expected['cotrivial'],
        base_multiplicities=tuple(sorted(expected['baseMultiplicities'])),
        base_weight=expected['baseWeight'],
        surface_degree=expected['surfaceDegree'],
        topological_degree=expected['topologicalDegree'],
        dual_degree=expected['dualDegree'],
        base_discs=tuple(sorted(expected['baseDiscs'])),
    )


def invariant_signature(phi, seed=0, dmax=DMAX):
    """
    Recompute every invariant of phi. Stages that cannot finish leave None
    in their field and their name in ``incomplete``.
    """
    incomplete = []

    locus = base_locus(phi, seed=seed)
    if not locus.complete:
        incomplete.append('baseLocus')

    try:
        surface_degree = implicitize(phi, dmax=dmax, seed=seed).degree
    except DegreeBoundExceeded:
        surface_degree = None
        incomplete.append('surface')

    try:
        degree = topological_degree(phi, seed=seed)
        sampled = degree.sampled
        if not degree.samples_complete:
            incomplete.append('topologicalDegree')
    except NotASurfaceImage:
        sampled = None

    try:
        dual_degree = dual_map(phi, seed=seed).degree
    except (DegenerateKernel, ImageSpansLine, NoKernel):
        dual_degree = None

    signature = InvariantSignature(
        map_degree=phi.degree,
        trivial=is_trivial(phi),
        cotrivial=is_cotrivial(phi, seed=seed),
        base_multiplicities=tuple(locus.multiplicities()),
        base_weight=locus.weight,
        surface_degree=surface_degree,
        topological_degree=sampled,
        dual_degree=dual_degree,
        base_discs=tuple(locus.discs()),
        incomplete=tuple(incomplete),
    )
    logger.info(f"Signature of {phi}: {signature.as_dict()}")
    return signature


def match_against_catalog(phi, seed=0, signature=None, path=None):
    """
    Labels of the catalog forms sharing phi's signature. A precomputed
    ``signature`` is trusted to belong to a planarization.
    """
    if signature is None:
        if not is_planarization(phi, seed=seed):
            return []
        signature = invariant_signature(phi, seed=seed)
    matches = [form.label for form in catalog(path) if expected_signature(form) == signature]
    logger.info(f"{phi} matches {matches or 'no catalog form'}")
    return matches
