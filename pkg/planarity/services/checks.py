import logging
from dataclasses import dataclass

from planarize.exceptions import IncompleteCheck
from polys.services import XYZ, proportional
from ratmaps.services import base_locus, topological_degree

from .dual import dual_map
from .implicit import DMAX, implicitize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeFormula:
    """d^2 against surfaceDegree * k + |B|."""

    map_degree_squared: int
    surface_degree: int
    topological_degree: int
    base_weight: int

    @property
    def rhs(self):
        return self.surface_degree * self.topological_degree + self.base_weight

    @property
    def holds(self):
        return self.map_degree_squared == self.rhs

    def as_dict(self):
        return {
            'mapDegreeSquared': self.map_degree_squared,
            'surfaceDegree': self.surface_degree,
            'topologicalDegree': self.topological_degree,
            'baseWeight': self.base_weight,
            'lhs': self.map_degree_squared,
            'rhs': self.rhs,
            'holds': self.holds,
        }


def degree_formula_check(phi, seed=0, dmax=DMAX, locus=None, surface=None, degree=None):
    """
    Compare d^2 with surfaceDegree * k + |B|. Already computed pieces can be
    passed in; an incomplete base locus or fiber sample raises IncompleteCheck.
    """
    if locus is None:
        locus = base_locus(phi, seed=seed)
    if surface is None:
        surface = implicitize(phi, dmax=dmax, seed=seed)
    if degree is None:
        degree = topological_degree(phi, seed=seed)
    partial = {
        'mapDegreeSquared': phi.degree ** 2,
        'surfaceDegree': surface.degree,
        'topologicalDegree': degree.sampled,
        'baseWeight': locus.weight,
    }
    if not locus.complete:
        raise IncompleteCheck("Base locus is incomplete", partial)
    if not degree.samples_complete:
        raise IncompleteCheck("Some sampled fibers are incomplete", partial)
    result = DegreeFormula(phi.degree ** 2, surface.degree, degree.sampled, locus.weight)
    logger.info(f"Degree formula for {phi}: {result.map_degree_squared} = {result.rhs}: {result.holds}")
    return result


def double_dual_check(phi, seed=0):
    """The dual of the dual, read back in (x, y, z), is phi up to one scalar."""
    dual = dual_map(phi, seed=seed)
    double = dual_map(dual.as_source_map(), seed=seed)
    components = [c.rename(XYZ) for c in double.components]
    result = proportional(components, list(phi.components))
    logger.info(f"Double dual of {phi} returns to it: {result}")
    return result
