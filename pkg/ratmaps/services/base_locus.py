import logging
from dataclasses import dataclass

from planarize.exceptions import NotABasePoint
from planarize.sampling import RationalSampler

from .intersection import INFINITE, intersection_multiplicity
from .rational_map import evaluate
from .solving import common_zeros

logger = logging.getLogger(__name__)

MULTIPLICITY_DRAWS = 8


@dataclass(frozen=True)
class BasePoint:
    point: object
    multiplicity: int

    def as_dict(self):
        return {
            'point': self.point.as_list(),
            'disc': self.point.disc,
            'multiplicity': self.multiplicity,
        }


@dataclass(frozen=True)
class BaseLocus:
    """
    Base points of a web with their multiplicities.

    ``weight`` is the sum of the multiplicities; ``complete`` is False when
    the solver could not resolve every zero. ``positive_dimensional`` records
    that the raw map had a common factor, i.e. its base locus contained a curve.
    """

    points: tuple
    complete: bool
    positive_dimensional: bool = False

    @property
    def weight(self):
        return sum(b.multiplicity for b in self.points)

    def multiplicities(self):
        return sorted(b.multiplicity for b in self.points)

    def discs(self):
        return sorted(b.point.disc for b in self.points)

    def __len__(self):
        return len(self.points)

    def as_dict(self):
        return {
            'points': [b.as_dict() for b in self.points],
            'weight': self.weight,
            'complete': self.complete,
            'positiveDimensional': self.positive_dimensional,
        }


def dehomogenize(poly, chart):
    """Restrict a form on P^2 to the affine chart where ring[chart] == 1."""
    name = poly.ring[chart]
    remaining = tuple(v for v in poly.ring if v != name)
    return poly.partial_evaluate({name: 1}).in_ring(remaining)


def base_point_multiplicity(phi, point, seed=0, draws=MULTIPLICITY_DRAWS):
    """
    Multiplicity of the web at a base point: the minimum of I_b(kappa, kappa')
    over random pairs of web members.
    """
    if evaluate(phi, point) is not None:
        raise NotABasePoint(f"{point} is not a base point of the map")
    chart = point.chart()
    affine = [c for i, c in enumerate(point.coords) if i != chart]
    sampler = RationalSampler(seed)

    best = INFINITE
    for _ in range(draws):
        first = dehomogenize(phi.web_member(sampler.vector(4)), chart)
        second = dehomogenize(phi.web_member(sampler.vector(4)), chart)
        best = min(best, intersection_multiplicity(first, second, affine))
        if best == 1:
            break
    if best == INFINITE:
        logger.warning(f"Every sampled pair of web members shares a component at {point}")
        return best
    return int(best)


def base_locus(phi, seed=0, draws=MULTIPLICITY_DRAWS):
    """Common zeros of the components, each with its web multiplicity."""
    solution = common_zeros(phi.components, seed=seed)
    if not solution.complete:
        logger.warning(f"Base locus of {phi} may be incomplete")
    points = tuple(
        BasePoint(point, base_point_multiplicity(phi, point, seed=seed, draws=draws))
        for point in solution.points
    )
    logger.debug(f"Base locus of {phi}: {[str(b.point) for b in points]}")
    return BaseLocus(points, solution.complete, not phi.extracted_content.is_constant())

