import logging
from dataclasses import dataclass

from planarize.exceptions import NotASurfaceImage
from planarize.sampling import RationalSampler

from .jacobian import jacobian_degeneracy
from .rational_map import ProjPoint, evaluate
from .solving import common_zeros

logger = logging.getLogger(__name__)

FIBER_SAMPLES = 5


@dataclass(frozen=True)
class Fiber:
    points: tuple
    complete: bool

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class TopologicalDegree:
    """Largest fiber cardinality seen over the sampled images."""

    sampled: int
    samples_complete: bool

    def as_dict(self):
        return {'sampled': self.sampled, 'samplesComplete': self.samples_complete}


def fiber_over(phi, target, seed=0):
    """Points outside the base locus mapping to ``target``."""
    y = target.coords
    equations = []
    for i in range(4):
        for j in range(i + 1, 4):
            equation = phi.components[i].scale(y[j]) - phi.components[j].scale(y[i])
            if equation:
                equations.append(equation)
    solution = common_zeros(equations, seed=seed)
    points = tuple(p for p in solution.points if evaluate(phi, p) == target)
    complete = solution.complete and not solution.positive_dimensional
    return Fiber(points, complete)


def _regular_sample(phi, sampler):
    while True:
        source = ProjPoint.from_coords(sampler.vector(3))
        target = evaluate(phi, source)
        if target is not None:
            return source, target


def topological_degree(phi, seed=0, samples=FIBER_SAMPLES):
    """
    Number of preimages of a general image point, estimated from fibers over
    the images of random rational points.
    """
    if jacobian_degeneracy(phi, seed=seed).generic_rank < 3:
        raise NotASurfaceImage(f"The image of {phi} is not a surface")
    sampler = RationalSampler(seed)

    complete_sizes, all_sizes = [], []
    for index in range(samples):
        source, target = _regular_sample(phi, sampler)
        fiber = fiber_over(phi, target, seed=seed + index)
        if source not in fiber.points:
            logger.warning(f"Sample {source} missing from its own fiber over {target}")
        all_sizes.append(len(fiber))
        if fiber.complete:
            complete_sizes.append(len(fiber))

    if complete_sizes:
        return TopologicalDegree(max(complete_sizes), len(complete_sizes) == len(all_sizes))
    logger.warning(f"No complete fiber found for {phi}")
    return TopologicalDegree(max(all_sizes, default=0), False)
