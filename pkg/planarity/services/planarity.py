"""
Planarization and triviality predicates.

A cubic map is a planarization when the 4x4 restriction determinant
vanishes identically. The determinant only changes by a constant factor
when (p, q) is replaced by another basis of the same line, so it is enough
to expand it on the pencil p = (l2, 0, -l0), q = (0, l2, -l1), a polynomial
in the line coordinates alone.
"""

import logging

from planarize.exceptions import ImageSpansLine, UnsupportedDegree
from planarize.sampling import RationalSampler
from polys.services import LINE_COORDS, Poly, PolyMatrix, determinant_scalar, linear_dependencies

from .lines import concrete_restriction_matrix, line_restriction_matrix

logger = logging.getLogger(__name__)

PREFILTER_SAMPLES = 3

TRIVIAL = 'trivial'
COTRIVIAL = 'cotrivial'
QUADRATIC = 'quadratic'
DUAL_QUADRATIC = 'dual-quadratic'
UNCLASSIFIED = 'unclassified'
NOT_A_PLANARIZATION = 'not-a-planarization'


def planarity_polynomial(phi):
    """Restriction determinant of a cubic map as a form in (l0, l1, l2)."""
    if phi.degree != 3:
        raise UnsupportedDegree("The restriction determinant is only square for cubic maps")
    l0, l1, l2 = Poly.gens(LINE_COORDS)
    zero = Poly.zero(LINE_COORDS)
    pencil = [l2, zero, -l0, zero, l2, -l1]
    symbolic = line_restriction_matrix(phi)
    rows = [[entry.compose(pencil, LINE_COORDS) for entry in row] for row in symbolic.entries]
    return PolyMatrix(rows, LINE_COORDS).determinant()


def is_planarization(phi, seed=0, prefilter=PREFILTER_SAMPLES):
    """Maps of degree <= 2 always are; cubic maps need a vanishing restriction determinant."""
    if phi.degree > 3:
        raise UnsupportedDegree(f"Planarity is only defined up to degree 3, got {phi.degree}")
    if phi.degree <= 2:
        return True
    sampler = RationalSampler(seed)
    for _ in range(prefilter):
        p, q = sampler.vector(3), sampler.vector(3)
        if determinant_scalar(concrete_restriction_matrix(phi, p, q)) != 0:
            logger.info(f"{phi} rejected by a sampled line")
            return False
    result = not planarity_polynomial(phi)
    logger.info(f"Planarity of {phi}: {result}")
    return result


def is_trivial(phi):
    """The components are linearly dependent, i.e. the image lies in a plane."""
    return bool(linear_dependencies(phi.components))


def main_theorem_class(phi, seed=0):
    """
    Place a map in one of the planarization classes: trivial, co-trivial,
    quadratic, or cubic with a quadratic dual. Planarizations that are
    none of these are reported as unclassified.
    """
    from .dual import cotriviality, dual_map

    if not is_planarization(phi, seed=seed):
        return NOT_A_PLANARIZATION
    if is_trivial(phi):
        return TRIVIAL
    if cotriviality(phi, seed=seed).cotrivial:
        return COTRIVIAL
    if phi.degree == 2:
        return QUADRATIC
    try:
        dual = dual_map(phi, seed=seed)
    except ImageSpansLine:
        return COTRIVIAL
    if dual.degree <= 2:
        return DUAL_QUADRATIC
    return UNCLASSIFIED
