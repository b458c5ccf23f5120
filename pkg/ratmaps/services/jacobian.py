import logging
from dataclasses import dataclass

from planarize.sampling import RationalSampler
from polys.services import Poly, PolyMatrix, poly_gcd_many, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobianDegeneracy:
    """Maximal minors of the 4x3 Jacobian, their gcd and the generic rank."""

    minors: tuple
    common_factor: Poly
    generic_rank: int

    def as_dict(self):
        return {
            'minors': [str(m) for m in self.minors],
            'commonFactor': str(self.common_factor),
            'genericRank': self.generic_rank,
        }


def jacobian_matrix(phi):
    rows = [[component.partial_derivative(var) for var in phi.ring] for component in phi.components]
    return PolyMatrix(rows, phi.ring)


def jacobian_degeneracy(phi, seed=0):
    """
    Minor ``alpha`` is the determinant with row ``alpha`` deleted. The common
    factor is the zero polynomial when every minor vanishes.
    """
    matrix = jacobian_matrix(phi)
    minors = tuple(
        matrix.submatrix([r for r in range(4) if r != alpha], [0, 1, 2]).determinant()
        for alpha in range(4)
    )
    nonzero = [m for m in minors if m]
    common = poly_gcd_many(nonzero) if nonzero else Poly.zero(phi.ring)

    sampler = RationalSampler(seed)
    generic_rank = rank(matrix.evaluate(sampler.vector(3)))
    logger.debug(f"Jacobian of {phi}: rank {generic_rank}, common factor {common}")
    return JacobianDegeneracy(minors, common, generic_rank)
