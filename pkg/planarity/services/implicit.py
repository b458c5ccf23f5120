import logging
from dataclasses import dataclass

from planarize.exceptions import DegreeBoundExceeded, NoKernel
from polys.services import UVWT, Poly, coefficient_matrix, homogeneous_monomials, kernel_basis
from ratmaps.services import jacobian_degeneracy

logger = logging.getLogger(__name__)

DMAX = 4


@dataclass(frozen=True)
class SurfaceModel:
    """Forms in (u, v, w, t) of minimal degree vanishing on the image."""

    equations: tuple
    degree: int
    image_dimension: int

    def as_dict(self):
        return {
            'degree': self.degree,
            'equations': [str(e) for e in self.equations],
            'imageDimension': self.image_dimension,
        }


def _products(phi, monomials):
    cache = {}

    def power(alpha, e):
        if (alpha, e) not in cache:
            cache[(alpha, e)] = phi.components[alpha] ** e
        return cache[(alpha, e)]

    products = []
    for exps in monomials:
        product = Poly.one(phi.ring)
        for alpha, e in enumerate(exps):
            if e:
                product = product * power(alpha, e)
        products.append(product)
    return products


def implicitize(phi, dmax=DMAX, seed=0):
    """
    Solve for the forms F of degree D = 1, 2, ... with F(phi) == 0 by linear
    algebra on coefficients; the first D with solutions is the degree.
    """
    for degree in range(1, dmax + 1):
        monomials = homogeneous_monomials(4, degree)
        products = _products(phi, monomials)
        matrix, _ = coefficient_matrix(products)
        kernel = kernel_basis(matrix, n_cols=len(products))
        if not kernel:
            logger.debug(f"No annihilating form of degree {degree} for {phi}")
            continue
        equations = tuple(
            Poly(UVWT, dict(zip(monomials, vector))).canonical() for vector in kernel
        )
        for equation in equations:
            if equation.compose(list(phi.components), phi.ring):
                raise NoKernel(f"{equation} does not vanish on the image of {phi}")
        if len(kernel) > 1 or jacobian_degeneracy(phi, seed=seed).generic_rank <= 2:
            image_dimension = 1
        else:
            image_dimension = 2
        logger.info(f"Image of {phi} satisfies an equation of degree {degree}")
        return SurfaceModel(equations, degree, image_dimension)
    raise DegreeBoundExceeded(dmax)
