"""
Dual planarizations.

For a line l the plane P_l containing the image of l is the vector c(l)
with sum(c_alpha(l) * phi_alpha(x)) = (l . x) * m(l, x). Writing m with
unknown coefficients turns this into a polynomial matrix in l whose kernel
vector is (c, m); the c-part, with its common factor removed, is the dual.
"""

import logging
from dataclasses import dataclass, field

from planarize.exceptions import DegenerateKernel, ImageSpansLine, NoKernel
from polys.services import (
    LINE_COORDS,
    XYZ,
    Poly,
    PolyMatrix,
    canonical_poly_vector,
    homogeneous_monomials,
    linear_dependencies,
    poly_gcd_many,
    symbolic_kernel_vector,
)
from ratmaps.services import ProjPoint, normalize_map

from .planarity import is_trivial

logger = logging.getLogger(__name__)

DUAL_CHECK_RING = LINE_COORDS + XYZ


@dataclass(frozen=True)
class DualMap:
    """Components in line coordinates (l0, l1, l2), taking lines of P^2 to planes of P^3."""

    components: tuple
    source_note: str = field(default="P2* -> P3*")

    @property
    def degree(self):
        return next(c.degree() for c in self.components if c)

    def as_source_map(self):
        """The same components read as a map from a plane with coordinates (x, y, z)."""
        return normalize_map([c.rename(XYZ) for c in self.components])

    def as_strings(self):
        return [str(c) for c in self.components]

    def as_dict(self):
        return {'degree': self.degree, 'components': self.as_strings()}


@dataclass(frozen=True)
class Cotriviality:
    """``center`` is the common point b of the planes P_l, when it is known."""

    cotrivial: bool
    center: ProjPoint = None


def dual_system(phi):
    """
    Polynomial matrix in (l0, l1, l2): rows are the monomials of degree d,
    columns the four c_alpha followed by the coefficients of m.
    """
    degree = phi.degree
    rows = homogeneous_monomials(3, degree)
    m_monomials = homogeneous_monomials(3, degree - 1)
    row_index = {mono: i for i, mono in enumerate(rows)}
    gens = Poly.gens(LINE_COORDS)
    zero = Poly.zero(LINE_COORDS)

    entries = [[zero] * (4 + len(m_monomials)) for _ in rows]
    for alpha, component in enumerate(phi.components):
        for mono, coeff in component.terms.items():
            entries[row_index[mono]][alpha] = Poly.constant(LINE_COORDS, coeff)
    for k, beta in enumerate(m_monomials):
        for i in range(3):
            gamma = tuple(e + int(j == i) for j, e in enumerate(beta))
            entries[row_index[gamma]][4 + k] = entries[row_index[gamma]][4 + k] - gens[i]
    return PolyMatrix(entries, LINE_COORDS)


def _verify_divisibility(phi, components):
    linear = Poly.zero(DUAL_CHECK_RING)
    for l_var, x_var in zip(LINE_COORDS, XYZ):
        linear = linear + Poly.variable(DUAL_CHECK_RING, l_var) * Poly.variable(DUAL_CHECK_RING, x_var)
    pairing = Poly.zero(DUAL_CHECK_RING)
    for c, component in zip(components, phi.components):
        pairing = pairing + c.in_ring(DUAL_CHECK_RING) * component.in_ring(DUAL_CHECK_RING)
    return linear.divides(pairing)


def dual_map(phi, seed=0):
    """
    Dual planarization of a non-trivial planarization.

    Raises ImageSpansLine when generic lines go to lines (no unique plane),
    DegenerateKernel for trivial maps and NoKernel when phi is not a
    planarization.
    """
    if is_trivial(phi):
        raise DegenerateKernel(f"{phi} is trivial; every line goes into one plane")
    try:
        vector = symbolic_kernel_vector(dual_system(phi), seed=seed)
    except DegenerateKernel as exc:
        raise ImageSpansLine(f"Generic lines are mapped into lines by {phi}") from exc

    c_part = vector[:4]
    content = poly_gcd_many([c for c in c_part if c])
    if not content.is_constant():
        c_part = [c.exact_div(content) for c in c_part]
    components = tuple(canonical_poly_vector(c_part))

    if not _verify_divisibility(phi, components):
        raise NoKernel(f"Dual candidate {components} fails the divisibility identity")
    dual = DualMap(components)
    logger.info(f"Dual of {phi} has degree {dual.degree}")
    return dual


def cotriviality(phi, seed=0):
    """
    Trivial maps count as co-trivial without a center. In the
    ImageSpansLine regime the map is co-trivial and no center is reported.
    """
    if is_trivial(phi):
        return Cotriviality(True)
    try:
        dual = dual_map(phi, seed=seed)
    except ImageSpansLine:
        logger.info(f"{phi} maps lines to lines; reported co-trivial without a center")
        return Cotriviality(True)
    dependencies = linear_dependencies(dual.components)
    if not dependencies:
        return Cotriviality(False)
    return Cotriviality(True, ProjPoint.from_coords(dependencies[0]))


def is_cotrivial(phi, seed=0):
    return cotriviality(phi, seed=seed).cotrivial
