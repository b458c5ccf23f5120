"""
Projective points and rational maps P^2 -> P^3.

A ``RationalMap`` holds four forms of one degree in (x, y, z) with no
common factor; the factor divided out by ``normalize_map`` is kept as
``extracted_content``. The same object is the linear web of the map: the
member of a plane c is ``web_member(c) = sum(c_i * phi_i)``.
"""

import logging
from dataclasses import dataclass

from planarize.exceptions import (
    DimensionMismatchError,
    NonHomogeneousError,
    RingMismatchError,
    UnsupportedDegree,
)
from polys.services import XYZ, Poly, poly_gcd_many
from scalars.services import common_disc, format_scalar, to_scalar

logger = logging.getLogger(__name__)

MAX_MAP_DEGREE = 3


@dataclass(frozen=True)
class ProjPoint:
    """Normalized homogeneous coordinates: the first nonzero one is 1."""

    coords: tuple
    disc: int = 0

    @classmethod
    def from_coords(cls, coords):
        coords = [to_scalar(c) for c in coords]
        first = next((c for c in coords if c), None)
        if first is None:
            raise ValueError("The zero vector is not a projective point")
        normalized = tuple(c / first for c in coords)
        return cls(normalized, common_disc(normalized))

    @property
    def dimension(self):
        return len(self.coords) - 1

    def is_rational(self):
        return self.disc == 0

    def conjugate(self):
        if not self.disc:
            return self
        return ProjPoint.from_coords([c.conjugate() for c in self.coords])

    def chart(self):
        """Index of the first nonzero coordinate (which equals 1)."""
        return next(i for i, c in enumerate(self.coords) if c)

    def sort_key(self):
        return (self.disc, str(self))

    def as_list(self):
        return [format_scalar(c) for c in self.coords]

    def __str__(self):
        return '[' + ':'.join(format_scalar(c) for c in self.coords) + ']'


@dataclass(frozen=True)
class RationalMap:
    components: tuple
    extracted_content: Poly

    @property
    def degree(self):
        return next(c.degree() for c in self.components if c)

    @property
    def ring(self):
        return self.components[0].ring

    def evaluate(self, point):
        return evaluate(self, point)

    def web_member(self, plane):
        """kappa_P = sum(P_alpha * phi_alpha) for a plane P of P^3."""
        if len(plane) != 4:
            raise DimensionMismatchError("A plane of P^3 has four coordinates")
        result = Poly.zero(self.ring)
        for coeff, component in zip(plane, self.components):
            result = result + component.scale(coeff)
        return result

    def is_rational(self):
        return all(c.is_rational() for c in self.components)

    def as_strings(self):
        return [str(c) for c in self.components]

    def __str__(self):
        return '[' + ' : '.join(self.as_strings()) + ']'


def normalize_map(raw_components, ring=XYZ):
    """
    Build a RationalMap from four forms, dividing out their common factor.

    The degree left after clearing must be 1, 2 or 3.
    """
    raw = list(raw_components)
    if len(raw) != 4:
        raise DimensionMismatchError(f"A map to P^3 needs 4 components, got {len(raw)}")
    raw = [c if isinstance(c, Poly) else Poly.constant(ring, c) for c in raw]
    for component in raw:
        if component.ring != tuple(ring):
            raise RingMismatchError(f"Component ring {component.ring} is not {tuple(ring)}")
        if not component.is_homogeneous():
            raise NonHomogeneousError(f"Component {component} is not homogeneous")
    nonzero = [c for c in raw if c]
    if not nonzero:
        raise UnsupportedDegree("All components vanish")
    degrees = {c.degree() for c in nonzero}
    if len(degrees) > 1:
        raise NonHomogeneousError(f"Components have different degrees {sorted(degrees)}")

    content = poly_gcd_many(nonzero)
    if content.is_constant():
        content = Poly.one(ring)
        components = tuple(raw)
    else:
        components = tuple(c.exact_div(content) if c else c for c in raw)
        logger.info(f"Extracted common factor {content} from the map")

    degree = next(c.degree() for c in components if c)
    if degree < 1 or degree > MAX_MAP_DEGREE:
        raise UnsupportedDegree(
            f"Map has degree {degree} after clearing; only degrees 1 to {MAX_MAP_DEGREE} are supported"
        )
    return RationalMap(components, content)


def evaluate(phi, point):
    """Image point, or None when the point is indeterminate (all components vanish)."""
    if len(point.coords) != 3:
        raise DimensionMismatchError("Source points have three coordinates")
    values = [c.evaluate(point.coords) for c in phi.components]
    if not any(values):
        return None
    return ProjPoint.from_coords(values)


def is_strictly_cubic(phi):
    """Cubic after content clearing, i.e. the four cubics have no common factor."""
    return phi.degree == 3
