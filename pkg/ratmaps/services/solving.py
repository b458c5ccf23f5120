"""
Common zeros of homogeneous forms in P^2 over Q and quadratic extensions.

The forms are moved by a random invertible change of coordinates so that
distinct zeros have distinct projections from (0:0:1). Random combinations
of the forms are eliminated against z; the gcd of their resultants is a
binary form whose roots are the projections. Each root of degree <= 2
over Q is lifted back by a univariate gcd over Q(sqrt(D)).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import sympy

from planarize.exceptions import NonHomogeneousError
from planarize.sampling import RationalSampler
from polys.services import (
    XYZ,
    Poly,
    mat_vec,
    poly_gcd,
    poly_gcd_many,
    resultant,
    univariate_coefficients,
    univariate_gcd,
    univariate_squarefree,
)
from scalars.services import sqrt_in_field

from .rational_map import ProjPoint

logger = logging.getLogger(__name__)

ATTEMPTS = 4
ELIMINANT_PAIRS = 3
Z_AXIS = (Fraction(0), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class SolutionSet:
    """
    Zeros found by ``common_zeros``.

    ``complete`` is False when some projection could not be resolved
    (irreducible factors of degree >= 3, or no separating projection).
    ``positive_dimensional`` is set when the forms share a curve.
    """

    points: tuple
    complete: bool
    positive_dimensional: bool = False


class _RetryProjection(Exception):
    pass


def common_zeros(forms, seed=0, attempts=ATTEMPTS):
    """Projective common zeros of homogeneous forms of one degree in (x, y, z)."""
    forms = [f for f in forms if f]
    if not forms:
        return SolutionSet((), False, True)
    degrees = {f.homogeneous_degree() for f in forms}
    if len(degrees) > 1:
        raise NonHomogeneousError(f"Forms of different degrees {sorted(degrees)}")
    if degrees == {0}:
        return SolutionSet((), True)
    if not poly_gcd_many(forms).is_constant():
        logger.info("Forms share a common curve; zero set is not finite")
        return SolutionSet((), False, True)

    sampler = RationalSampler(seed)
    partial = None
    for attempt in range(attempts):
        change = sampler.invertible_matrix(3)
        try:
            result = _solve_after_change(forms, change, sampler)
        except _RetryProjection as exc:
            logger.debug(f"Projection {attempt} rejected: {exc}")
            continue
        if result.complete:
            return result
        partial = partial or result
    if partial is None:
        logger.warning(f"No separating projection found in {attempts} attempts")
        return SolutionSet((), False)
    return partial


def _solve_after_change(forms, change, sampler):
    moved = [f.substitute_linear(change) for f in forms]
    if all(g.evaluate(Z_AXIS) == 0 for g in moved):
        raise _RetryProjection("projection centre is a common zero")

    eliminant = _eliminant(moved, sampler)
    points = set()
    complete = True
    for root in _projection_roots(eliminant):
        if root is None:
            complete = False
            continue
        for lifted in _lift(moved, root):
            point = ProjPoint.from_coords(mat_vec(change, lifted))
            if any(f.evaluate(point.coords) != 0 for f in forms):
                raise _RetryProjection(f"lifted point {point} is not a common zero")
            points.add(point)
            points.add(point.conjugate())
    ordered = tuple(sorted(points, key=ProjPoint.sort_key))
    return SolutionSet(ordered, complete)


def _combination(moved, sampler):
    while True:
        weights = sampler.small_vector(len(moved))
        combo = Poly.zero(XYZ)
        for weight, form in zip(weights, moved):
            combo = combo + form.scale(weight)
        if combo and combo.evaluate(Z_AXIS) != 0:
            return combo


def _eliminant(moved, sampler):
    """Binary form in (x, y) vanishing on the projections of the common zeros."""
    if len(moved) == 2:
        pairs = [tuple(moved)]
        if any(g.evaluate(Z_AXIS) == 0 for g in moved):
            pairs = [(_combination(moved, sampler), _combination(moved, sampler))]
    else:
        pairs = [(_combination(moved, sampler), _combination(moved, sampler))
                 for _ in range(ELIMINANT_PAIRS)]
    eliminant = Poly.zero(XYZ)
    for first, second in pairs:
        res = resultant(first, second, 'z')
        if res:
            eliminant = poly_gcd(eliminant, res)
    if not eliminant:
        raise _RetryProjection("all resultants vanish")
    return eliminant


def _to_sympy(value):
    return sympy.Rational(value.numerator, value.denominator)


def _projection_roots(eliminant):
    """
    Roots (a, b) of the binary form as coordinate pairs, one per conjugate pair.

    Yields None for each irreducible factor of degree >= 3.
    """
    degree = eliminant.degree()
    dense = [Fraction(0)] * (degree + 1)
    for (i, j, _), coeff in eliminant.terms.items():
        dense[i] = coeff
    affine_degree = max((i for i, c in enumerate(dense) if c), default=0)
    if affine_degree < degree:
        yield (Fraction(1), Fraction(0))
    if affine_degree == 0:
        return

    variable = sympy.Symbol('t')
    univariate = sympy.Poly([_to_sympy(c) for c in reversed(dense[:affine_degree + 1])],
                            variable, domain=sympy.QQ)
    _, factors = univariate.factor_list()
    for factor, _ in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(factor.all_coeffs())]
        if len(coeffs) == 2:
            yield (-coeffs[0] / coeffs[1], Fraction(1))
        elif len(coeffs) == 3:
            c0, c1, c2 = coeffs
            root = (-c1 + sqrt_in_field(c1 * c1 - 4 * c2 * c0)) / (2 * c2)
            yield (root, Fraction(1))
        else:
            logger.warning(f"Irreducible factor of degree {len(coeffs) - 1} left unresolved")
            yield None


def _lift(moved, root):
    a, b = root
    gcd = []
    for form in moved:
        restricted = form.partial_evaluate({'x': a, 'y': b})
        if restricted:
            gcd = univariate_gcd(gcd, univariate_coefficients(restricted, 'z'))
    if not gcd:
        raise _RetryProjection(f"every form vanishes on the line over ({a}, {b})")
    gcd = univariate_squarefree(gcd)
    if len(gcd) == 1:
        return []
    if len(gcd) > 2:
        raise _RetryProjection(f"{len(gcd) - 1} zeros share the projection ({a}, {b})")
    return [(a, b, -gcd[0] / gcd[1])]
