"""Local intersection multiplicity of two affine plane curves."""

import logging
import math

from polys.services import Poly, poly_gcd

logger = logging.getLogger(__name__)

INFINITE = math.inf


def _value_at_origin(poly):
    return poly.terms.get((0, 0), 0)


def _on_axis(poly):
    """Dense coefficients of poly(x, 0), index = power of x."""
    coefficients = {}
    for (i, j), coeff in poly.terms.items():
        if j == 0:
            coefficients[i] = coeff
    return coefficients


def _axis_degree(coefficients):
    return max(coefficients, default=-1)


def intersection_multiplicity(f, g, point):
    """
    I_p(f, g) for two polynomials in a two-variable ring.

    Returns ``INFINITE`` when f and g share a component through p.
    The computation reduces at the origin until one curve misses it:
    with r = deg f(x, 0) <= s = deg g(x, 0), g is replaced by
    lc(f0) * g - lc(g0) * x^(s - r) * f; when f(x, 0) vanishes identically
    f = y * f' and I(f, g) = ord_x g(x, 0) + I(f', g).
    """
    if f.ring != g.ring or f.nvars != 2:
        raise ValueError("Both curves must live in the same two-variable ring")
    if not f or not g:
        return INFINITE
    common = poly_gcd(f, g)
    if not common.is_constant():
        if common.evaluate(point) == 0:
            return INFINITE
        f, g = f.exact_div(common), g.exact_div(common)

    first, second = Poly.gens(f.ring)
    shift = [first + point[0], second + point[1]]
    f, g = f.compose(shift), g.compose(shift)
    y_axis = second

    total = 0
    while True:
        if _value_at_origin(f) or _value_at_origin(g):
            return total
        f0, g0 = _on_axis(f), _on_axis(g)
        r, s = _axis_degree(f0), _axis_degree(g0)
        if r > s:
            f, g, f0, g0, r, s = g, f, g0, f0, s, r
        if r < 0:
            if s < 0:
                return INFINITE
            total += min(g0)
            f = f.exact_div(y_axis)
            continue
        monomial = Poly.monomial(f.ring, (s - r, 0), g0[s])
        g = g.scale(f0[r]) - f * monomial
