"""
Gcd, resultants and dense univariate helpers.

The multivariate gcd is the recursive primitive PRS: split off the content
with respect to the first variable in use, run a pseudo-remainder sequence
on the primitive parts, recurse on the contents.
"""

import logging
from fractions import Fraction
from functools import reduce

from planarize.exceptions import EliminationError, RingMismatchError
from scalars.services import to_scalar

from .linalg import PolyMatrix
from .poly import Poly

logger = logging.getLogger(__name__)


def _degree_in(poly, index):
    return max((exps[index] for exps in poly.terms), default=-1)


def _leading_in(poly, index):
    """Coefficient (a Poly without the variable) of the top power of ring[index]."""
    top = _degree_in(poly, index)
    terms = {}
    for exps, coeff in poly.terms.items():
        if exps[index] == top:
            terms[exps[:index] + (0,) + exps[index + 1:]] = coeff
    return Poly._raw(poly.ring, terms)


def _variable_power(ring, index, k):
    exps = tuple(k if i == index else 0 for i in range(len(ring)))
    return Poly._raw(ring, {exps: Fraction(1)})


def _content(poly, index):
    coefficients = list(poly.coefficients_in(poly.ring[index]).values())
    return reduce(_gcd, coefficients[1:], coefficients[0]).canonical()


def _primitive(poly, index):
    content = _content(poly, index)
    if content.is_constant():
        return poly
    return poly.exact_div(content)


def _pseudo_remainder(a, b, index):
    db = _degree_in(b, index)
    lead_b = _leading_in(b, index)
    r = a
    while r and _degree_in(r, index) >= db:
        shift = _degree_in(r, index) - db
        r = r * lead_b - _leading_in(r, index) * b * _variable_power(r.ring, index, shift)
    return r


def _gcd(p, q):
    if not p:
        return q
    if not q:
        return p
    if p.is_constant() or q.is_constant():
        return Poly.one(p.ring)
    used = [i for i in range(p.nvars) if _degree_in(p, i) > 0 or _degree_in(q, i) > 0]
    index = used[0]
    if _degree_in(p, index) <= 0:
        return _gcd(p, _content(q, index))
    if _degree_in(q, index) <= 0:
        return _gcd(_content(p, index), q)

    content = _gcd(_content(p, index), _content(q, index))
    a, b = _primitive(p, index), _primitive(q, index)
    if _degree_in(a, index) < _degree_in(b, index):
        a, b = b, a
    while True:
        r = _pseudo_remainder(a, b, index)
        if not r:
            g = b
            break
        if _degree_in(r, index) == 0:
            g = Poly.one(p.ring)
            break
        a, b = b, _primitive(r.canonical(), index)
    return (content * _primitive(g.canonical(), index)).canonical()


def poly_gcd(p, q):
    """Gcd in canonical form; gcd(P, 0) is canonical(P)."""
    if p.ring != q.ring:
        raise RingMismatchError(f"Ring mismatch: {p.ring} vs {q.ring}")
    return _gcd(p, q).canonical()


def poly_gcd_many(polys):
    polys = list(polys)
    if not polys:
        raise ValueError("gcd of an empty collection")
    result = polys[0]
    for poly in polys[1:]:
        result = poly_gcd(result, poly)
        if result.is_constant() and result:
            break
    return result.canonical()


def sylvester_matrix(p, q, var):
    index = p._index(var)
    m, n = _degree_in(p, index), _degree_in(q, index)
    a = p.coefficients_in(var)
    b = q.coefficients_in(var)
    zero = Poly.zero(p.ring)
    size = m + n
    rows = []
    for shift in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[shift + m - k] = a.get(k, zero)
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[shift + n - k] = b.get(k, zero)
        rows.append(row)
    return PolyMatrix(rows, p.ring)


def resultant(p, q, var):
    """Sylvester resultant with respect to ``var``; the result does not involve var."""
    if p.ring != q.ring:
        raise RingMismatchError(f"Ring mismatch: {p.ring} vs {q.ring}")
    if not p.involves(var) or not q.involves(var):
        raise EliminationError(f"Both polynomials must involve {var}")
    return sylvester_matrix(p, q, var).determinant()


# ----------------------------------------------------------------------
# dense univariate polynomials over Q or Q(sqrt(D)): lists, index = degree


def univariate_coefficients(poly, var):
    """Dense coefficient list of a polynomial that only involves ``var``."""
    index = poly._index(var)
    degree = _degree_in(poly, index)
    coefficients = [Fraction(0)] * (degree + 1)
    for exps, coeff in poly.terms.items():
        if any(e for i, e in enumerate(exps) if i != index):
            raise RingMismatchError(f"{poly} involves more than {var}")
        coefficients[exps[index]] = coeff
    return coefficients


def trim(coefficients):
    coefficients = [to_scalar(c) for c in coefficients]
    while coefficients and not coefficients[-1]:
        coefficients.pop()
    return coefficients


def univariate_divmod(a, b):
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("Univariate division by zero")
    lead = b[-1]
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        factor = a[-1] / lead
        shift = len(a) - len(b)
        quotient[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - factor * c
        a = trim(a)
    return trim(quotient), a


def univariate_rem(a, b):
    return univariate_divmod(a, b)[1]


def univariate_gcd(a, b):
    """Monic gcd of two dense polynomials over a field."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, univariate_rem(a, b)
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def univariate_derivative(a):
    return trim([k * c for k, c in enumerate(a)][1:])


def univariate_squarefree(a):
    """Monic product of the distinct irreducible factors of ``a``."""
    a = trim(a)
    if len(a) <= 2:
        return univariate_gcd(a, [])
    repeated = univariate_gcd(a, univariate_derivative(a))
    quotient, _ = univariate_divmod(a, repeated)
    return univariate_gcd(quotient, [])
