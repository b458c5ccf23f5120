"""
Sparse exact polynomials.

A ``Poly`` is an ordered tuple of variable names (its ring) plus a table
from exponent tuples to nonzero exact scalars (``Fraction`` or
``QuadExtScalar``). Values are never mutated after construction.

Terms are ordered graded-lexicographically with the variables ranked by
name, which is the declared order for (x, y, z) and (l0, l1, l2) and puts
``t`` first in (u, v, w, t). The same order picks the leading coefficient
used for sign normalization and the term order of the text form.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from math import gcd, lcm

from planarize.exceptions import DimensionMismatchError, NonHomogeneousError, RingMismatchError
from scalars.services import QuadExtScalar, format_scalar, to_scalar

logger = logging.getLogger(__name__)

XYZ = ('x', 'y', 'z')
UVWT = ('u', 'v', 'w', 't')
LINE_COORDS = ('l0', 'l1', 'l2')
LINE_PARAMS = ('p0', 'p1', 'p2', 'q0', 'q1', 'q2')
PENCIL = ('s', 't') + LINE_PARAMS
BINARY = ('s', 't')

NEG_INF = -math.inf


@lru_cache(maxsize=64)
def _name_ranks(ring):
    return tuple(sorted(range(len(ring)), key=lambda i: ring[i]))


@lru_cache(maxsize=64)
def _order_key(ring):
    ranks = _name_ranks(ring)

    def key(exps):
        return (sum(exps), tuple(exps[i] for i in ranks))

    return key


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def homogeneous_monomials(nvars, degree):
    """Exponent tuples of all monomials of one total degree, descending lex."""
    result = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for index in combo:
            exps[index] += 1
        result.append(tuple(exps))
    return result


class Poly:
    """Sparse polynomial with exact coefficients over a named ring."""

    __slots__ = ('ring', 'terms')

    def __init__(self, ring, terms=None):
        self.ring = tuple(ring)
        cleaned = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.ring):
                raise DimensionMismatchError(
                    f"Monomial {exps} does not fit ring {self.ring}"
                )
            coeff = to_scalar(coeff)
            if coeff:
                cleaned[exps] = cleaned.get(exps, 0) + coeff
        self.terms = {e: c for e, c in cleaned.items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        """Build without validation; ``terms`` must hold nonzero scalars only."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.terms = terms
        return poly

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, ring):
        return cls._raw(tuple(ring), {})

    @classmethod
    def constant(cls, ring, value):
        ring = tuple(ring)
        value = to_scalar(value)
        return cls._raw(ring, {(0,) * len(ring): value} if value else {})

    @classmethod
    def one(cls, ring):
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring, name):
        ring = tuple(ring)
        if name not in ring:
            raise RingMismatchError(f"Variable {name} not in ring {ring}")
        exps = tuple(1 if v == name else 0 for v in ring)
        return cls._raw(ring, {exps: Fraction(1)})

    @classmethod
    def gens(cls, ring):
        return tuple(cls.variable(ring, name) for name in ring)

    @classmethod
    def monomial(cls, ring, exps, coeff=1):
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def linear_form(cls, ring, coefficients):
        """sum(c_i * ring[i]) for the given coefficient list."""
        ring = tuple(ring)
        if len(coefficients) != len(ring):
            raise DimensionMismatchError("Linear form needs one coefficient per variable")
        terms = {}
        for index, coeff in enumerate(coefficients):
            exps = tuple(1 if j == index else 0 for j in range(len(ring)))
            terms[exps] = coeff
        return cls(ring, terms)

    # ------------------------------------------------------------------
    # basic queries

    def __bool__(self):
        return bool(self.terms)

    @property
    def nvars(self):
        return len(self.ring)

    def degree(self):
        """Total degree; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, var):
        index = self._index(var)
        if not self.terms:
            return NEG_INF
        return max(exps[index] for exps in self.terms)

    def is_homogeneous(self, degree=None):
        degrees = {sum(exps) for exps in self.terms}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def homogeneous_degree(self):
        if not self.is_homogeneous():
            raise NonHomogeneousError(f"Polynomial {self} is not homogeneous")
        return self.degree()

    def is_constant(self):
        return all(not any(exps) for exps in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def variables(self):
        used = [False] * self.nvars
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(name for name, flag in zip(self.ring, used) if flag)

    def involves(self, var):
        index = self._index(var)
        return any(exps[index] for exps in self.terms)

    def is_rational(self):
        return all(not isinstance(c, QuadExtScalar) for c in self.terms.values())

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def coefficient_vector(self, monomials):
        return [self.terms.get(m, Fraction(0)) for m in monomials]

    def sorted_terms(self):
        """(exps, coeff) pairs, leading term first."""
        key = _order_key(self.ring)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_monomial(self):
        if not self.terms:
            return None
        return max(self.terms, key=_order_key(self.ring))

    def leading_coefficient(self):
        if not self.terms:
            return Fraction(0)
        return self.terms[self.leading_monomial()]

    def _index(self, var):
        try:
            return self.ring.index(var)
        except ValueError:
            raise RingMismatchError(f"Variable {var} not in ring {self.ring}") from None

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"Ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction, QuadExtScalar)):
            return Poly.constant(self.ring, other)
        return None

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = terms.get(exps, 0) + coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Poly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExtScalar)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                exps = _add_exps(ea, eb)
                terms[exps] = terms.get(exps, 0) + ca * cb
        return Poly._raw(self.ring, {e: c for e, c in terms.items() if c})

    __rmul__ = __mul__

    def scale(self, value):
        value = to_scalar(value)
        if not value:
            return Poly.zero(self.ring)
        return Poly._raw(self.ring, {e: c * value for e, c in self.terms.items()})

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent!r}")
        result, base = Poly.one(self.ring), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuadExtScalar)):
            return self == Poly.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # normal forms

    def canonical(self):
        """
        Canonical representative up to a nonzero scalar.

        Rational polynomials get integer coefficients with content 1 and a
        positive leading coefficient; polynomials with irrational
        coefficients are made monic.
        """
        if not self.terms:
            return self
        if not self.is_rational():
            return self.monic()
        denominators = reduce(lcm, (c.denominator for c in self.terms.values()), 1)
        numerators = [c.numerator * (denominators // c.denominator) for c in self.terms.values()]
        content = reduce(gcd, numerators, 0)
        factor = Fraction(denominators, content)
        if self.leading_coefficient() < 0:
            factor = -factor
        return self.scale(factor)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / to_scalar(self.leading_coefficient()))

    def is_canonical(self):
        return self == self.canonical()

    # ------------------------------------------------------------------
    # evaluation and substitution

    def evaluate(self, point):
        """Value at a point given as a sequence (ring order) or a name -> scalar dict."""
        values = self._point_values(point)
        powers = [{0: Fraction(1)} for _ in values]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for index, e in enumerate(exps):
                if e:
                    cache = powers[index]
                    if e not in cache:
                        cache[e] = to_scalar(values[index]) ** e
                    term = term * cache[e]
            total = total + term
        return total

    def _point_values(self, point):
        if isinstance(point, dict):
            return [point[name] for name in self.ring]
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"Point of length {len(point)} for ring {self.ring}"
            )
        return list(point)

    def partial_evaluate(self, assignments):
        """Set some variables to scalars; the ring is kept."""
        indices = {self._index(name): to_scalar(value) for name, value in assignments.items()}
        terms = {}
        for exps, coeff in self.terms.items():
            new_exps = list(exps)
            for index, value in indices.items():
                if exps[index]:
                    coeff = coeff * value ** exps[index]
                    new_exps[index] = 0
            if coeff:
                key = tuple(new_exps)
                terms[key] = terms.get(key, 0) + coeff
        return Poly._raw(self.ring, {e: c for e, c in terms.items() if c})

    def compose(self, images, ring=None):
        """
        Substitute ``ring[i] -> images[i]`` for every variable.

        All images share one ring, which becomes the ring of the result.
        """
        if len(images) != self.nvars:
            raise DimensionMismatchError(
                f"{len(images)} images for a ring of {self.nvars} variables"
            )
        target = ring or images[0].ring
        images = [img if isinstance(img, Poly) else Poly.constant(target, img) for img in images]
        for img in images:
            if img.ring != target:
                raise RingMismatchError(f"Ring mismatch: {img.ring} vs {target}")
        powers = [{0: Poly.one(target)} for _ in images]

        def power(index, e):
            cache = powers[index]
            if e not in cache:
                below = max(k for k in cache if k < e)
                value = cache[below]
                for _ in range(e - below):
                    value = value * images[index]
                cache[e] = value
            return cache[e]

        terms = {}
        for exps, coeff in self.terms.items():
            product = Poly.constant(target, coeff)
            for index, e in enumerate(exps):
                if e:
                    product = product * power(index, e)
            for mono, value in product.terms.items():
                terms[mono] = terms.get(mono, 0) + value
        return Poly._raw(target, {e: c for e, c in terms.items() if c})

    def substitute_linear(self, matrix, ring=None):
        """
        x_i -> sum_j matrix[i][j] * y_j.

        The result lives in ``ring`` (default: the same ring when the matrix
        is square). Homogeneity and degree are preserved.
        """
        if not self.is_homogeneous():
            raise NonHomogeneousError(f"substitute_linear needs a homogeneous input, got {self}")
        if len(matrix) != self.nvars:
            raise DimensionMismatchError(
                f"Substitution has {len(matrix)} rows for {self.nvars} variables"
            )
        width = len(matrix[0]) if matrix else 0
        if ring is None:
            if width != self.nvars:
                raise DimensionMismatchError("Non-square substitution needs a target ring")
            ring = self.ring
        ring = tuple(ring)
        if width != len(ring) or any(len(row) != width for row in matrix):
            raise DimensionMismatchError(f"Substitution width does not match ring {ring}")
        images = [Poly.linear_form(ring, row) for row in matrix]
        return self.compose(images, ring)

    def restrict_to_line(self, p=None, q=None):
        """
        Restriction to the line {s*p + t*q}.

        Without points the result lives in (s, t, p0, p1, p2, q0, q1, q2);
        with concrete points it is a binary form in (s, t).
        """
        degree = self.homogeneous_degree()
        if self.nvars != 3:
            raise DimensionMismatchError("restrict_to_line needs a polynomial in three variables")
        if p is None and q is None:
            s, t, p0, p1, p2, q0, q1, q2 = Poly.gens(PENCIL)
            images = [s * p0 + t * q0, s * p1 + t * q1, s * p2 + t * q2]
            result = self.compose(images, PENCIL)
        else:
            s, t = Poly.gens(BINARY)
            images = [s.scale(to_scalar(a)) + t.scale(to_scalar(b)) for a, b in zip(p, q)]
            result = self.compose(images, BINARY)
        if result and not result.is_homogeneous(degree if p is not None else None):
            raise NonHomogeneousError("Line restriction lost homogeneity")
        return result

    def partial_derivative(self, var):
        index = self._index(var)
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[index]
            if e:
                new_exps = exps[:index] + (e - 1,) + exps[index + 1:]
                terms[new_exps] = coeff * e
        return Poly._raw(self.ring, terms)

    # ------------------------------------------------------------------
    # ring changes

    def rename(self, ring):
        """Same exponents, new variable names."""
        ring = tuple(ring)
        if len(ring) != self.nvars:
            raise DimensionMismatchError(f"Cannot rename {self.ring} to {ring}")
        return Poly._raw(ring, dict(self.terms))

    def in_ring(self, ring):
        """Embed into (or project onto) ``ring``; used variables must exist there."""
        ring = tuple(ring)
        if ring == self.ring:
            return self
        positions = []
        for index, name in enumerate(self.ring):
            if name in ring:
                positions.append((index, ring.index(name)))
            elif self.involves(name):
                raise RingMismatchError(f"Variable {name} is used but missing from {ring}")
        terms = {}
        for exps, coeff in self.terms.items():
            new_exps = [0] * len(ring)
            for source, target in positions:
                new_exps[target] = exps[source]
            terms[tuple(new_exps)] = coeff
        return Poly._raw(ring, terms)

    def coefficients_in(self, var):
        """Map k -> coefficient of var^k (a Poly of the same ring without var)."""
        index = self._index(var)
        parts = {}
        for exps, coeff in self.terms.items():
            k = exps[index]
            reduced = exps[:index] + (0,) + exps[index + 1:]
            parts.setdefault(k, {})[reduced] = coeff
        return {k: Poly._raw(self.ring, terms) for k, terms in parts.items()}

    # ------------------------------------------------------------------
    # division

    def divmod(self, divisor):
        """Multivariate division by one polynomial in the term order above."""
        self._check_ring(divisor)
        if not divisor:
            raise ZeroDivisionError("Polynomial division by zero")
        key = _order_key(self.ring)
        lead = divisor.leading_monomial()
        lead_coeff = to_scalar(divisor.terms[lead])
        quotient, remainder = {}, {}
        current = dict(self.terms)
        while current:
            mono = max(current, key=key)
            coeff = current[mono]
            if all(a >= b for a, b in zip(mono, lead)):
                shift = tuple(a - b for a, b in zip(mono, lead))
                factor = coeff / lead_coeff
                quotient[shift] = factor
                for exps, c in divisor.terms.items():
                    target = _add_exps(exps, shift)
                    value = current.get(target, 0) - factor * c
                    if value:
                        current[target] = value
                    else:
                        current.pop(target, None)
            else:
                remainder[mono] = coeff
                del current[mono]
        return Poly._raw(self.ring, quotient), Poly._raw(self.ring, remainder)

    def exact_div(self, divisor):
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise ValueError(f"{divisor} does not divide {self}")
        return quotient

    def divides(self, other):
        """True when self divides other."""
        return not other.divmod(self)[1]

    # ------------------------------------------------------------------
    # text form

    def __str__(self):
        if not self.terms:
            return '0'
        ranks = _name_ranks(self.ring)
        pieces = []
        for position, (exps, coeff) in enumerate(self.sorted_terms()):
            negative, magnitude = _split_sign(coeff)
            factors = []
            for index in ranks:
                e = exps[index]
                if e == 1:
                    factors.append(self.ring[index])
                elif e:
                    factors.append(f"{self.ring[index]}^{e}")
            body = '*'.join(factors)
            if magnitude != 1 or not body:
                text = _format_magnitude(magnitude)
                body = f"{text}*{body}" if body else text
            if position == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return ''.join(pieces)

    def __repr__(self):
        return f"Poly({self})"


def _split_sign(coeff):
    if isinstance(coeff, QuadExtScalar):
        negative = coeff.a < 0 or (coeff.a == 0 and coeff.b < 0)
    else:
        negative = coeff < 0
    return negative, (-coeff if negative else coeff)


def _format_magnitude(value):
    if isinstance(value, QuadExtScalar) and value.a != 0:
        return f"({format_scalar(value)})"
    return format_scalar(value)


# ----------------------------------------------------------------------
# module-level operations


def poly_arith(p, q, op):
    """Uniform entry point: op in add, sub, mul, scale (q scalar), pow (q int)."""
    if op == 'add':
        return p + _same_ring(p, q)
    if op == 'sub':
        return p - _same_ring(p, q)
    if op == 'mul':
        return p * _same_ring(p, q)
    if op == 'scale':
        return p.scale(q)
    if op == 'pow':
        return p ** q
    raise ValueError(f"Unknown polynomial operation: {op}")


def _same_ring(p, q):
    if not isinstance(q, Poly):
        raise RingMismatchError("Both operands must be polynomials")
    p._check_ring(q)
    return q


def substitute_linear(poly, matrix, ring=None):
    return poly.substitute_linear(matrix, ring)


def restrict_to_line(poly, p=None, q=None):
    return poly.restrict_to_line(p, q)


def partial_derivative(poly, var):
    return poly.partial_derivative(var)


def sum_of_products(ring, products):
    """sum(sign * a * b) over (sign, a, b) triples, accumulated in one table."""
    ring = tuple(ring)
    terms = {}
    for sign, a, b in products:
        for ea, ca in a.terms.items():
            scaled = ca * sign
            for eb, cb in b.terms.items():
                exps = _add_exps(ea, eb)
                terms[exps] = terms.get(exps, 0) + scaled * cb
    return Poly._raw(ring, {e: c for e, c in terms.items() if c})


def monomial_basis(polys):
    """Sorted union of the monomials of several polynomials of one ring."""
    if not polys:
        return []
    key = _order_key(polys[0].ring)
    monomials = set()
    for poly in polys:
        monomials.update(poly.terms)
    return sorted(monomials, key=key, reverse=True)
