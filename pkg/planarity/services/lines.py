"""
Restrictions of a map to lines.

Row i of a restriction matrix holds the coefficients of s^(d-i) * t^i in
phi_alpha(s*p + t*q), one column per component. The image of the line lies
in a plane exactly when this matrix has a nonzero right kernel.
"""

import logging
from dataclasses import dataclass

from planarize.exceptions import DimensionMismatchError
from polys.services import (
    LINE_PARAMS,
    XYZ,
    Poly,
    PolyMatrix,
    canonical_vector,
    kernel_basis,
    rank,
)
from scalars.services import format_scalar, to_scalar

logger = logging.getLogger(__name__)


def _rows_from_pencil(forms, degree, ring):
    """Split forms in (s, t, *ring) into the coefficients of s^(d-i) t^i."""
    rows = [[{} for _ in forms] for _ in range(degree + 1)]
    for column, form in enumerate(forms):
        for exps, coeff in form.terms.items():
            rows[exps[1]][column][exps[2:]] = coeff
    return [[Poly(ring, terms) for terms in row] for row in rows]


def line_restriction_matrix(phi):
    """Symbolic (d+1)x4 matrix over (p0, p1, p2, q0, q1, q2)."""
    restricted = [component.restrict_to_line() for component in phi.components]
    return PolyMatrix(_rows_from_pencil(restricted, phi.degree, LINE_PARAMS), LINE_PARAMS)


def concrete_restriction_matrix(phi, p, q):
    """Rational (d+1)x4 matrix of the restriction to the line through p and q."""
    degree = phi.degree
    matrix = [[to_scalar(0)] * 4 for _ in range(degree + 1)]
    for column, component in enumerate(phi.components):
        for (_, i), coeff in component.restrict_to_line(p, q).terms.items():
            matrix[i][column] = coeff
    return matrix


def line_points(line):
    """Two points spanning the line l0*x + l1*y + l2*z = 0."""
    if len(line) != 3:
        raise DimensionMismatchError("A line of P^2 has three coordinates")
    if not any(to_scalar(c) for c in line):
        raise ValueError("The zero covector is not a line")
    first, second = kernel_basis([[to_scalar(c) for c in line]])
    return first, second


@dataclass(frozen=True)
class LineAnalysis:
    """
    ``plane`` spans the image of the line unless the line is special;
    ``residual_conic`` is sigma with kappa = line * sigma for cubic maps.
    """

    line: tuple
    special: bool
    plane: tuple = None
    residual_conic: Poly = None

    def as_dict(self):
        return {
            'line': [format_scalar(c) for c in self.line],
            'special': self.special,
            'plane': [format_scalar(c) for c in self.plane] if self.plane else None,
            'residualConic': str(self.residual_conic) if self.residual_conic is not None else None,
        }


def residual_conic(phi, line, plane):
    """Quotient of the web member of ``plane`` by the line's linear form."""
    member = phi.web_member(plane)
    return member.exact_div(Poly.linear_form(XYZ, line))


def plane_of_line(phi, line):
    line = tuple(to_scalar(c) for c in line)
    p, q = line_points(line)
    matrix = concrete_restriction_matrix(phi, p, q)
    if rank(matrix) <= 2:
        logger.debug(f"Line {[format_scalar(c) for c in line]} is special for {phi}")
        return LineAnalysis(line, True)
    plane = tuple(canonical_vector(kernel_basis(matrix)[0]))
    residual = residual_conic(phi, line, plane) if phi.degree == 3 else None
    return LineAnalysis(line, False, plane, residual)
