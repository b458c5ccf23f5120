"""Quadratic forms: symmetric matrices and splitting into linear factors."""

import logging
from dataclasses import dataclass
from fractions import Fraction

from planarize.exceptions import NonHomogeneousError
from scalars.services import common_disc, sqrt_in_field

from .linalg import rank
from .poly import Poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadraticFactors:
    """Q == scalar * first * second, coefficients in Q(sqrt(disc))."""

    scalar: object
    first: Poly
    second: Poly
    disc: int

    @property
    def factors(self):
        return (self.first, self.second)


def quadratic_form_matrix(form):
    """Symmetric matrix A with form == x^T A x."""
    if not form or not form.is_homogeneous(2):
        raise NonHomogeneousError(f"Expected a nonzero quadratic form, got {form}")
    n = form.nvars
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for exps, coeff in form.terms.items():
        indices = [i for i, e in enumerate(exps) for _ in range(e)]
        i, j = indices
        if i == j:
            matrix[i][i] = coeff
        else:
            matrix[i][j] = matrix[j][i] = coeff / 2
    return matrix


def quadratic_form_rank(form):
    return rank(quadratic_form_matrix(form))


def _row_form(matrix, index, ring):
    return Poly.linear_form(ring, matrix[index])


def _square_root_form(matrix, ring):
    """For a rank-1 form c*L^2: (1/A_kk, row_k) with form == row_k^2 / A_kk."""
    k = next(i for i in range(len(matrix)) if matrix[i][i])
    return matrix[k][k], _row_form(matrix, k, ring)


def _shear(form):
    """
    Make some diagonal entry nonzero by x_i -> x_i + x_j; returns the new
    form and the substitution undoing it.
    """
    n = form.nvars
    matrix = quadratic_form_matrix(form)
    i, j = next((i, j) for i in range(n) for j in range(n) if i != j and matrix[i][j])
    forward = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    forward[i][j] = Fraction(1)
    backward = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    backward[i][j] = Fraction(-1)
    return form.substitute_linear(forward), backward


def factor_into_linear(form):
    """
    Split a quadratic form of rank <= 2 into two linear factors.

    Returns ``QuadraticFactors`` or None when the form has rank 3 or more.
    """
    if not form:
        raise ValueError("Cannot factor the zero form")
    matrix = quadratic_form_matrix(form)
    form_rank = rank(matrix)
    if form_rank > 2:
        return None

    ring = form.ring
    undo = None
    working = form
    if not any(matrix[i][i] for i in range(len(matrix))):
        working, undo = _shear(form)
        matrix = quadratic_form_matrix(working)

    pivot, first_line = _square_root_form(matrix, ring)
    # pivot * Q = L^2 - R with R of rank form_rank - 1
    residual = first_line * first_line - working.scale(pivot)
    if not residual:
        first = second = first_line
    else:
        r_kk, second_line = _square_root_form(quadratic_form_matrix(residual), ring)
        root = sqrt_in_field(r_kk)
        # R == M^2 / r_kk, so L^2 - R == (L - M/root)(L + M/root)
        shift = second_line.scale(1 / root)
        first, second = first_line - shift, first_line + shift

    if undo is not None:
        first, second = first.substitute_linear(undo), second.substitute_linear(undo)
    first, second = first.canonical(), second.canonical()
    scalar = form.leading_coefficient() / (first * second).leading_coefficient()
    disc = common_disc(list(first.terms.values()) + list(second.terms.values()))
    logger.debug(f"Factored {form} as ({first})*({second}) over disc {disc}")
    return QuadraticFactors(scalar, first, second, disc)
