"""
Classification of quadratic maps whose image is a quadric surface.

Over the reals there are four classes: the smooth quadric splits by
whether the two base points are real (Phi1a) or complex conjugate
(Phi1b); on a cone the map is Phi2 or Phi3 depending on the square term
left in the fourth component. Over the complex numbers Phi1a and Phi1b
merge into Phi1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from planarize.exceptions import DegreeBoundExceeded, NotAQuadricImageMap, PlanarizeError
from polys.services import (
    XYZ,
    Poly,
    canonical_vector,
    express_in_basis,
    inverse_matrix,
    kernel_basis,
    quadratic_form_matrix,
    quadratic_form_rank,
    rank,
)
from planarity.services import implicitize, is_trivial
from ratmaps.services import base_locus, normalize_map
from scalars.services import QuadExtScalar, sqrt_in_field

from .equivalence import EquivalenceWitness, pull_back, verify_equivalence

logger = logging.getLogger(__name__)

PHI1 = 'Phi1'
PHI1A = 'Phi1a'
PHI1B = 'Phi1b'
PHI2 = 'Phi2'
PHI3 = 'Phi3'

REAL = 'real'
COMPLEX = 'complex'
FIELDS = (REAL, COMPLEX)

_x, _y, _z = Poly.gens(XYZ)
QUADRIC_FORMS = {
    PHI1: (_x ** 2, _x * _y, _x * _z, _y * _z),
    PHI1A: (_x ** 2, _x * _y, _x * _z, _y * _z),
    PHI1B: (_x ** 2, _x * _y, _x * _z, _y ** 2 + _z ** 2),
    PHI2: (_x ** 2, _x * _y, _y ** 2, _x * _z),
    PHI3: (_x ** 2, _x * _y, _y ** 2, _z ** 2),
}


@dataclass(frozen=True)
class QuadricClassification:
    label: str
    witness: EquivalenceWitness = None
    surface_rank: int = None

    @property
    def witness_available(self):
        return self.witness is not None

    def as_dict(self):
        return {
            'label': self.label,
            'surfaceRank': self.surface_rank,
            'witness': self.witness.as_dict() if self.witness else 'unavailable',
        }


def quadric_normal_form(label):
    return normalize_map(QUADRIC_FORMS[label])


def _coefficients(form):
    return [form.coefficient(tuple(int(i == j) for j in range(3))) for i in range(3)]


def _complete_basis(columns):
    """Add a coordinate vector so the columns span the whole space."""
    for k in range(3):
        unit = [Fraction(int(i == k)) for i in range(3)]
        candidate = [unit] + list(columns)
        if rank(candidate) == 3:
            return candidate
    raise NotAQuadricImageMap("Base points do not span a frame")


def _smooth_case(phi, field, seed):
    locus = base_locus(phi, seed=seed)
    if len(locus) != 2:
        raise NotAQuadricImageMap(
            f"A map onto a smooth quadric has two base points, found {len(locus)}"
        )
    a, b = (p.point for p in locus.points)
    disc = a.disc or b.disc
    if field == COMPLEX:
        label = PHI1
    else:
        label = PHI1B if disc < 0 else PHI1A

    if label == PHI1B:
        # a = P + sqrt(D) * Q with P, Q rational; [0:1:i] goes to a
        real_part = [c.a if isinstance(c, QuadExtScalar) else c for c in a.coords]
        imaginary_part = [c.b if isinstance(c, QuadExtScalar) else Fraction(0) for c in a.coords]
        scale = sqrt_in_field(-disc)
        columns = [real_part, [v * scale for v in imaginary_part]]
    else:
        columns = [list(a.coords), list(b.coords)]
    frame = _complete_basis(columns)
    # frame holds the columns of eta^-1
    eta = inverse_matrix([list(row) for row in zip(*frame)])
    logger.debug(f"Smooth quadric image of {phi}: base discs {locus.discs()}, label {label}")
    return label, eta


def _linear_span(forms):
    """Two independent linear forms spanning the given ones, or None."""
    chosen = []
    for form in forms:
        if not form:
            continue
        candidate = chosen + [canonical_vector(_coefficients(form))]
        if rank(candidate) > len(chosen):
            chosen = candidate
        if len(chosen) == 2:
            return chosen
    return None


def _cone_case(phi, equation):
    vertex = kernel_basis(quadratic_form_matrix(equation))[0]
    planes = kernel_basis([vertex])
    members = [phi.web_member(plane) for plane in planes]
    # the planes through the vertex cut out the quadrics in two linear forms
    span = _linear_span([m.partial_derivative(v) for m in members for v in XYZ])
    if span is None:
        raise NotAQuadricImageMap(f"Projection of {phi} from the cone vertex is not a conic")
    frame = _complete_basis(span)
    psi0, psi1, psi2 = frame[1], frame[2], frame[0]

    # phi in the coordinates (psi0, psi1, psi2): one component keeps a psi2 part
    moved = pull_back(phi, inverse_matrix([psi0, psi1, psi2]))
    residual = None
    for component in moved:
        part = Poly(XYZ, {e: c for e, c in component.terms.items() if e[2]})
        if part:
            residual = part
            break
    if residual is None:
        raise NotAQuadricImageMap(f"The image of {phi} is a curve")
    a0 = residual.coefficient((1, 0, 1))
    a1 = residual.coefficient((0, 1, 1))
    a2 = residual.coefficient((0, 0, 2))

    if not a2:
        if a0:
            rows = [[a0 * u + a1 * v for u, v in zip(psi0, psi1)], psi1, psi2]
        else:
            rows = [[a1 * v for v in psi1], psi0, psi2]
        return PHI2, rows

    root = sqrt_in_field(abs(a2))
    shift0, shift1 = a0 / (2 * a2), a1 / (2 * a2)
    last = [root * (w + shift0 * u + shift1 * v) for u, v, w in zip(psi0, psi1, psi2)]
    return PHI3, [psi0, psi1, last]


def _witness(phi, label, eta):
    try:
        basis = pull_back(quadric_normal_form(label), eta)
        mu = []
        for component in phi.components:
            row = express_in_basis(component, basis)
            if row is None:
                logger.warning(f"{component} is not in the web of {label}; witness unavailable")
                return None
            mu.append(row)
        witness = EquivalenceWitness(eta, mu)
    except PlanarizeError as e:
        logger.warning(f"Witness for {label} unavailable: {e}")
        return None
    if not verify_equivalence(phi, quadric_normal_form(label), witness):
        logger.warning(f"Constructed witness for {label} does not verify; witness unavailable")
        return None
    return witness


def classify_quadric_image(phi, field=REAL, seed=0):
    """
    Label of a quadratic map whose image is a quadric, with a witness
    phi(x) = mu * normal_form(eta * x) when its entries could be built.
    """
    if field not in FIELDS:
        raise ValueError(f"Unknown field {field!r}; expected one of {', '.join(FIELDS)}")
    if phi.degree != 2:
        raise NotAQuadricImageMap(f"Expected a quadratic map, got degree {phi.degree}")
    if is_trivial(phi):
        raise NotAQuadricImageMap(f"The image of {phi} lies in a plane")
    try:
        surface = implicitize(phi, dmax=2, seed=seed)
    except DegreeBoundExceeded:
        raise NotAQuadricImageMap(f"The image of {phi} is not a quadric")
    if surface.degree != 2 or surface.image_dimension != 2:
        raise NotAQuadricImageMap(f"The image of {phi} is not a quadric surface")

    equation = surface.equations[0]
    surface_rank = quadratic_form_rank(equation)
    if surface_rank == 4:
        label, eta = _smooth_case(phi, field, seed)
    elif surface_rank == 3:
        label, eta = _cone_case(phi, equation)
    else:
        raise NotAQuadricImageMap(f"The quadric {equation} is reducible")

    witness = _witness(phi, label, eta)
    logger.info(f"{phi} classified as {label} (quadric rank {surface_rank})")
    return QuadricClassification(label, witness, surface_rank)
