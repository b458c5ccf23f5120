"""
Projective equivalence witnesses.

A witness (eta, mu) relates two maps by phi(x) = mu * phi_prime(eta * x),
with eta acting on column vectors of the source and mu on the target.
"""

import logging
from dataclasses import dataclass

from planarize.exceptions import DimensionMismatchError, InvalidWitness, PlanarizeError
from planarize.sampling import RationalSampler
from polys.services import Poly, determinant_scalar, identity, inverse_matrix, proportional
from ratmaps.services import normalize_map
from scalars.services import format_scalar, to_scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquivalenceWitness:
    eta: tuple
    mu: tuple

    def __post_init__(self):
        eta = tuple(tuple(to_scalar(v) for v in row) for row in self.eta)
        mu = tuple(tuple(to_scalar(v) for v in row) for row in self.mu)
        if len(eta) != 3 or any(len(row) != 3 for row in eta):
            raise DimensionMismatchError("eta must be a 3x3 matrix")
        if len(mu) != 4 or any(len(row) != 4 for row in mu):
            raise DimensionMismatchError("mu must be a 4x4 matrix")
        if not determinant_scalar([list(r) for r in eta]):
            raise InvalidWitness("eta is singular")
        if not determinant_scalar([list(r) for r in mu]):
            raise InvalidWitness("mu is singular")
        object.__setattr__(self, 'eta', eta)
        object.__setattr__(self, 'mu', mu)

    def as_dict(self):
        return {
            'eta': [[format_scalar(v) for v in row] for row in self.eta],
            'mu': [[format_scalar(v) for v in row] for row in self.mu],
        }


def identity_witness():
    return EquivalenceWitness(identity(3), identity(4))


def invert_witness(witness):
    """(eta^-1, mu^-1): relates the two maps in the other direction."""
    return EquivalenceWitness(
        inverse_matrix([list(r) for r in witness.eta]),
        inverse_matrix([list(r) for r in witness.mu]),
    )


def random_witness(seed=0):
    sampler = RationalSampler(seed)
    return EquivalenceWitness(sampler.invertible_matrix(3), sampler.invertible_matrix(4))


def pull_back(phi, eta):
    """Components of phi(eta * x), before any target change."""
    return [c.substitute_linear([list(r) for r in eta]) for c in phi.components]


def apply_witness(phi, witness):
    """The map x -> mu * phi(eta * x), content cleared."""
    pulled = pull_back(phi, witness.eta)
    components = []
    for row in witness.mu:
        total = Poly.zero(phi.ring)
        for coefficient, component in zip(row, pulled):
            if coefficient:
                total = total + component.scale(coefficient)
        components.append(total)
    return normalize_map(components, phi.ring)


def verify_equivalence(phi, phi_prime, witness):
    """phi == mu * phi_prime(eta * x) up to one global scalar."""
    if not isinstance(witness, EquivalenceWitness):
        witness = EquivalenceWitness(*witness)
    try:
        image = apply_witness(phi_prime, witness)
    except PlanarizeError as e:
        logger.debug(f"Witness does not produce a map: {e}")
        return False
    result = proportional(list(phi.components), list(image.components))
    logger.debug(f"Equivalence of {phi} and {phi_prime}: {result}")
    return result
