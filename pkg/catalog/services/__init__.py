from .catalog import CATALOG_FILE, NormalForm, catalog, dual_pairs, get_form
from .equivalence import (
    EquivalenceWitness,
    apply_witness,
    identity_witness,
    invert_witness,
    random_witness,
    verify_equivalence,
)
from .classify import (
    PHI1,
    PHI1A,
    PHI1B,
    PHI2,
    PHI3,
    QuadricClassification,
    classify_quadric_image,
    quadric_normal_form,
)
from .signature import InvariantSignature, expected_signature, invariant_signature, match_against_catalog
