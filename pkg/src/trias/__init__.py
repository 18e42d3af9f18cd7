"""Exact-arithmetic workbench for finite-dimensional associative trialgebras."""

from .algebra import (
    PRODUCTS,
    AxiomReport,
    Trialgebra,
    centralizer,
    check_dialgebra,
    check_homomorphism,
    check_trialgebra,
    multiply,
    star_product,
    transport,
)
from .catalog import instantiate, list_entries
from .centroids import centroid_basis, is_centroid_element
from .derivations import central_derivations_definitional, derivation_basis, is_derivation
from .fingerprint import Fingerprint, fingerprint
from .linalg import Subspace, intersect, nullspace, rref

__version__ = "0.1.0"

__all__ = [
    "PRODUCTS",
    "AxiomReport",
    "Fingerprint",
    "Subspace",
    "Trialgebra",
    "central_derivations_definitional",
    "centralizer",
    "centroid_basis",
    "check_dialgebra",
    "check_homomorphism",
    "check_trialgebra",
    "derivation_basis",
    "fingerprint",
    "instantiate",
    "intersect",
    "is_centroid_element",
    "is_derivation",
    "list_entries",
    "multiply",
    "nullspace",
    "rref",
    "star_product",
    "transport",
]
