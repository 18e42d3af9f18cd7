"""Basis-independent invariants used to tell trialgebras apart."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .algebra import PRODUCTS, Trialgebra, centralizer, has_unit, square_span
from .centroids import centroid_basis
from .derivations import derivation_basis


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    dim_der: int
    dim_centroid: int
    dim_square: int
    dim_centralizer: int
    left_unital: tuple  # one flag per product, in PRODUCTS order
    right_unital: tuple

    def as_dict(self) -> dict:
        d = asdict(self)
        d["left_unital"] = dict(zip(PRODUCTS, self.left_unital))
        d["right_unital"] = dict(zip(PRODUCTS, self.right_unital))
        return d


def fingerprint(t: Trialgebra) -> Fingerprint:
    return Fingerprint(
        dim=t.dim,
        dim_der=derivation_basis(t).dim,
        dim_centroid=centroid_basis(t).dim,
        dim_square=square_span(t).dim,
        dim_centralizer=centralizer(t).dim,
        left_unital=tuple(has_unit(c, "left") for _, c in t.tensors()),
        right_unital=tuple(has_unit(c, "right") for _, c in t.tensors()),
    )
