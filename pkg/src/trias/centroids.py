"""Centroids Γ(T) and the structural checks relating Γ(T) to Der(T)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

from . import linalg
from .algebra import (
    PRODUCTS,
    Check,
    Trialgebra,
    bilinear,
    endo,
    endo_basis,
    endo_contains,
    square_span,
)
from .derivations import derivation_basis
from .linalg import Subspace


@dataclass(frozen=True)
class CentroidSystem:
    algebra: Trialgebra
    matrix: tuple
    # row ranges per product, in PRODUCTS order
    blocks: dict = field(default_factory=dict, compare=False)

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return self.algebra.dim ** 2


def _product_rows(c, n):
    rows = []
    for i, j, p in cartesian(range(n), repeat=3):
        # psi(e_i e_j) = psi(e_i) e_j
        row = [Fraction(0)] * (n * n)
        for k in range(n):
            row[k * n + p] += c[i][j][k]
            row[i * n + k] -= c[k][j][p]
        rows.append(tuple(row))
        # psi(e_i e_j) = e_i psi(e_j)
        row = [Fraction(0)] * (n * n)
        for k in range(n):
            row[k * n + p] += c[i][j][k]
            row[j * n + k] -= c[i][k][p]
        rows.append(tuple(row))
    return rows


def build_centroid_system(t: Trialgebra) -> CentroidSystem:
    n = t.dim
    rows, blocks = [], {}
    for p, c in t.tensors():
        start = len(rows)
        rows.extend(_product_rows(c, n))
        blocks[p] = (start, len(rows))
    return CentroidSystem(t, tuple(rows), blocks)


def centroid_basis(t: Trialgebra) -> Subspace:
    """Γ(T) = Γ^⊣ ∩ Γ^⊢ ∩ Γ^⊥ as a canonical subspace of flattened matrices."""
    return linalg.nullspace(build_centroid_system(t).matrix, t.dim ** 2)


def product_centroid(t: Trialgebra, product: str) -> Subspace:
    """Centroid with respect to a single product."""
    return linalg.nullspace(tuple(_product_rows(t.tensor(product), t.dim)), t.dim ** 2)


def centroid_dimensions(t: Trialgebra) -> dict:
    dims = {p: product_centroid(t, p).dim for p in PRODUCTS}
    dims["all"] = centroid_basis(t).dim
    return dims


def is_centroid_element(t: Trialgebra, psi) -> Check:
    """psi(x•y) = psi(x)•y = x•psi(y) for all three products on basis pairs."""
    psi = endo(psi, t.dim)
    n = t.dim
    cols = linalg.transpose(psi)
    basis = linalg.identity(n)
    for p, c in t.tensors():
        for i, j in cartesian(range(n), repeat=2):
            image = linalg.mat_vec(psi, c[i][j])
            if image != bilinear(c, cols[i], basis[j]) or image != bilinear(c, basis[i], cols[j]):
                return Check(False, (p, i + 1, j + 1))
    return Check(True)


@dataclass
class StructureCheck:
    """Failures found by one of the Γ/Der structural checks (empty = pass)."""

    name: str
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok


def gamma_der_product_check(t: Trialgebra, gamma: Subspace | None = None, der: Subspace | None = None) -> StructureCheck:
    """phi ∘ d is a derivation for every basis pair (phi, d) of Γ x Der."""
    n = t.dim
    gamma = centroid_basis(t) if gamma is None else gamma
    der = derivation_basis(t) if der is None else der
    failures = []
    for a, phi in enumerate(endo_basis(gamma, n)):
        for b, d in enumerate(endo_basis(der, n)):
            if not endo_contains(der, linalg.matmul(phi, d)):
                failures.append(("gamma∘der", a, b))
    return StructureCheck("gamma_der_product", failures)


def gamma_commutator_check(t: Trialgebra, gamma: Subspace | None = None, der: Subspace | None = None) -> StructureCheck:
    """[Γ, Γ] kills T², and [Γ, Der] stays inside Γ."""
    n = t.dim
    gamma = centroid_basis(t) if gamma is None else gamma
    der = derivation_basis(t) if der is None else der
    squares = square_span(t).basis
    gbasis = endo_basis(gamma, n)
    failures = []
    for a, b in cartesian(range(len(gbasis)), repeat=2):
        if a >= b:
            continue
        comm = linalg.commutator(gbasis[a], gbasis[b])
        if any(not linalg.is_zero(linalg.mat_vec(comm, v)) for v in squares):
            failures.append(("[gamma,gamma](T²)", a, b))
    for a, phi in enumerate(gbasis):
        for b, d in enumerate(endo_basis(der, n)):
            if not endo_contains(gamma, linalg.commutator(phi, d)):
                failures.append(("[gamma,der]", a, b))
    return StructureCheck("gamma_commutator", failures)
