"""Derivations and central derivations of a trialgebra.

Unknowns are the entries of an n x n matrix d flattened column-major
(d11, d21, ..., dn1, d12, ...), matching :func:`algebra.flatten_endo`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian

from . import linalg
from .algebra import Check, Trialgebra, bilinear, endo, square_span, centralizer
from .linalg import Subspace


@dataclass(frozen=True)
class DerivationSystem:
    algebra: Trialgebra
    matrix: tuple

    @property
    def rows(self) -> int:
        return len(self.matrix)

    @property
    def cols(self) -> int:
        return self.algebra.dim ** 2


def is_derivation(t: Trialgebra, d) -> Check:
    """Leibniz rule d(x•y) = d(x)•y + x•d(y) for all three products."""
    d = endo(d, t.dim)
    n = t.dim
    cols = linalg.transpose(d)
    for p, c in t.tensors():
        for i, j in cartesian(range(n), repeat=2):
            lhs = linalg.mat_vec(d, c[i][j])
            e_i = tuple(Fraction(int(k == i)) for k in range(n))
            e_j = tuple(Fraction(int(k == j)) for k in range(n))
            rhs = tuple(a + b for a, b in zip(bilinear(c, cols[i], e_j), bilinear(c, e_i, cols[j])))
            if lhs != rhs:
                return Check(False, (p, i + 1, j + 1))
    return Check(True)


def build_derivation_system(t: Trialgebra) -> DerivationSystem:
    """One row per (product, i, j, q):
    sum_k c_ij^k d_qk - d_ki c_kj^q - d_kj c_ik^q = 0.
    """
    n = t.dim
    rows = []
    for _, c in t.tensors():
        for i, j, q in cartesian(range(n), repeat=3):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[k * n + q] += c[i][j][k]
                row[i * n + k] -= c[k][j][q]
                row[j * n + k] -= c[i][k][q]
            rows.append(tuple(row))
    return DerivationSystem(t, tuple(rows))


def derivation_basis(t: Trialgebra) -> Subspace:
    """Der(T) as a canonical subspace of flattened endomorphisms."""
    return linalg.nullspace(build_derivation_system(t).matrix, t.dim ** 2)


def central_derivations_definitional(t: Trialgebra) -> Subspace:
    """Endomorphisms with image in Z(T) that vanish on T².

    Both conditions are linear in the matrix entries, so they are stacked
    into one homogeneous system rather than using Γ ∩ Der.
    """
    n = t.dim
    rows = []
    # image(psi) inside Z(T): every column lies in the annihilator
    for constraint in centralizer(t).constraints():
        for col in range(n):
            row = [Fraction(0)] * (n * n)
            for r in range(n):
                row[col * n + r] = constraint[r]
            rows.append(tuple(row))
    # psi vanishes on T²
    for v in square_span(t).basis:
        for r in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[k * n + r] = v[k]
            rows.append(tuple(row))
    return linalg.nullspace(tuple(rows), n * n)
