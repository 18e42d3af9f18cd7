"""Trialgebras given by structure constants.

A structure tensor ``c`` of dimension ``n`` is a nested tuple with
``c[i][j][k]`` the coefficient of ``e_k`` in ``e_i * e_j``. Indices are
0-based here; everything a user reads or writes is 1-based.

Endomorphisms use the column convention: ``m[r][c]`` is the coefficient of
``e_r`` in the image of ``e_c``, so applying ``m`` is ``mat_vec(m, v)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Any, Sequence

from . import linalg
from .errors import DimensionError
from .linalg import Subspace

PRODUCTS = ("left", "right", "middle")
SYMBOLS = {"left": "⊣", "right": "⊢", "middle": "⊥"}

# (x a y) b z = x c (y d z), one tuple (a, b, c, d) per identity.
TRIALGEBRA_AXIOMS = {
    "T1": ("left", "left", "left", "left"),
    "T2": ("left", "left", "left", "right"),
    "T3": ("right", "left", "right", "left"),
    "T4": ("left", "right", "right", "right"),
    "T5": ("right", "right", "right", "right"),
    "T6": ("left", "left", "left", "middle"),
    "T7": ("middle", "left", "middle", "left"),
    "T8": ("left", "middle", "middle", "right"),
    "T9": ("right", "middle", "right", "middle"),
    "T10": ("middle", "right", "right", "right"),
    "T11": ("middle", "middle", "middle", "middle"),
}
DIALGEBRA_AXIOMS = {f"D{i}": TRIALGEBRA_AXIOMS[f"T{i}"] for i in range(1, 6)}


def zero_tensor(n: int):
    z = Fraction(0)
    return tuple(tuple((z,) * n for _ in range(n)) for _ in range(n))


def tensor_from_entries(n: int, entries: dict):
    """Build a tensor from ``{(i, j, k): coeff}`` with 0-based keys."""
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in entries.items():
        c[i][j][k] = Fraction(v)
    return freeze_tensor(c)


def freeze_tensor(c):
    return tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in c)


def tensor_dim(c) -> int:
    n = len(c)
    if any(len(plane) != n or any(len(row) != n for row in plane) for plane in c):
        raise DimensionError("structure tensor must be n x n x n")
    return n


def bilinear(c, x: Sequence, y: Sequence):
    n = len(c)
    if len(x) != n or len(y) != n:
        raise DimensionError(f"operands of length {len(x)}, {len(y)} for dimension {n}")
    out = [Fraction(0)] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            s = x[i] * y[j]
            for k, ck in enumerate(c[i][j]):
                if ck:
                    out[k] += s * ck
    return tuple(out)


@dataclass(frozen=True)
class Trialgebra:
    """Three bilinear products ⊣ (left), ⊢ (right), ⊥ (middle) on Q^dim."""

    dim: int
    left: tuple
    right: tuple
    middle: tuple
    name: str | None = None
    params: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        for p in PRODUCTS:
            if tensor_dim(getattr(self, p)) != self.dim:
                raise DimensionError(f"{p} tensor does not have dimension {self.dim}")

    def tensor(self, product: str):
        if product not in PRODUCTS:
            raise ValueError(f"unknown product {product!r}")
        return getattr(self, product)

    def tensors(self):
        return [(p, getattr(self, p)) for p in PRODUCTS]

    @classmethod
    def zero(cls, n: int, name=None) -> "Trialgebra":
        z = zero_tensor(n)
        return cls(n, z, z, z, name=name)

    @classmethod
    def diagonal(cls, c, name=None) -> "Trialgebra":
        """The trialgebra whose three products all equal ``c``."""
        c = freeze_tensor(c)
        return cls(tensor_dim(c), c, c, c, name=name)


def multiply(t: Trialgebra, product: str, x: Sequence, y: Sequence):
    return bilinear(t.tensor(product), linalg.vector(x), linalg.vector(y))


def basis_vector(n: int, i: int):
    return tuple(Fraction(int(k == i)) for k in range(n))


# -- axioms -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    triple: tuple  # 1-based (i, j, k)
    lhs: tuple
    rhs: tuple


@dataclass
class AxiomReport:
    checked: tuple
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    @property
    def violated_axioms(self) -> list:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return seen

    def first_witness(self, axiom: str):
        return next((v for v in self.violations if v.axiom == axiom), None)


def _left_assoc(a, b, i, j, k):
    # ((e_i a e_j) b e_k)
    n = len(a)
    out = [Fraction(0)] * n
    for p, coeff in enumerate(a[i][j]):
        if coeff:
            for q, v in enumerate(b[p][k]):
                out[q] += coeff * v
    return tuple(out)


def _right_assoc(c, d, i, j, k):
    # (e_i c (e_j d e_k))
    n = len(c)
    out = [Fraction(0)] * n
    for p, coeff in enumerate(d[j][k]):
        if coeff:
            for q, v in enumerate(c[i][p]):
                out[q] += coeff * v
    return tuple(out)


def _check(t: Trialgebra, axioms: dict) -> AxiomReport:
    n = t.dim
    violations = []
    for name, (a, b, c, d) in axioms.items():
        ta, tb, tc, td = (t.tensor(p) for p in (a, b, c, d))
        for i, j, k in cartesian(range(n), repeat=3):
            lhs = _left_assoc(ta, tb, i, j, k)
            rhs = _right_assoc(tc, td, i, j, k)
            if lhs != rhs:
                violations.append(Violation(name, (i + 1, j + 1, k + 1), lhs, rhs))
    return AxiomReport(tuple(axioms), violations)


def check_trialgebra(t: Trialgebra) -> AxiomReport:
    """Evaluate the eleven trialgebra identities on every basis triple."""
    return _check(t, TRIALGEBRA_AXIOMS)


def check_dialgebra(t: Trialgebra) -> AxiomReport:
    return _check(t, DIALGEBRA_AXIOMS)


def associativity_failure(c):
    """First 1-based basis triple where ``c`` is not associative, else None."""
    n = tensor_dim(c)
    for i, j, k in cartesian(range(n), repeat=3):
        if _left_assoc(c, c, i, j, k) != _right_assoc(c, c, i, j, k):
            return (i + 1, j + 1, k + 1)
    return None


def is_associative(c) -> bool:
    return associativity_failure(c) is None


def star_product(t: Trialgebra):
    """Tensor of x ∗ y = x ⊣ y + x ⊢ y - x ⊥ y."""
    n = t.dim
    return tuple(
        tuple(
            tuple(t.left[i][j][k] + t.right[i][j][k] - t.middle[i][j][k] for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )


# -- endomorphisms ----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """Outcome of an identity check over basis pairs.

    ``witness`` is the first failing case, e.g. ``("left", 1, 1)``.
    """

    ok: bool
    witness: Any = None

    def __bool__(self):
        return self.ok


def endo(rows, n: int | None = None):
    m = linalg.matrix(rows)
    if n is not None and linalg.shape(m) != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {linalg.shape(m)}")
    return m


def flatten_endo(m) -> tuple:
    """Column-major flattening: (m11, m21, ..., mn1, m12, ...)."""
    n = len(m)
    return tuple(m[r][c] for c in range(n) for r in range(n))


def unflatten_endo(v: Sequence, n: int):
    return tuple(tuple(Fraction(v[c * n + r]) for c in range(n)) for r in range(n))


def endo_basis(space: Subspace, n: int) -> list:
    """Basis matrices of a subspace of flattened n x n endomorphisms."""
    return [unflatten_endo(v, n) for v in space.basis]


def endo_contains(space: Subspace, m) -> bool:
    return linalg.contains(space, flatten_endo(m))


def check_homomorphism(src: Trialgebra, dst: Trialgebra, f) -> Check:
    """Does ``f`` (dst.dim x src.dim) commute with all three products?"""
    f = linalg.matrix(f)
    if linalg.shape(f) != (dst.dim, src.dim):
        raise DimensionError(f"map must be {dst.dim}x{src.dim}, got {linalg.shape(f)}")
    cols = linalg.transpose(f) if f else tuple(() for _ in range(src.dim))
    for p in PRODUCTS:
        cs, cd = src.tensor(p), dst.tensor(p)
        for i, j in cartesian(range(src.dim), repeat=2):
            lhs = linalg.mat_vec(f, cs[i][j])
            rhs = bilinear(cd, cols[i], cols[j])
            if lhs != rhs:
                return Check(False, (p, i + 1, j + 1))
    return Check(True)


def transport(t: Trialgebra, P) -> Trialgebra:
    """The algebra on Q^n for which ``P`` is an isomorphism from ``t``.

    x' * y' = P (P^-1 x' * P^-1 y') for each product, so derivations and
    centroid elements of ``t`` map to their conjugates ``P d P^-1``.
    """
    P = linalg.matrix(P)
    n = t.dim
    Q = linalg.inverse(P)
    qcols = linalg.transpose(Q)
    new = {}
    for p in PRODUCTS:
        c = t.tensor(p)
        new[p] = tuple(
            tuple(linalg.mat_vec(P, bilinear(c, qcols[i], qcols[j])) for j in range(n))
            for i in range(n)
        )
    return Trialgebra(n, new["left"], new["right"], new["middle"], name=t.name, params=dict(t.params))


# -- subspaces attached to the products --------------------------------------


def square_span(t: Trialgebra) -> Subspace:
    """T² : the span of every product of two basis vectors, all three products."""
    vecs = [c[i][j] for _, c in t.tensors() for i in range(t.dim) for j in range(t.dim)]
    return Subspace.span(vecs, t.dim)


def centralizer(t: Trialgebra, subset_basis: Sequence[Sequence] | None = None) -> Subspace:
    """{x : x • h = h • x = 0 for every h in span(subset_basis), every product}.

    With no subset, H is the whole algebra and the result is the two-sided
    annihilator Z(T).
    """
    n = t.dim
    if subset_basis is None:
        subset_basis = linalg.identity(n)
    hs = [linalg.vector(h) for h in subset_basis]
    for h in hs:
        if len(h) != n:
            raise DimensionError(f"vector of length {len(h)} in dimension {n}")
    rows = []
    for _, c in t.tensors():
        for h in hs:
            # coefficient of e_k in x • h and h • x, as linear forms in x
            for k in range(n):
                rows.append(tuple(sum((h[j] * c[i][j][k] for j in range(n)), Fraction(0)) for i in range(n)))
                rows.append(tuple(sum((h[j] * c[j][i][k] for j in range(n)), Fraction(0)) for i in range(n)))
    return linalg.nullspace(tuple(rows), n)


def has_unit(c, side: str) -> bool:
    """Whether some u satisfies u * x = x (side='left') or x * u = x for all x."""
    n = tensor_dim(c)
    rows, rhs = [], []
    for j, k in cartesian(range(n), repeat=2):
        if side == "left":
            rows.append(tuple(c[i][j][k] for i in range(n)))
        elif side == "right":
            rows.append(tuple(c[j][i][k] for i in range(n)))
        else:
            raise ValueError(f"side must be 'left' or 'right', not {side!r}")
        rhs.append(Fraction(int(j == k)))
    return linalg.solvable(tuple(rows), rhs, n)
