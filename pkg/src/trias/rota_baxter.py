"""Rota-Baxter operators on the associative product x ∗ y = x⊣y + x⊢y - x⊥y.

R has weight λ when R(x)∗R(y) = R(R(x)∗y + x∗R(y) + λ x∗y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from itertools import product as cartesian

from . import linalg
from .algebra import Check, Trialgebra, bilinear, endo, star_product, tensor_dim
from .errors import PreconditionError

FORMULAS = ("paper", "standard")


@dataclass(frozen=True)
class RotaBaxterCandidate:
    algebra: Trialgebra
    R: tuple
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "R", endo(self.R, self.algebra.dim))
        object.__setattr__(self, "weight", Fraction(self.weight))


def is_rota_baxter(c: RotaBaxterCandidate) -> Check:
    star = star_product(c.algebra)
    n = c.algebra.dim
    R = c.R
    cols = linalg.transpose(R)
    basis = linalg.identity(n)
    for i, j in cartesian(range(n), repeat=2):
        lhs = bilinear(star, cols[i], cols[j])
        inner = [
            a + b + c.weight * w
            for a, b, w in zip(bilinear(star, cols[i], basis[j]), bilinear(star, basis[i], cols[j]), star[i][j])
        ]
        rhs = linalg.mat_vec(R, inner)
        if lhs != rhs:
            return Check(False, (i + 1, j + 1))
    return Check(True)


def _tensor(n, fn):
    basis = linalg.identity(n)
    return tuple(tuple(fn(basis[i], basis[j]) for j in range(n)) for i in range(n))


def _require_weight(c: RotaBaxterCandidate, weight: int):
    if c.weight != weight:
        raise PreconditionError(f"this construction needs weight {weight}, got {linalg.format_rational(c.weight)}")


def induced_product_weight0(c: RotaBaxterCandidate):
    """x ⋆ y = R(x)∗y - y∗R(x); left-symmetric when R has weight 0."""
    _require_weight(c, 0)
    star = star_product(c.algebra)

    def op(x, y):
        rx = linalg.mat_vec(c.R, x)
        return tuple(a - b for a, b in zip(bilinear(star, rx, y), bilinear(star, y, rx)))

    return _tensor(c.algebra.dim, op)


def double_product(c: RotaBaxterCandidate):
    """x ⋆ y = R(x)∗y + x∗R(y) + λ x∗y, associative for any Rota-Baxter R."""
    star = star_product(c.algebra)

    def op(x, y):
        rx, ry = linalg.mat_vec(c.R, x), linalg.mat_vec(c.R, y)
        return tuple(
            a + b + c.weight * w
            for a, b, w in zip(bilinear(star, rx, y), bilinear(star, x, ry), bilinear(star, x, y))
        )

    return _tensor(c.algebra.dim, op)


def induced_product_weight_minus1(c: RotaBaxterCandidate, formula: str = "paper"):
    """Weight -1 induced product.

    ``formula="paper"``: x ⋆ y = R(x)∗y - y∗R(x) - x∗y.
    ``formula="standard"``: x ⋆ y = R(x)∗y + x∗R(y) - x∗y.
    """
    _require_weight(c, -1)
    if formula == "standard":
        return double_product(c)
    if formula != "paper":
        raise ValueError(f"formula must be one of {FORMULAS}, not {formula!r}")
    star = star_product(c.algebra)

    def op(x, y):
        rx = linalg.mat_vec(c.R, x)
        return tuple(
            a - b - w for a, b, w in zip(bilinear(star, rx, y), bilinear(star, y, rx), bilinear(star, x, y))
        )

    return _tensor(c.algebra.dim, op)


def _associator(c, i, j, k):
    n = len(c)
    left = [Fraction(0)] * n
    right = [Fraction(0)] * n
    for p in range(n):
        if c[i][j][p]:
            for q in range(n):
                left[q] += c[i][j][p] * c[p][k][q]
        if c[j][k][p]:
            for q in range(n):
                right[q] += c[j][k][p] * c[i][p][q]
    return tuple(a - b for a, b in zip(left, right))


def left_symmetry_failure(c):
    """First basis triple with (x,y,z) != (y,x,z), or None."""
    n = tensor_dim(c)
    for i, j, k in cartesian(range(n), repeat=3):
        if i < j and _associator(c, i, j, k) != _associator(c, j, i, k):
            return (i + 1, j + 1, k + 1)
    return None


def is_left_symmetric(c) -> bool:
    return left_symmetry_failure(c) is None


@dataclass
class GridSearchResult:
    operators: list
    examined: int
    total: int

    @property
    def complete(self) -> bool:
        return self.examined == self.total


def grid_search_rota_baxter(t: Trialgebra, weight, entry_set, limit: int = 100_000) -> GridSearchResult:
    """Every matrix with entries from ``entry_set`` that is Rota-Baxter of ``weight``.

    Candidates are enumerated lexicographically in the column-major
    flattening. At most ``limit`` candidates are examined; a result with
    ``complete == False`` holds the matches found before stopping.
    """
    n = t.dim
    values = sorted({Fraction(v) for v in entry_set})
    total = len(values) ** (n * n)
    found, examined = [], 0
    for flat in islice(cartesian(values, repeat=n * n), limit):
        examined += 1
        R = tuple(tuple(flat[col * n + row] for col in range(n)) for row in range(n))
        if is_rota_baxter(RotaBaxterCandidate(t, R, weight)):
            found.append(R)
    return GridSearchResult(found, examined, total)
