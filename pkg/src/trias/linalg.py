"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`; vectors
are tuples of fractions. Nothing here ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``-3/2``, ``7`` or ``+0``. Denominators must be positive."""
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix rows")
    return out


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple((Fraction(0),) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(r == c)) for c in range(n)) for r in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Sequence) -> Vector:
    if shape(m)[1] != len(v):
        raise DimensionError(f"cannot apply {shape(m)} matrix to vector of length {len(v)}")
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def mat_add(a: Matrix, b: Matrix, scale=1) -> Matrix:
    """Return ``a + scale * b``."""
    if shape(a) != shape(b):
        raise DimensionError(f"shape mismatch {shape(a)} vs {shape(b)}")
    s = Fraction(scale)
    return tuple(tuple(x + s * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(m: Matrix, s) -> Matrix:
    s = Fraction(s)
    return tuple(tuple(s * x for x in row) for row in m)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(matmul(a, b), matmul(b, a), -1)


def is_zero(obj) -> bool:
    if isinstance(obj, tuple):
        return all(is_zero(x) for x in obj)
    return obj == 0


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # in-place Gauss-Jordan on a private copy
    nrows = len(rows)
    rows = [row for row in rows if any(row)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        # entries left of c in the pivot row are already zero
        pivot = rows[r][:c] + [x * inv if x else x for x in rows[r][c:]]
        rows[r] = pivot
        tail = [(k, y) for k, y in enumerate(pivot[c:], c) if y]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                row = rows[i]
                f = row[c]
                for k, y in tail:
                    row[k] -= f * y
        pivots.append(c)
        r += 1
        rows[r:] = [row for row in rows[r:] if any(row)]
    rows += [[Fraction(0)] * ncols for _ in range(nrows - len(rows))]
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank. The input is left untouched."""
    nrows, ncols = shape(m)
    rows, pivots = _rref_rows([list(map(Fraction, row)) for row in m], ncols)
    return tuple(tuple(row) for row in rows), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def _nullspace_vectors(m: Matrix, ncols: int) -> list[Vector]:
    rows, pivots = _rref_rows([list(map(Fraction, row)) for row in m], ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        out.append(tuple(v))
    return out


def nullspace(m: Matrix, ncols: int | None = None) -> "Subspace":
    """Canonical basis of ``{x : m x = 0}``.

    ``ncols`` is needed only when ``m`` has no rows.
    """
    if ncols is None:
        ncols = shape(m)[1]
    elif m and shape(m)[1] != ncols:
        raise DimensionError(f"matrix has {shape(m)[1]} columns, expected {ncols}")
    return Subspace.span(_nullspace_vectors(m, ncols), ncols)


def inverse(m: Matrix) -> Matrix:
    n, cols = shape(m)
    if n != cols:
        raise DimensionError("only square matrices have inverses")
    aug = [list(map(Fraction, row)) + list(irow) for row, irow in zip(m, identity(n))]
    rows, pivots = _rref_rows(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)


def solvable(a: Matrix, b: Sequence, ncols: int | None = None) -> bool:
    """Whether the affine system ``a x = b`` has a rational solution."""
    if ncols is None:
        ncols = shape(a)[1]
    aug = tuple(tuple(row) + (Fraction(rhs),) for row, rhs in zip(a, b))
    _, pivots = _rref_rows([list(r) for r in aug], ncols + 1)
    return ncols not in pivots


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical RREF basis.

    Two equal subspaces compare equal with ``==`` because the basis is
    always the nonzero rows of the reduced echelon form.
    """

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        rows, pivots = _rref_rows([list(v) for v in vecs], ambient_dim)
        return cls(ambient_dim, tuple(tuple(rows[i]) for i in range(len(pivots))))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def constraints(self) -> Matrix:
        """Rows of a matrix whose nullspace is exactly this subspace."""
        return tuple(_nullspace_vectors(self.basis, self.ambient_dim))

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def issubspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(contains(other, v) for v in self.basis)


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return nullspace(a.constraints() + b.constraints(), a.ambient_dim)


def contains(a: Subspace, v: Sequence) -> bool:
    """Exact membership test: reduce ``v`` against the echelon basis."""
    if len(v) != a.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {a.ambient_dim}")
    residual = list(map(Fraction, v))
    for row in a.basis:
        pc = next(i for i, x in enumerate(row) if x != 0)
        f = residual[pc]
        if f:
            residual = [x - f * y for x, y in zip(residual, row)]
    return not any(residual)
