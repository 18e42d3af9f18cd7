"""Reading and writing the ``.trias`` algebra and ``.mat`` matrix formats.

``.trias``::

    trias v1
    dim 2
    name Trias_2^6          # optional
    param a 1               # optional, repeatable
    left 1 1 1 1            # e_1 ⊣ e_1 has coefficient 1 on e_1
    left 2 1 2 1

``.mat``::

    matrix v1
    dim 2                   # or "dim <rows> <cols>" for a non-square map
    0 0
    0 1

Indices in files are 1-based. ``#`` starts a comment anywhere on a line.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from . import linalg
from .algebra import PRODUCTS, Trialgebra, tensor_from_entries
from .errors import ParseError

_TOKEN = re.compile(r"\S+")


def _lines(text: str):
    """Yield (lineno, [(column, token), ...]) for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if toks:
            yield lineno, toks, line


def _rational(tok, path, lineno):
    col, text = tok
    try:
        return linalg.parse_rational(text)
    except ValueError as exc:
        raise ParseError(str(exc), path, lineno, col) from None


def _count(tok, path, lineno, lo=1, hi=None):
    col, text = tok
    if not text.isdigit():
        raise ParseError(f"expected a positive integer, got {text!r}", path, lineno, col)
    v = int(text)
    if v < lo or (hi is not None and v > hi):
        bound = f"between {lo} and {hi}" if hi is not None else f">= {lo}"
        raise ParseError(f"index {v} out of range (must be {bound})", path, lineno, col)
    return v


def _header(lines, magic, path):
    try:
        lineno, toks, _ = next(lines)
    except StopIteration:
        raise ParseError(f"empty file, expected '{magic} v1'", path, 1, 1) from None
    if [t for _, t in toks] != [magic, "v1"]:
        raise ParseError(f"expected header '{magic} v1'", path, lineno, toks[0][0])
    try:
        lineno, toks, _ = next(lines)
    except StopIteration:
        raise ParseError("missing 'dim' line", path, lineno + 1, 1) from None
    if toks[0][1] != "dim" or len(toks) not in (2, 3):
        raise ParseError("expected 'dim <n>'", path, lineno, toks[0][0])
    return lineno, [_count(t, path, lineno) for t in toks[1:]]


def parse_trias(text: str, path: str | None = None) -> Trialgebra:
    lines = _lines(text)
    lineno, dims = _header(lines, "trias", path)
    if len(dims) != 1:
        raise ParseError("expected 'dim <n>'", path, lineno, 1)
    n = dims[0]
    name = None
    params = {}
    entries = {p: {} for p in PRODUCTS}
    for lineno, toks, line in lines:
        key = toks[0][1]
        if key == "name":
            if name is not None:
                raise ParseError("duplicate 'name' line", path, lineno, toks[0][0])
            if len(toks) < 2:
                raise ParseError("'name' needs a value", path, lineno, toks[0][0])
            name = line[toks[1][0] - 1:].strip()
        elif key == "param":
            if len(toks) != 3:
                raise ParseError("expected 'param <name> <rational>'", path, lineno, toks[0][0])
            pname = toks[1][1]
            if pname in params:
                raise ParseError(f"duplicate parameter {pname!r}", path, lineno, toks[1][0])
            params[pname] = _rational(toks[2], path, lineno)
        elif key in PRODUCTS:
            if len(toks) != 5:
                raise ParseError(f"expected '{key} <i> <j> <k> <rational>'", path, lineno, toks[0][0])
            i, j, k = (_count(t, path, lineno, 1, n) - 1 for t in toks[1:4])
            if (i, j, k) in entries[key]:
                raise ParseError(f"duplicate entry {key} {i + 1} {j + 1} {k + 1}", path, lineno, toks[0][0])
            entries[key][(i, j, k)] = _rational(toks[4], path, lineno)
        else:
            raise ParseError(f"unknown keyword {key!r}", path, lineno, toks[0][0])
    tensors = {p: tensor_from_entries(n, entries[p]) for p in PRODUCTS}
    return Trialgebra(n, tensors["left"], tensors["right"], tensors["middle"], name=name, params=params)


def format_trias(t: Trialgebra) -> str:
    out = ["trias v1", f"dim {t.dim}"]
    if t.name:
        out.append(f"name {t.name}")
    for pname, value in t.params.items():
        out.append(f"param {pname} {linalg.format_rational(value)}")
    for p, c in t.tensors():
        for i in range(t.dim):
            for j in range(t.dim):
                for k, v in enumerate(c[i][j]):
                    if v:
                        out.append(f"{p} {i + 1} {j + 1} {k + 1} {linalg.format_rational(v)}")
    return "\n".join(out) + "\n"


def parse_mat(text: str, path: str | None = None):
    lines = _lines(text)
    lineno, dims = _header(lines, "matrix", path)
    nrows, ncols = (dims[0], dims[0]) if len(dims) == 1 else dims
    rows = []
    for lineno, toks, _ in lines:
        if len(rows) == nrows:
            raise ParseError(f"more than {nrows} matrix rows", path, lineno, toks[0][0])
        if len(toks) != ncols:
            col = toks[ncols][0] if len(toks) > ncols else toks[-1][0]
            raise ParseError(f"expected {ncols} entries, found {len(toks)}", path, lineno, col)
        rows.append(tuple(_rational(t, path, lineno) for t in toks))
    if len(rows) != nrows:
        raise ParseError(f"expected {nrows} matrix rows, found {len(rows)}", path, lineno + 1, 1)
    return tuple(rows)


def format_mat(m) -> str:
    nrows, ncols = linalg.shape(m)
    dim = f"{nrows}" if nrows == ncols else f"{nrows} {ncols}"
    body = [" ".join(linalg.format_rational(x) for x in row) for row in m]
    return "\n".join(["matrix v1", f"dim {dim}", *body]) + "\n"


def read_trias(path) -> Trialgebra:
    return parse_trias(Path(path).read_text(encoding="utf-8"), str(path))


def read_mat(path):
    return parse_mat(Path(path).read_text(encoding="utf-8"), str(path))


def format_vector(v) -> str:
    """Render a coordinate vector as ``e1+2e3`` (``0`` for the zero vector)."""
    terms = []
    for k, x in enumerate(v):
        if not x:
            continue
        x = Fraction(x)
        coeff = "" if abs(x) == 1 else linalg.format_rational(abs(x))
        sign = "-" if x < 0 else "+"
        terms.append((sign, f"{coeff}e{k + 1}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(f"{s}{t}" for s, t in terms[1:])
