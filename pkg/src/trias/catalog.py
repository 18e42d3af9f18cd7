"""The 36 classified low-dimensional trialgebras with their claimed invariants.

Tables are transcribed in the classification notation, one product per line
(``e1 ⊣ e2 = a e1 + e2``), and parsed on import. Coefficients are integers
or parameter names. The claimed derivation and centroid dimensions are
kept as data to audit against, not as facts: ``None`` means the class is
absent from the claims table, ``"unreadable"`` that its row is
malformed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import PRODUCTS, SYMBOLS, Trialgebra, tensor_from_entries
from .errors import ConstraintError, PreconditionError

UNREADABLE = "unreadable"

_PRODUCT_OF = {sym: name for name, sym in SYMBOLS.items()}
_LINE = re.compile(r"e(\d+)\s*([⊣⊢⊥])\s*e(\d+)\s*=\s*(.+)")
_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([a-z]?)\s*e(\d+)")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    dim: int
    table: tuple  # (product, i, j, k, coefficient) with 1-based indices
    param_defaults: dict = field(default_factory=dict)
    nonzero_params: tuple = ()
    claimed_der_dim: int | str | None = None
    claimed_centroid_dim: int | str | None = None
    ambiguous_source: bool = False
    notes: tuple = ()

    @property
    def params(self) -> tuple:
        return tuple(self.param_defaults)

    @property
    def param_constraints(self) -> tuple:
        return tuple(f"{p} ≠ 0" for p in self.nonzero_params)

    @property
    def index(self) -> int:
        return int(self.id.rsplit("^", 1)[1])


def _parse_rhs(rhs: str):
    pos, terms = 0, []
    rhs = rhs.strip()
    while pos < len(rhs):
        m = _TERM.match(rhs, pos)
        if not m or (terms and not m.group(1)):
            raise ValueError(f"cannot parse {rhs!r}")
        sign, num, param, k = m.groups()
        coeff = (-1 if sign == "-" else 1) * (int(num) if num else 1)
        terms.append((int(k), coeff, param or None))
        pos = m.end()
        while pos < len(rhs) and rhs[pos] == " ":
            pos += 1
    return terms


def _parse_table(text: str):
    table, seen = [], {}
    for raw in text.strip().splitlines():
        m = _LINE.fullmatch(raw.strip())
        if not m:
            raise ValueError(f"bad table line {raw!r}")
        i, sym, j, rhs = m.groups()
        key = (_PRODUCT_OF[sym], int(i), int(j))
        terms = _parse_rhs(rhs)
        if key in seen:
            # identical repeated blocks collapse; conflicting ones would be a transcription bug
            if seen[key] != terms:
                raise ValueError(f"conflicting duplicate line {raw!r}")
            continue
        seen[key] = terms
        for k, coeff, param in terms:
            table.append((key[0], key[1], key[2], k, (coeff, param)))
    return tuple(table)


def _entry(id, dim, text, params=None, nonzero=(), der=None, cent=None, ambiguous=False, notes=()):
    return CatalogEntry(
        id=id,
        dim=dim,
        table=_parse_table(text),
        param_defaults={p: Fraction(1) for p in (params or ())},
        nonzero_params=tuple(nonzero),
        claimed_der_dim=der,
        claimed_centroid_dim=cent,
        ambiguous_source=ambiguous,
        notes=tuple(notes),
    )


_ENTRIES = [
    # -- dimension 2 ----------------------------------------------------------
    _entry("Trias_2^1", 2, """
        e1 ⊣ e2 = a e1
        e2 ⊣ e2 = a e2
        e2 ⊢ e1 = a e1
        e2 ⊢ e2 = a e2
        e1 ⊥ e1 = b e1
        e1 ⊥ e2 = b e1 + a e2
    """, params="ab", cent=1),
    _entry("Trias_2^2", 2, """
        e1 ⊣ e1 = e1
        e2 ⊣ e1 = e2
        e1 ⊢ e1 = e1
        e1 ⊢ e2 = e2
        e1 ⊥ e2 = e1 + a e2
        e2 ⊥ e2 = e2
    """, params="a", cent=1),
    _entry("Trias_2^3", 2, """
        e2 ⊣ e2 = e2
        e2 ⊢ e1 = e1
        e2 ⊢ e2 = e2
        e2 ⊥ e1 = e1
        e2 ⊥ e2 = e2
    """, der=1, cent=1),
    _entry("Trias_2^4", 2, """
        e1 ⊣ e2 = e1
        e2 ⊣ e2 = e2
        e2 ⊢ e2 = e1 + e2
        e2 ⊥ e2 = e1 + e2
    """, der=1, cent=1),
    _entry("Trias_2^5", 2, """
        e1 ⊣ e1 = e1
        e2 ⊢ e1 = e1
        e2 ⊢ e2 = e2
        e1 ⊥ e1 = e1
        e1 ⊥ e2 = e2
    """, cent=1),
    _entry("Trias_2^6", 2, """
        e1 ⊣ e1 = e1
        e2 ⊣ e1 = e2
        e1 ⊢ e1 = e1
        e1 ⊥ e1 = e1
    """, der=1, cent=1),
    _entry("Trias_2^7", 2, """
        e1 ⊣ e1 = e1
        e2 ⊣ e1 = e2
        e1 ⊢ e1 = e1
        e1 ⊢ e2 = e2
        e1 ⊥ e1 = e1
        e1 ⊥ e2 = e2
    """, der=1, cent=1),
    _entry("Trias_2^8", 2, """
        e1 ⊣ e1 = a e1
        e2 ⊣ e1 = a e2
        e1 ⊢ e1 = a e1
        e1 ⊢ e2 = a e2
        e1 ⊥ e1 = a e1 + b e2
    """, params="ab", nonzero="b", der=1, cent=1,
        notes=("claimed derivation entry -(a-b)/b d21 needs b ≠ 0",)),
    # -- dimension 3 ----------------------------------------------------------
    _entry("Trias_3^1", 3, """
        e1 ⊣ e2 = e3
        e2 ⊣ e1 = e3
        e2 ⊣ e3 = e3
        e1 ⊢ e2 = e3
        e2 ⊢ e2 = e3
        e1 ⊥ e1 = e3
        e1 ⊥ e2 = e3
        e2 ⊥ e2 = e3
    """, cent=1),
    _entry("Trias_3^2", 3, """
        e1 ⊣ e2 = e3
        e2 ⊣ e1 = e3
        e2 ⊣ e3 = e3
        e1 ⊢ e2 = e3
        e2 ⊢ e1 = e3
        e2 ⊢ e2 = e3
        e1 ⊥ e1 = e3
        e1 ⊥ e2 = e3
        e2 ⊥ e2 = e3
    """, cent=1),
    _entry("Trias_3^3", 3, """
        e2 ⊣ e2 = e1
        e2 ⊢ e2 = e1
        e2 ⊥ e2 = e3
        e2 ⊥ e3 = e1 + e3
    """, der=2, cent=2),
    _entry("Trias_3^4", 3, """
        e3 ⊣ e3 = e1
        e3 ⊢ e3 = e1
        e3 ⊥ e2 = e1 + e2
        e3 ⊥ e3 = e1 + e2
    """, cent=2),
    _entry("Trias_3^5", 3, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e2
    """, der=2, cent=3),
    _entry("Trias_3^6", 3, """
        e1 ⊣ e3 = e2
        e3 ⊣ e1 = e2
        e3 ⊣ e3 = e2
        e1 ⊢ e1 = e2
        e1 ⊢ e3 = e2
        e3 ⊢ e1 = e2
        e3 ⊢ e3 = e2
        e3 ⊥ e1 = e2
        e3 ⊥ e3 = e2
    """, der=1, cent=2),
    _entry("Trias_3^7", 3, """
        e1 ⊣ e1 = e2 + e3
        e1 ⊢ e1 = e2 + e3
        e1 ⊥ e1 = e2 + e3
    """, cent=1),
    _entry("Trias_3^8", 3, """
        e2 ⊣ e2 = e1
        e2 ⊣ e3 = e1
        e3 ⊣ e2 = e1
        e3 ⊣ e3 = e1
        e2 ⊢ e2 = e1
        e2 ⊢ e3 = e1
        e3 ⊢ e2 = e1
        e2 ⊥ e2 = e1
        e2 ⊥ e3 = e1
        e3 ⊥ e2 = e1
    """, der=3, cent=4),
    _entry("Trias_3^9", 3, """
        e2 ⊣ e2 = e3
        e2 ⊢ e2 = e3
        e2 ⊥ e1 = e1 + e3
        e2 ⊥ e2 = e1 + e3
    """, der=3, cent=1),
    _entry("Trias_3^10", 3, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e3
    """, der=5, cent=2),
    _entry("Trias_3^11", 3, """
        e2 ⊣ e1 = e3
        e2 ⊣ e2 = e3
        e2 ⊢ e1 = e3
        e2 ⊢ e2 = e3
        e2 ⊥ e1 = e3
        e2 ⊥ e2 = e3
    """, der=UNREADABLE, cent=5,
        notes=("claimed derivation matrix has a row with a missing column",)),
    _entry("Trias_3^12", 3, """
        e1 ⊣ e1 = e3
        e1 ⊣ e2 = e3
        e2 ⊣ e1 = e3
        e1 ⊢ e2 = e3
        e2 ⊢ e1 = e3
        e2 ⊢ e2 = e3
        e2 ⊥ e1 = e3
        e2 ⊥ e2 = e3
    """, der=3, cent=3, ambiguous=True,
        notes=(
            "trailing ⊥ block follows a ⊢ block that already ended; encoded literally",
            "centroid table row is labelled Trias_{12}^3",
        )),
    # -- dimension 4 ----------------------------------------------------------
    _entry("Trias_4^1", 4, """
        e1 ⊣ e1 = e2 + e4
        e1 ⊣ e3 = e2 + e4
        e3 ⊣ e1 = e4
        e1 ⊢ e1 = e2 + e4
        e1 ⊢ e3 = e2 + e4
        e3 ⊢ e1 = e4
        e1 ⊥ e1 = e2 + e4
        e1 ⊥ e3 = e4
        e3 ⊥ e3 = e2
    """, der=5, cent=3),
    _entry("Trias_4^2", 4, """
        e1 ⊣ e1 = e2 + e4
        e1 ⊣ e3 = e2 + e4
        e3 ⊣ e1 = e2 + e4
        e1 ⊢ e1 = e2 + e4
        e1 ⊢ e3 = e2 + e4
        e3 ⊢ e1 = e2 + e4
        e1 ⊥ e1 = e2 + e4
        e1 ⊥ e3 = e2 + e4
        e3 ⊥ e1 = e2 + e4
        e3 ⊥ e3 = e2
    """, der=2, cent=5),
    _entry("Trias_4^3", 4, """
        e1 ⊣ e1 = e2 + e4
        e1 ⊣ e3 = e2 + e4
        e3 ⊣ e1 = e2 + e4
        e1 ⊢ e1 = e2 + e4
        e1 ⊢ e3 = e2 + e4
        e3 ⊢ e1 = e2 + e4
        e1 ⊥ e1 = e2 + e4
        e1 ⊥ e3 = e2 + e4
        e3 ⊥ e3 = e4
    """, der=5, cent=5),
    _entry("Trias_4^4", 4, """
        e1 ⊣ e2 = e4
        e2 ⊣ e1 = e4
        e2 ⊣ e2 = e4
        e2 ⊢ e1 = e4
        e2 ⊢ e2 = e4
        e3 ⊢ e1 = e4
        e1 ⊥ e2 = e4
        e2 ⊥ e1 = e4
        e1 ⊥ e2 = e4
        e2 ⊥ e1 = e4
    """, der=5, cent=4,
        notes=("⊥ block printed twice; identical repeats collapsed",)),
    _entry("Trias_4^5", 4, """
        e1 ⊣ e2 = e4
        e2 ⊣ e1 = e4
        e2 ⊣ e2 = e4
        e2 ⊢ e1 = e4
        e2 ⊢ e2 = e4
        e3 ⊢ e1 = e4
        e1 ⊥ e1 = e4
        e2 ⊥ e1 = e4
        e3 ⊥ e3 = e4
    """, der=5, cent=1),
    _entry("Trias_4^6", 4, """
        e3 ⊣ e4 = e1 + e2
        e4 ⊣ e3 = e1 + e2
        e4 ⊣ e4 = e1 + e2
        e3 ⊢ e4 = e1 + e2
        e4 ⊢ e3 = e1 + e2
        e4 ⊢ e4 = e1 + e2
        e3 ⊥ e4 = e1 + e2
        e4 ⊥ e3 = e1 + e2
        e4 ⊥ e4 = e1 + e2
    """, der=5, cent=7),
    _entry("Trias_4^7", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
    """, der=2, cent=6),
    _entry("Trias_4^8", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e4 ⊣ e4 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e4 = e1 + e3
    """, der=6, cent=7),
    _entry("Trias_4^9", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e4 ⊣ e4 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e4 ⊢ e4 = e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
        e4 ⊥ e4 = e1
    """, der=5, cent=6),
    _entry("Trias_4^10", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e4 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e4 ⊢ e4 = e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
        e4 ⊥ e4 = e1
    """, der=5, cent=5),
    _entry("Trias_4^11", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
    """, der=5, cent=5),
    _entry("Trias_4^12", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e4 ⊣ e4 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
    """, der=5, cent=5),
    _entry("Trias_4^13", 4, """
        e2 ⊣ e1 = e4
        e2 ⊣ e2 = e4
        e3 ⊣ e3 = e4
        e1 ⊢ e3 = e4
        e2 ⊢ e2 = e4
        e3 ⊢ e1 = e4
        e1 ⊥ e1 = e4
        e1 ⊥ e3 = e4
        e3 ⊥ e3 = e4
    """, der=4, cent=4),
    _entry("Trias_4^14", 4, """
        e2 ⊣ e2 = e1 + e3
        e2 ⊣ e4 = e1 + e3
        e4 ⊣ e2 = e1 + e3
        e4 ⊣ e4 = e1 + e3
        e2 ⊢ e2 = e1 + e3
        e2 ⊢ e4 = e1 + e3
        e4 ⊢ e2 = e1 + e3
        e4 ⊢ e4 = e3
        e2 ⊥ e2 = e1 + e3
        e2 ⊥ e4 = e1 + e3
        e4 ⊥ e2 = e1 + e3
        e4 ⊥ e4 = e1
    """, der=4, cent=5),
    _entry("Trias_4^15", 4, """
        e2 ⊣ e1 = e3
        e2 ⊣ e2 = e3
        e4 ⊣ e1 = e3
        e4 ⊣ e2 = e3
        e1 ⊢ e1 = e3
        e1 ⊢ e4 = e3
        e2 ⊢ e1 = e3
        e2 ⊢ e4 = e3
        e2 ⊥ e1 = e3
        e2 ⊥ e2 = e3
        e4 ⊥ e1 = e3
        e4 ⊥ e4 = e3
    """, der=4, cent=1),
    _entry("Trias_4^16", 4, """
        e1 ⊣ e1 = e2 + e4
        e3 ⊣ e1 = e2 + e4
        e3 ⊣ e3 = e2 + e4
        e1 ⊢ e1 = e2 + e4
        e1 ⊢ e3 = e2 + e4
        e3 ⊢ e1 = e2 + e4
        e3 ⊢ e3 = e4
        e1 ⊥ e1 = e2
        e1 ⊥ e3 = e4
        e3 ⊥ e1 = e2
        e3 ⊥ e3 = e2 + e4
    """, der=5, cent=5),
]

CATALOG = {e.id: e for e in _ENTRIES}


def list_entries() -> list:
    """All entries ordered by dimension, then class index."""
    return sorted(CATALOG.values(), key=lambda e: (e.dim, e.index))


def get_entry(id: str) -> CatalogEntry:
    try:
        return CATALOG[id]
    except KeyError:
        raise PreconditionError(f"unknown catalog entry {id!r}") from None


def instantiate(id: str, params: dict | None = None) -> Trialgebra:
    """Concrete algebra for ``id``; ``params`` defaults to every parameter = 1.

    When ``params`` is given it must bind exactly the entry's parameters.
    """
    entry = get_entry(id)
    if params is None:
        values = dict(entry.param_defaults)
    else:
        values = {k: Fraction(v) for k, v in params.items()}
        missing = [p for p in entry.params if p not in values]
        extra = [p for p in values if p not in entry.params]
        if missing:
            raise PreconditionError(f"{id}: missing parameter(s) {', '.join(missing)}")
        if extra:
            raise PreconditionError(f"{id}: unknown parameter(s) {', '.join(extra)}")
    for p in entry.nonzero_params:
        if values[p] == 0:
            raise ConstraintError(f"{id}: constraint {p} ≠ 0 violated")
    entries = {p: {} for p in PRODUCTS}
    for product, i, j, k, (coeff, param) in entry.table:
        value = Fraction(coeff) * (values[param] if param else 1)
        key = (i - 1, j - 1, k - 1)
        entries[product][key] = entries[product].get(key, 0) + value
    tensors = {p: tensor_from_entries(entry.dim, entries[p]) for p in PRODUCTS}
    ordered = {p: values[p] for p in entry.params}
    return Trialgebra(entry.dim, tensors["left"], tensors["right"], tensors["middle"], name=id, params=ordered)


def format_entry(entry: CatalogEntry) -> list:
    """The table back in the classification notation, one line per basis product."""
    lines = {}
    for product, i, j, k, (coeff, param) in entry.table:
        scalar = ("-" if coeff < 0 else "") + ("" if abs(coeff) == 1 else str(abs(coeff)))
        term = f"{scalar}{param + ' ' if param else ''}e{k}"
        lines.setdefault((product, i, j), []).append(term)
    out = []
    for (product, i, j), terms in lines.items():
        rhs = terms[0] + "".join(f" - {t[1:]}" if t.startswith("-") else f" + {t}" for t in terms[1:])
        out.append(f"e{i} {SYMBOLS[product]} e{j} = {rhs}")
    return out
