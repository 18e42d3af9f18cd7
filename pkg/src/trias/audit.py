"""Compare computed invariants of every catalog entry with the claimed dimensions."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import check_trialgebra, is_associative, star_product
from .catalog import UNREADABLE, get_entry, instantiate, list_entries
from .centroids import centroid_dimensions
from .fingerprint import fingerprint
from .linalg import format_rational

REPORT_VERSION = 1


def _match(computed: int, claimed):
    if claimed is None or claimed == UNREADABLE:
        return None
    return computed == claimed


def audit_entry(id: str, params: dict | None = None) -> dict:
    entry = get_entry(id)
    values = dict(entry.param_defaults)
    values.update({k: Fraction(v) for k, v in (params or {}).items()})
    t = instantiate(id, values)
    report = check_trialgebra(t)
    fp = fingerprint(t)
    cents = centroid_dimensions(t)
    return {
        "id": id,
        "dim": entry.dim,
        "params": {k: format_rational(v) for k, v in t.params.items()},
        "axiom_pass": report.ok,
        "violated_axioms": report.violated_axioms,
        "axiom_witnesses": {a: list(report.first_witness(a).triple) for a in report.violated_axioms},
        "star_associative": is_associative(star_product(t)),
        "computed_der_dim": fp.dim_der,
        "claimed_der_dim": entry.claimed_der_dim,
        "der_match": _match(fp.dim_der, entry.claimed_der_dim),
        "computed_centroid_dim": fp.dim_centroid,
        "centroid_dims_by_product": {p: cents[p] for p in ("left", "right", "middle")},
        "claimed_centroid_dim": entry.claimed_centroid_dim,
        "centroid_match": _match(fp.dim_centroid, entry.claimed_centroid_dim),
        "fingerprint": fp.as_dict(),
        "ambiguous_source": entry.ambiguous_source,
        "notes": list(entry.notes),
    }


def _tally(records, field):
    match = field + "_match"
    claimed = "claimed_" + field + "_dim"
    return {
        "match": sum(r[match] is True for r in records),
        "mismatch": sum(r[match] is False for r in records),
        "unreadable": sum(r[claimed] == UNREADABLE for r in records),
        "unclaimed": sum(r[claimed] is None for r in records),
    }


def _identical_tables(overrides):
    groups = {}
    for e in list_entries():
        t = instantiate(e.id, {**e.param_defaults, **overrides.get(e.id, {})})
        groups.setdefault((t.left, t.right, t.middle), []).append(e.id)
    return [ids for ids in groups.values() if len(ids) > 1]


def run_audit(params_override: dict | None = None, jobs: int = 1) -> dict:
    """Audit all entries; ``params_override`` maps entry id to parameter values."""
    overrides = params_override or {}
    for id in overrides:
        get_entry(id)  # reject unknown ids before doing any work
    ids = [e.id for e in list_entries()]
    args = [overrides.get(i) for i in ids]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(audit_entry, ids, args))
    else:
        records = [audit_entry(i, a) for i, a in zip(ids, args)]

    by_dim = {}
    for r in records:
        d = by_dim.setdefault(str(r["dim"]), {"entries": 0, "der_dims": [], "centroid_dims": []})
        d["entries"] += 1
        d["der_dims"].append(r["computed_der_dim"])
        d["centroid_dims"].append(r["computed_centroid_dim"])
    for d in by_dim.values():
        ders, cents = d.pop("der_dims"), d.pop("centroid_dims")
        d["der_dim_range"] = [min(ders), max(ders)]
        d["centroid_dim_range"] = [min(cents), max(cents)]

    summary = {
        "total": len(records),
        "by_dim": by_dim,
        "axiom_pass": sum(r["axiom_pass"] for r in records),
        "axiom_fail": sum(not r["axiom_pass"] for r in records),
        "der": _tally(records, "der"),
        "centroid": _tally(records, "centroid"),
        "ambiguous_source": [r["id"] for r in records if r["ambiguous_source"]],
        "identical_tables": _identical_tables(overrides),
    }
    return {"version": REPORT_VERSION, "entries": records, "summary": summary}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _flag(v):
    return {True: "yes", False: "NO", None: "-"}[v]


def render_table(report: dict) -> str:
    head = f"{'entry':<12} {'axioms':<14} {'Der':>3} {'claim':>10} {'ok':>3} {'Γ':>3} {'claim':>10} {'ok':>3}"
    lines = [head, "-" * len(head)]
    for r in report["entries"]:
        ax = "pass" if r["axiom_pass"] else "fail " + ",".join(r["violated_axioms"])
        if len(ax) > 14:
            ax = ax[:13] + "…"
        cd = "-" if r["claimed_der_dim"] is None else str(r["claimed_der_dim"])
        cc = "-" if r["claimed_centroid_dim"] is None else str(r["claimed_centroid_dim"])
        lines.append(
            f"{r['id']:<12} {ax:<14} {r['computed_der_dim']:>3} {cd:>10} {_flag(r['der_match']):>3} "
            f"{r['computed_centroid_dim']:>3} {cc:>10} {_flag(r['centroid_match']):>3}"
        )
    s = report["summary"]
    lines.append("")
    lines.append(
        f"{s['total']} entries, {s['axiom_pass']} pass all axioms; "
        f"Der matches {s['der']['match']}, mismatches {s['der']['mismatch']}; "
        f"Γ matches {s['centroid']['match']}, mismatches {s['centroid']['mismatch']}"
    )
    for group in s["identical_tables"]:
        lines.append("identical tables: " + ", ".join(group))
    return "\n".join(lines) + "\n"
