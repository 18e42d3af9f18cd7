"""Command-line interface.

Exit codes: 0 success (an algebra failing its axioms is still a success),
1 usage error, 2 parse error, 3 precondition or constraint error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import audit as audit_mod
from . import catalog, linalg, textio
from .algebra import (
    PRODUCTS,
    SYMBOLS,
    TRIALGEBRA_AXIOMS,
    DIALGEBRA_AXIOMS,
    Trialgebra,
    associativity_failure,
    centralizer,
    check_dialgebra,
    check_homomorphism,
    check_trialgebra,
    endo_basis,
    star_product,
)
from .centroids import centroid_basis, product_centroid
from .derivations import derivation_basis
from .errors import DimensionError, ParseError, PreconditionError
from .fingerprint import fingerprint
from .rota_baxter import (
    RotaBaxterCandidate,
    double_product,
    grid_search_rota_baxter,
    induced_product_weight0,
    induced_product_weight_minus1,
    is_rota_baxter,
    left_symmetry_failure,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _rational_arg(text):
    try:
        return linalg.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _q(x) -> str:
    return linalg.format_rational(x)


def _mat_json(m):
    return [[_q(x) for x in row] for row in m]


def _mat_text(m, indent="  "):
    cells = [[_q(x) for x in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(indent + "[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def _emit(args, payload: dict, text: str):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _params(pairs) -> dict:
    out = {}
    for item in pairs or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"expected name=value, got {item!r}")
        try:
            out[name] = linalg.parse_rational(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _entry_params(pairs) -> dict:
    out = {}
    for item in pairs or ():
        id, sep, rest = item.partition(":")
        if not sep:
            raise UsageError(f"expected <id>:<name>=<value>, got {item!r}")
        out.setdefault(id, {}).update(_params([rest]))
    return out


def _read_trias(path) -> Trialgebra:
    try:
        return textio.read_trias(path)
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), str(path)) from None


def _read_mat(path):
    try:
        return textio.read_mat(path)
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), str(path)) from None


# -- subcommands ------------------------------------------------------------


def cmd_verify(args):
    t = _read_trias(args.file)
    axioms = DIALGEBRA_AXIOMS if args.dialgebra else TRIALGEBRA_AXIOMS
    report = check_dialgebra(t) if args.dialgebra else check_trialgebra(t)
    failed = report.violated_axioms
    holding = len(axioms) - len(failed)
    lines = [f"{holding}/{len(axioms)} axioms hold"]
    for v in report.violations:
        i, j, k = v.triple
        lines.append(
            f"  {v.axiom} fails at (e{i},e{j},e{k}): lhs = {textio.format_vector(v.lhs)}, rhs = {textio.format_vector(v.rhs)}"
        )
    payload = {
        "name": t.name,
        "checked": list(report.checked),
        "ok": report.ok,
        "violated_axioms": failed,
        "violations": [
            {"axiom": v.axiom, "triple": list(v.triple), "lhs": [_q(x) for x in v.lhs], "rhs": [_q(x) for x in v.rhs]}
            for v in report.violations
        ],
    }
    _emit(args, payload, "\n".join(lines))


def cmd_der(args):
    t = _read_trias(args.file)
    der = derivation_basis(t)
    basis = endo_basis(der, t.dim)
    text = [f"dim Der = {der.dim}"] + [f"d{i + 1} =\n{_mat_text(m)}" for i, m in enumerate(basis)]
    _emit(args, {"name": t.name, "dim_der": der.dim, "basis": [_mat_json(m) for m in basis]}, "\n".join(text))


def cmd_cent(args):
    t = _read_trias(args.file)
    dims = {p: product_centroid(t, p).dim for p in PRODUCTS}
    gamma = centroid_basis(t)
    basis = endo_basis(gamma, t.dim)
    text = [f"dim Γ^{SYMBOLS[p]} = {dims[p]}" for p in PRODUCTS]
    text.append(f"dim Γ = {gamma.dim}")
    text += [f"c{i + 1} =\n{_mat_text(m)}" for i, m in enumerate(basis)]
    payload = {
        "name": t.name,
        "dims": {**dims, "all": gamma.dim},
        "basis": [_mat_json(m) for m in basis],
    }
    _emit(args, payload, "\n".join(text))


def cmd_centralizer(args):
    t = _read_trias(args.file)
    subset = None
    if args.vector:
        try:
            subset = [[linalg.parse_rational(x) for x in v.split()] for v in args.vector]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    z = centralizer(t, subset)
    text = [f"dim Z = {z.dim}"] + [f"  {textio.format_vector(v)}" for v in z.basis]
    _emit(args, {"name": t.name, "dim": z.dim, "basis": [[_q(x) for x in v] for v in z.basis]}, "\n".join(text))


def _tensor_lines(c, symbol="∗"):
    n = len(c)
    return [
        f"  e{i + 1} {symbol} e{j + 1} = {textio.format_vector(c[i][j])}"
        for i in range(n)
        for j in range(n)
        if any(c[i][j])
    ]


def _tensor_json(c):
    return [[[_q(x) for x in row] for row in plane] for plane in c]


def cmd_star(args):
    t = _read_trias(args.file)
    s = star_product(t)
    failure = associativity_failure(s)
    text = ["star product x∗y = x⊣y + x⊢y - x⊥y:", *_tensor_lines(s)]
    text.append("associative: yes" if failure is None else f"associative: no (fails at e{failure[0]},e{failure[1]},e{failure[2]})")
    payload = {"name": t.name, "tensor": _tensor_json(s), "associative": failure is None,
               "witness": list(failure) if failure else None}
    _emit(args, payload, "\n".join(text))


def _yes(flag) -> str:
    return "yes" if flag else "no"


def cmd_rb_check(args):
    t = _read_trias(args.file)
    R = _read_mat(args.matrix)
    cand = RotaBaxterCandidate(t, R, args.weight)
    verdict = is_rota_baxter(cand)
    payload = {"name": t.name, "weight": _q(args.weight), "rota_baxter": verdict.ok,
               "witness": list(verdict.witness) if verdict.witness else None}
    line = f"Rota–Baxter: {_yes(verdict.ok)}"
    if cand.weight == 0:
        failure = left_symmetry_failure(induced_product_weight0(cand))
        payload["left_symmetric"] = failure is None
        line += f"; induced product left-symmetric: {_yes(failure is None)}"
    elif cand.weight == -1:
        paper = associativity_failure(induced_product_weight_minus1(cand, "paper")) is None
        standard = associativity_failure(induced_product_weight_minus1(cand, "standard")) is None
        payload["formula"] = args.formula
        payload["associative"] = {"paper": paper, "standard": standard}
        chosen = paper if args.formula == "paper" else standard
        line += f"; induced product associative: {_yes(chosen)}"
    else:
        ok = associativity_failure(double_product(cand)) is None
        payload["associative"] = {"standard": ok}
        line += f"; double product associative: {_yes(ok)}"
    if verdict.witness:
        line += f"\n  identity fails at (e{verdict.witness[0]},e{verdict.witness[1]})"
    _emit(args, payload, line)


def cmd_rb_search(args):
    t = _read_trias(args.file)
    try:
        values = [linalg.parse_rational(v) for v in args.entries.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = grid_search_rota_baxter(t, args.weight, values, args.limit)
    text = [f"{len(result.operators)} Rota–Baxter operators of weight {_q(args.weight)} "
            f"({result.examined}/{result.total} candidates examined)"]
    if not result.complete:
        text.append("search aborted at the limit; results are partial")
    text += [_mat_text(R) + "\n" for R in result.operators]
    payload = {"name": t.name, "weight": _q(args.weight), "complete": result.complete,
               "examined": result.examined, "total": result.total,
               "operators": [_mat_json(R) for R in result.operators]}
    _emit(args, payload, "\n".join(text))


def cmd_hom_check(args):
    src, dst = _read_trias(args.src), _read_trias(args.dst)
    f = _read_mat(args.matrix)
    verdict = check_homomorphism(src, dst, f)
    text = f"homomorphism: {_yes(verdict.ok)}"
    if verdict.witness:
        p, i, j = verdict.witness
        text += f"\n  fails for e{i} {SYMBOLS[p]} e{j}"
    payload = {"homomorphism": verdict.ok, "witness": list(verdict.witness) if verdict.witness else None}
    _emit(args, payload, text)


def cmd_fingerprint(args):
    t = _read_trias(args.file)
    fp = fingerprint(t).as_dict()
    text = "\n".join(f"{k}: {v}" for k, v in fp.items())
    _emit(args, {"name": t.name, **fp}, text)


def cmd_catalog(args):
    if args.action == "list":
        entries = catalog.list_entries()
        rows = [{"id": e.id, "dim": e.dim, "params": list(e.params), "constraints": list(e.param_constraints),
                 "ambiguous_source": e.ambiguous_source} for e in entries]
        text = [f"{e.id:<12} dim {e.dim}" + (f"  params {','.join(e.params)}" if e.params else "")
                + ("  [ambiguous source]" if e.ambiguous_source else "") for e in entries]
        text.append(f"{len(entries)} entries")
        _emit(args, {"entries": rows, "count": len(rows)}, "\n".join(text))
    elif args.action == "show":
        if len(args.target) != 1:
            raise UsageError("catalog show takes exactly one entry id")
        entry = catalog.get_entry(args.target[0])
        t = catalog.instantiate(entry.id, {**entry.param_defaults, **_params(args.param)})
        text = [f"{entry.id} (dim {entry.dim})", *("  " + line for line in catalog.format_entry(entry))]
        if t.params:
            text.append("instantiated at " + ", ".join(f"{k}={_q(v)}" for k, v in t.params.items()))
        text += [f"note: {n}" for n in entry.notes]
        payload = {"id": entry.id, "dim": entry.dim, "table": catalog.format_entry(entry),
                   "params": {k: _q(v) for k, v in t.params.items()}, "trias": textio.format_trias(t),
                   "claimed_der_dim": entry.claimed_der_dim, "claimed_centroid_dim": entry.claimed_centroid_dim,
                   "ambiguous_source": entry.ambiguous_source, "notes": list(entry.notes)}
        _emit(args, payload, "\n".join(text))
    else:
        if len(args.target) != 1:
            raise UsageError("catalog export takes exactly one directory")
        out = Path(args.target[0])
        out.mkdir(parents=True, exist_ok=True)
        overrides = _entry_params(args.param)
        written = []
        for entry in catalog.list_entries():
            t = catalog.instantiate(entry.id, {**entry.param_defaults, **overrides.get(entry.id, {})})
            path = out / f"{entry.id}.trias"
            path.write_text(textio.format_trias(t), encoding="utf-8")
            written.append(str(path))
        _emit(args, {"written": written}, f"wrote {len(written)} files to {out}")


def cmd_audit(args):
    report = audit_mod.run_audit(_entry_params(args.param), jobs=args.jobs)
    blob = audit_mod.dumps(report)
    if args.out:
        Path(args.out).write_bytes(blob.encode("utf-8"))
    if args.json:
        # raw bytes so the output is identical on every platform
        out = getattr(sys.stdout, "buffer", None)
        if out is None:
            sys.stdout.write(blob)
        else:
            sys.stdout.flush()
            out.write(blob.encode("utf-8"))
            out.flush()
    else:
        sys.stdout.write(audit_mod.render_table(report))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="trias", description="Exact computations on finite-dimensional trialgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="check the trialgebra axioms")
    s.add_argument("file")
    s.add_argument("--dialgebra", action="store_true", help="check only the five dialgebra axioms")
    s.set_defaults(func=cmd_verify)

    for name, func, help in [
        ("der", cmd_der, "derivation algebra"),
        ("cent", cmd_cent, "centroids"),
        ("star", cmd_star, "induced associative product"),
        ("fingerprint", cmd_fingerprint, "isomorphism invariants"),
    ]:
        s = sub.add_parser(name, parents=[common], help=help)
        s.add_argument("file")
        s.set_defaults(func=func)

    s = sub.add_parser("centralizer", parents=[common], help="centralizer of a subset (default: the whole algebra)")
    s.add_argument("file")
    s.add_argument("--vector", action="append", help="whitespace-separated coordinates of a subset element")
    s.set_defaults(func=cmd_centralizer)

    s = sub.add_parser("rb-check", parents=[common], help="check a Rota–Baxter operator")
    s.add_argument("file")
    s.add_argument("--matrix", required=True)
    s.add_argument("--weight", type=_rational_arg, required=True)
    s.add_argument("--formula", choices=("paper", "standard"), default="paper")
    s.set_defaults(func=cmd_rb_check)

    s = sub.add_parser("rb-search", parents=[common], help="grid search for Rota–Baxter operators")
    s.add_argument("file")
    s.add_argument("--weight", type=_rational_arg, required=True)
    s.add_argument("--entries", default="-1,0,1", help="comma-separated candidate entries")
    s.add_argument("--limit", type=int, default=100_000)
    s.set_defaults(func=cmd_rb_search)

    s = sub.add_parser("hom-check", parents=[common], help="check a homomorphism src -> dst")
    s.add_argument("src")
    s.add_argument("dst")
    s.add_argument("--matrix", required=True)
    s.set_defaults(func=cmd_hom_check)

    s = sub.add_parser("catalog", parents=[common], help="list, show or export the classification")
    s.add_argument("action", choices=("list", "show", "export"))
    s.add_argument("target", nargs="*")
    s.add_argument("--param", action="append", help="name=value for show, id:name=value for export")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("audit", parents=[common], help="compare computed invariants with the claimed dimensions")
    s.add_argument("--param", action="append", help="override a parameter, e.g. Trias_2^1:a=2")
    s.add_argument("--out", help="also write the JSON report to this path")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
