"""Command-line front end.

Exit codes: 0 when everything checked holds, 1 when a property fails (the
counterexample is printed), 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import constructions as con
from . import enumeration as enum
from . import io
from .brace import WeakBrace, axiom_report, make_weak_brace, structural_report
from .errors import (
    AlgebraError,
    CarrierTooLarge,
    MalformedDocument,
    MalformedTable,
    OrderMismatch,
    OrderTooLarge,
    SystemViolation,
    UnsupportedKind,
)
from .factorization import (
    DEFAULT_FACTOR_CAP,
    bullet_brace,
    circ_brace,
    find_exact_factorizations,
    map_cycles,
    sym3_showcase,
)
from .report import Report
from .semigroup import InverseSemigroupView, clifford_counterexample, predicates
from .solutions import (
    DEFAULT_EQUIVALENCE_CAP,
    PairMap,
    are_equivalent,
    bijection_count,
    check_braid,
    check_componentwise,
    classify,
    closed_form_power,
    op_solution,
    power,
    regularity_report,
    solution_of,
)

OK, FAILS, USAGE = 0, 1, 2
_USAGE_ERRORS = (MalformedDocument, MalformedTable, UnsupportedKind, OrderTooLarge,
                 CarrierTooLarge, OrderMismatch)


class Output:
    """Collects text lines or a JSON object depending on ``--json``."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def text(self, line: str = ""):
        self.lines.append(line)

    def put(self, key: str, value):
        self.data[key] = value

    def report(self, rep: Report):
        self.data.setdefault("reports", []).append(rep.to_dict())
        self.lines.append(rep.format_text())

    def flush(self):
        if self.as_json and self.data:
            print(json.dumps(self.data, indent=2))
        elif self.lines:
            print("\n".join(self.lines))


def _labels_of(n: int, labels) -> list[str]:
    return list(labels) if labels else [str(i) for i in range(n)]


def _fmt_pair(labels, pair) -> str:
    return f"({labels[pair[0]]}, {labels[pair[1]]})"


def _load_brace(path: str) -> WeakBrace:
    doc = io.load(path)
    return io.to_weak_brace(doc)


def _load_solution(path: str) -> tuple[PairMap, list[str]]:
    """A pair map document, or the solution of a weak-brace document."""
    doc = io.load(path)
    if doc.kind == "pair-map":
        pm = io.to_pair_map(doc)
        return pm, _labels_of(pm.order, None)
    if doc.kind == "weak-brace":
        wb = io.to_weak_brace(doc)
        return solution_of(wb), _labels_of(wb.order, wb.labels)
    raise MalformedDocument(f"expected a pair-map or weak-brace document, got {doc.kind}")


def _emit_doc(obj, out: Output):
    doc = io.to_document(obj)
    if out.as_json:
        out.put("document", io.emit(doc))
    else:
        out.text(io.dumps(doc, pretty=True))


# -- verify -----------------------------------------------------------------

def _verify_semigroup(doc: io.Document, out: Output) -> int:
    t = io.to_table(doc)
    rep = Report("inverse semigroup")
    try:
        v = InverseSemigroupView(t)
    except AlgebraError as exc:
        rep.add(type(exc).__name__, False, exc.witness)
        out.report(rep)
        return FAILS
    rep.add("associative", True)
    rep.add("unique inverses", True)
    out.report(rep)
    p = predicates(v)
    cliff = clifford_counterexample(v)
    info = {"isGroup": p.is_group, "unit": p.unit, "isCommutative": p.is_commutative,
            "isBand": p.is_band, "isClifford": cliff is None,
            "cliffordCounterexample": list(cliff) if cliff else None,
            "idempotents": list(v.idempotents), "inverses": list(v.inv)}
    out.put("properties", info)
    out.text("properties: " + ", ".join(f"{k}={v}" for k, v in info.items()))
    return OK


def _brace_reports(wb: WeakBrace) -> list[Report]:
    sr = structural_report(wb)
    braid = Report("solution")
    bad = check_braid(solution_of(wb))
    braid.add("braid relation", bad is None, bad)
    op_solution(wb)  # raises on disagreement with the opposite brace
    braid.add("r^op formula = solution of the opposite brace", True)
    return [sr.checks, check_componentwise(wb), braid, regularity_report(wb)]


def _verify_brace(doc: io.Document, out: Output) -> int:
    add, mul = io.brace_tables(doc)
    axioms = axiom_report(add, mul)
    out.report(axioms)
    if not axioms.ok:
        return FAILS
    wb = make_weak_brace(add, mul)
    reps = _brace_reports(wb)
    for rep in reps:
        out.report(rep)
    out.put("flags", structural_report(wb).flags.to_dict())
    return OK if all(r.ok for r in reps) else FAILS


def _verify_pair_map(doc: io.Document, out: Output) -> int:
    pm = io.to_pair_map(doc)
    rep = Report("pair map")
    bad = check_braid(pm)
    rep.add("braid relation", bad is None, bad)
    out.report(rep)
    return OK if rep.ok else FAILS


def _verify_system(doc: io.Document, out: Output, cap: int) -> int:
    rep = Report(f"{doc.kind}")
    try:
        sys_ = io.to_system(doc, cap)
    except SystemViolation as exc:
        rep.add(exc.condition, False, exc.witness)
        out.report(rep)
        out.text(str(exc))
        return FAILS
    rep.add("system conditions", True)
    out.report(rep)
    if isinstance(sys_, con.MatchedSystem):
        wb, check = con.matched_product(sys_), con.matched_solution_check(sys_)
    else:
        wb, check = con.double_semidirect(sys_), con.double_solution_check(sys_)
    out.report(check)
    reps = _brace_reports(wb)
    for r in reps:
        out.report(r)
    return OK if check.ok and all(r.ok for r in reps) else FAILS


def cmd_verify(args, out: Output) -> int:
    doc = io.load(args.file)
    if doc.kind == "semigroup":
        return _verify_semigroup(doc, out)
    if doc.kind == "weak-brace":
        return _verify_brace(doc, out)
    if doc.kind == "pair-map":
        return _verify_pair_map(doc, out)
    return _verify_system(doc, out, args.cap)


# -- solutions --------------------------------------------------------------

def cmd_solve(args, out: Output) -> int:
    wb = _load_brace(args.file)
    pm = op_solution(wb) if args.op else solution_of(wb)
    _emit_doc(pm, out)
    return OK


def _braid_check(pm: PairMap, labels, out: Output) -> int:
    rep = Report("braid relation")
    bad = check_braid(pm)
    rep.add("(r x id)(id x r)(r x id) = (id x r)(r x id)(id x r)", bad is None, bad)
    out.report(rep)
    if bad is not None:
        out.put("counterexample", list(bad))
        out.text("counterexample: (" + ", ".join(labels[i] for i in bad) + ")")
    return OK if bad is None else FAILS


def cmd_ybe_check(args, out: Output) -> int:
    pm, labels = _load_solution(args.file)
    return _braid_check(pm, labels, out)


YBE_ACTIONS = {"check": 1, "classify": 1, "equiv": 2, "power": 1}


def cmd_ybe(args, out: Output) -> int:
    """``ybe FILE`` checks the braid relation; other actions are named first."""
    rest = list(args.rest)
    action = rest.pop(0) if rest[0] in YBE_ACTIONS else "check"
    handlers = {"check": cmd_ybe_check, "classify": cmd_classify, "equiv": cmd_equiv, "power": cmd_power}
    need = YBE_ACTIONS[action]
    if len(rest) != need:
        raise MalformedDocument(f"ybe {action} takes {need} file argument(s), got {len(rest)}")
    if action == "power" and args.k is None:
        raise MalformedDocument("ybe power needs --k K")
    if action == "equiv":
        args.first, args.second = rest
    else:
        args.file = rest[0]
    return handlers[action](args, out)


def cmd_classify(args, out: Output) -> int:
    doc = io.load(args.file)
    partner = None
    if doc.kind == "weak-brace":
        wb = io.to_weak_brace(doc)
        pm, partner = solution_of(wb), op_solution(wb)
        flags = structural_report(wb).flags.to_dict()
        out.put("structure", flags)
        out.text("structure: " + ", ".join(f"{k}={v}" for k, v in flags.items()))
    elif doc.kind == "pair-map":
        pm = io.to_pair_map(doc)
    else:
        raise MalformedDocument(f"cannot classify a {doc.kind} document")
    prof = classify(pm, partner).to_dict()
    out.put("profile", prof)
    out.text("solution: " + ", ".join(f"{k}={v}" for k, v in prof.items()))
    return OK


def cmd_equiv(args, out: Output) -> int:
    p, labels = _load_solution(args.first)
    q, _ = _load_solution(args.second)
    if p.order != q.order:
        out.put("equivalent", False)
        out.text(f"no equivalence: orders {p.order} and {q.order} differ")
        return FAILS
    f = are_equivalent(p, q, max_order=args.max_order or DEFAULT_EQUIVALENCE_CAP)
    out.put("equivalent", f is not None)
    out.put("bijection", list(f) if f is not None else None)
    if f is None:
        out.text(f"no equivalence among {bijection_count(p.order)} bijections")
        return FAILS
    out.text("equivalence: " + ", ".join(f"{labels[a]}->{labels[b]}" for a, b in enumerate(f)))
    return OK


def cmd_power(args, out: Output) -> int:
    doc = io.load(args.file)
    if doc.kind == "weak-brace":
        wb = io.to_weak_brace(doc)
        r = solution_of(wb)
        rk = power(r, args.k)
        if args.k >= 1:
            closed = closed_form_power(wb, args.k)
            rep = Report(f"power k={args.k}")
            bad = np.flatnonzero(closed.forward != rk.forward)
            rep.add("closed form = iterated composition", len(bad) == 0,
                    divmod(int(bad[0]), wb.order) if len(bad) else None)
            out.report(rep)
            if not rep.ok:
                return FAILS
    elif doc.kind == "pair-map":
        rk = power(io.to_pair_map(doc), args.k)
    else:
        raise MalformedDocument(f"cannot take powers of a {doc.kind} document")
    _emit_doc(rk, out)
    return OK


# -- constructions ----------------------------------------------------------

def _json_arg(value: str):
    path = Path(value)
    text = path.read_text() if path.exists() else value
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"--hom is neither a JSON file nor JSON text: {exc}") from exc


def cmd_construct(args, out: Output) -> int:
    what = args.what
    try:
        if what in ("trivial", "almost-trivial"):
            t = io.to_table(io.load(args.files[0]))
            wb = con.trivial_wb(t) if what == "trivial" else con.almost_trivial_wb(t)
        elif what == "product":
            if len(args.files) != 2:
                raise MalformedDocument("product needs two semigroup files S and T")
            if args.kind is None:
                raise MalformedDocument("product needs --kind 1|2|3")
            S, T = (io.to_table(io.load(f)) for f in args.files)
            hom = _json_arg(args.hom) if args.hom else None
            wb = con.example_products(args.kind, S, T, hom)
        else:
            doc = io.load(args.files[0])
            if what == "semidirect" and doc.kind == "matched-system":
                doc = io.Document(doc.kind, {k: v for k, v in doc.payload.items() if k != "beta"})
            expected = "double-system" if what == "double" else "matched-system"
            if doc.kind != expected:
                raise MalformedDocument(f"{what} needs a {expected} document, got {doc.kind}")
            sys_ = io.to_system(doc, args.cap)
            wb = con.double_semidirect(sys_) if what == "double" else con.matched_product(sys_)
    except SystemViolation as exc:
        out.put("violation", {"condition": exc.condition, "witness": list(exc.witness or ())})
        out.text(f"violation of {exc.condition}: {exc}")
        return FAILS
    _emit_doc(wb, out)
    return OK


def cmd_factorize(args, out: Output) -> int:
    t = io.to_table(io.load(args.file))
    v = InverseSemigroupView(t)
    facts = find_exact_factorizations(v, cap=args.max_order or DEFAULT_FACTOR_CAP)
    for i, f in enumerate(facts):
        print(f"[{i}] {f.describe()}", file=sys.stderr)
    if not facts:
        out.text("no exact factorization")
        return FAILS
    if not 0 <= args.pick < len(facts):
        raise MalformedDocument(f"--pick must lie in 0..{len(facts) - 1}")
    f = facts[args.pick]
    wb = circ_brace(f) if args.variant == "circ" else bullet_brace(f)
    _emit_doc(wb, out)
    return OK


# -- enumeration ------------------------------------------------------------

def _labeled_structures(reps, kind: str) -> list:
    """Every distinct relabeling of each representative."""
    out = []
    for rep in reps:
        n = rep.order
        seen = set()
        P, _ = enum._perm_arrays(n)
        for p in P:
            obj = rep.relabel(p)
            key = (obj.A.tobytes() + obj.M.tobytes()) if kind == "weak-brace" else obj.table.tobytes()
            if key not in seen:
                seen.add(key)
                out.append(obj)
    return out


def cmd_enumerate(args, out: Output) -> int:
    cap = args.max_order or enum.DEFAULT_ENUMERATION_CAP
    if args.kind == "inverse-semigroup":
        census = enum.inverse_semigroup_census(args.order, cap)
    else:
        census = enum.weak_brace_census(args.order, cap=cap)
    items = list(census.structures)
    if args.labeled:
        items = _labeled_structures(items, args.kind)
    docs = [io.emit(io.to_document(x)) for x in items]
    if out.as_json:
        print(json.dumps(docs))
        print(census.summary(), file=sys.stderr)
    else:
        for d in docs:
            print(json.dumps(d, separators=(",", ":")))
        print(census.summary())
    return OK


# -- demos ------------------------------------------------------------------

def _demo_trivial(out: Output) -> int:
    from .fixtures import chain2
    from .semigroup import cyclic

    status = OK
    for name, t in (("C2", cyclic(2)), ("2-chain", chain2())):
        wb = con.trivial_wb(t)
        r = solution_of(wb)
        labels = _labels_of(wb.order, wb.labels)
        out.text(f"trivial weak brace on {name}")
        M, inv = wb.M, wb.inv
        rows = []
        for a in range(wb.order):
            for b in range(wb.order):
                expected = (int(M[M[a, inv[a]], b]), int(M[M[inv[b], a], b]))
                got = r(a, b)
                rows.append({"a": a, "b": b, "r": list(got)})
                if got != expected:
                    status = FAILS
                out.text(f"  r({labels[a]}, {labels[b]}) = {_fmt_pair(labels, got)}")
        prof = classify(r)
        out.text(f"  cubic={prof.cubic} twist={r == PairMap.twist(wb.order)}")
        out.put(name, {"solution": rows, "cubic": prof.cubic})
    return status


def _demo_semidirect(out: Output) -> int:
    from .fixtures import semidirect_3x3

    wb = semidirect_3x3()
    L = wb.labels
    a, arg = L.index("(y,y)"), L.index("(y,1)")
    values = {}
    for name, e in (("a o a'", int(wb.M[a, wb.inv[a]])), ("a' o a", int(wb.M[wb.inv[a], a]))):
        val = int(wb.lam[e, arg])
        values[name] = {"idempotent": L[e], "lambda": L[val]}
        out.text(f"a = (y,y): {name} = {L[e]}, lambda_{L[e]}(y,1) = {L[val]}")
    out.put("values", values)
    ok = values["a o a'"]["lambda"] == "(y,x)" and values["a' o a"]["lambda"] == "(1,x)"
    out.text("lambda_{a o a'} != lambda_{a' o a}" if ok else "unexpected values")
    return OK if ok else FAILS


def _demo_sym3(out: Output) -> int:
    show = sym3_showcase()
    L = list(show.circ.labels)
    tables = {}
    for tag, wb in (("circ", show.circ), ("bullet", show.bullet)):
        lam = {L[a]: map_cycles(wb.lam[a], L) for a in range(6)}
        rho = {L[b]: map_cycles(wb.rho[b], L) for b in range(6)}
        tables[tag] = {"lambda": lam, "rho": rho}
        out.text(f"G_{tag}")
        for a in range(6):
            left = f"lambda_{L[a]} = {lam[L[a]]}"
            out.text(f"  {left:<40} rho_{L[a]} = {rho[L[a]]}")
    out.put("maps", tables)
    verdict = "equivalent" if show.equivalence else f"no equivalence among {bijection_count(6)} bijections"
    iso = "isomorphic" if show.isomorphism else "not isomorphic"
    out.put("equivalence", list(show.equivalence) if show.equivalence else None)
    out.put("isomorphism", list(show.isomorphism) if show.isomorphism else None)
    out.text(f"r_circ vs r_bullet: {verdict}")
    out.text(f"G_circ vs G_bullet: {iso}")
    return OK if show.equivalence is None and show.isomorphism is None else FAILS


DEMOS = {"trivial": _demo_trivial, "semidirect-3x3": _demo_semidirect, "sym3": _demo_sym3}


def cmd_demo(args, out: Output) -> int:
    return DEMOS[args.name](out)


# -- parser -----------------------------------------------------------------

def _positive(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--max-order", type=_positive, default=argparse.SUPPRESS,
                        help="cap for enumeration, equivalence and factorization searches")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="accepted for compatibility; results never depend on it")

    parser = argparse.ArgumentParser(prog="weakbrace", parents=[common],
                                     description="Finite weak braces and their Yang-Baxter solutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="validate a document and run all checks")
    p.add_argument("file")
    p.add_argument("--cap", type=_positive, default=con.DEFAULT_PRODUCT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="emit the solution of a weak brace")
    p.add_argument("file")
    p.add_argument("--op", action="store_true", help="emit r^op instead of r")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("ybe", parents=[common],
                       help="pair-map tools: ybe [check|classify|equiv|power] FILE...",
                       usage="weakbrace ybe [check|classify|equiv|power] FILE [FILE] [--k K]")
    p.add_argument("rest", nargs="+", metavar="ARG")
    p.add_argument("--k", type=int, help="exponent for ybe power")
    p.set_defaults(func=cmd_ybe)

    p = sub.add_parser("classify", parents=[common], help="structure flags and solution profile")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", parents=[common], help="search for an equivalence of two solutions")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("power", parents=[common], help="k-th power of a solution")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("construct", parents=[common], help="build a weak brace")
    p.add_argument("what", choices=["matched", "double", "semidirect", "trivial", "almost-trivial", "product"])
    p.add_argument("files", nargs="+")
    p.add_argument("--kind", type=int, choices=[1, 2, 3])
    p.add_argument("--hom", help="JSON list of permutations (file path or literal) for product kinds 2 and 3")
    p.add_argument("--cap", type=_positive, default=con.DEFAULT_PRODUCT_CAP)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("factorize", parents=[common], help="weak brace from an exact factorization")
    p.add_argument("file")
    p.add_argument("--pick", type=int, default=0)
    p.add_argument("--variant", choices=["circ", "bullet"], default="circ")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("enumerate", parents=[common], help="small-order census")
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--kind", choices=["inverse-semigroup", "weak-brace"], required=True)
    p.add_argument("--labeled", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("demo", parents=[common], help="worked examples")
    p.add_argument("name", choices=sorted(DEMOS))
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("max_order", None), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    out = Output(args.json)
    try:
        code = args.func(args, out)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except AlgebraError as exc:
        out.put("error", {"type": type(exc).__name__, "message": str(exc),
                          "witness": list(exc.witness) if exc.witness is not None else None})
        out.text(f"{type(exc).__name__}: {exc}")
        if exc.witness is not None:
            out.text(f"witness: {exc.witness}")
        out.flush()
        return FAILS
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
