"""Command-line front end.

Subcommands: summarize, length, dim, reg, mindist, profile,
ternary {dim,reg,joins,basis}, family, verify.  Graphs come from a file
(--graph) or a built-in family (--family/--params); --seed-order permutes
the edge ordering.  Human-readable output by default, stable JSON with
--json (top-level "schema": 1).

Exit codes: 0 ok, 1 verify found a FAIL, 2 usage error, 3 a cap or budget
refused the computation (the required amount is printed).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, eulerian3, formulas, graph as graphmod, toric
from .errors import GraphCodesError, ResourceRefused
from .gfq import make_field
from .monomials import format_monomial

SCHEMA = 1


def _add_graph_args(p):
    p.add_argument("--graph", help="graph file (header 'n s', then edge lines)")
    p.add_argument("--family", help="family name (path, cycle, complete, "
                   "complete_bipartite, complete_multipartite, parallel_composition)")
    p.add_argument("--params", type=int, nargs="+", default=[], help="family parameters")
    p.add_argument("--seed-order", help="comma-separated permutation of 1..s "
                   "applied to the edge ordering")


def _add_common(p, q=False, d=False, dmax=False, budget=False, cap=False):
    _add_graph_args(p)
    if q:
        p.add_argument("--q", type=int, required=True, help="field size (prime power)")
    if d:
        p.add_argument("--d", type=int, required=True, help="degree")
    if dmax:
        p.add_argument("--dmax", type=int, required=True, help="maximum degree")
    if budget:
        p.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET,
                       help="message-class budget for distance enumeration")
    if cap:
        p.add_argument("--cap", type=int, default=toric.DEFAULT_POINT_CAP,
                       help="enumeration cap (torus tuples)")
    p.add_argument("--json", action="store_true", dest="as_json")


def _load_graph(args):
    if args.graph and args.family:
        raise UsageError("--graph and --family are mutually exclusive")
    if args.graph:
        with open(args.graph) as fh:
            G = graphmod.parse_graph(fh.read())
    elif args.family:
        G = graphmod.build_family(args.family, args.params)
    else:
        raise UsageError("one of --graph or --family is required")
    if args.seed_order:
        perm = [int(x) for x in args.seed_order.split(",")]
        G = G.reorder_edges(perm)
    return G


class UsageError(GraphCodesError):
    pass


def _emit(out, payload, human):
    if payload.get("_json_only"):
        out.write(json.dumps({k: v for k, v in payload.items() if k != "_json_only"},
                             sort_keys=True) + "\n")
    else:
        out.write(human + "\n")


def _graph_ident(G, args):
    if args.graph:
        return {"file": args.graph, "n": G.n, "s": G.s}
    return {"family": args.family, "params": list(args.params), "n": G.n, "s": G.s}


def _toric_set(G, args):
    F = make_field(args.q)
    cap = getattr(args, "cap", toric.DEFAULT_POINT_CAP)
    return toric.parameterize(G, F, cap=cap)


# Subcommand handlers return (exit_status, text).


def _cmd_summarize(args, out):
    G = _load_graph(args)
    summary = graphmod.summarize(G)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args),
            "n": summary.n, "s": summary.s, "b0": summary.b0,
            "bipartite": summary.bipartite, "gamma": summary.gamma,
        }, sort_keys=True) + "\n")
    else:
        out.write(f"n={summary.n} s={summary.s} b0={summary.b0} "
                  f"bipartite={summary.bipartite} gamma={summary.gamma}\n")
    return 0


def _cmd_length(args, out):
    G = _load_graph(args)
    X = _toric_set(G, args)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args), "q": args.q,
            "length": X.m, "degenerate": X.degenerate,
        }, sort_keys=True) + "\n")
    else:
        out.write(f"{X.m}\n")
    return 0


def _cmd_dim(args, out):
    G = _load_graph(args)
    X = _toric_set(G, args)
    value = codes.dimension(X, args.d)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args), "q": args.q,
            "d": args.d, "dim": value,
        }, sort_keys=True) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def _cmd_reg(args, out):
    G = _load_graph(args)
    X = _toric_set(G, args)
    value = codes.regularity_index(X)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args), "q": args.q,
            "reg": value,
        }, sort_keys=True) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def _cmd_mindist(args, out):
    G = _load_graph(args)
    X = _toric_set(G, args)
    value = codes.minimum_distance(X, args.d, budget=args.budget)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args), "q": args.q,
            "d": args.d, "mindist": value,
        }, sort_keys=True) + "\n")
    else:
        out.write(f"{value}\n")
    return 0


def _cmd_profile(args, out):
    G = _load_graph(args)
    X = _toric_set(G, args)
    rows = codes.distance_profile(X, args.dmax, budget=args.budget)
    if args.as_json:
        out.write(json.dumps({
            "schema": SCHEMA, "graph": _graph_ident(G, args), "q": args.q,
            "length": X.m,
            "rows": [{"d": r.d, "dim": r.dim, "delta": r.delta,
                      "singleton": r.singleton, "skipped": r.skipped}
                     for r in rows],
        }, sort_keys=True) + "\n")
    else:
        out.write(f"{'d':>3} {'dim':>6} {'delta':>8} {'singleton':>10}\n")
        for r in rows:
            delta = r.delta if r.delta is not None else f"SKIPPED({r.skipped})"
            out.write(f"{r.d:>3} {r.dim:>6} {delta!s:>8} {r.singleton:>10}\n")
    return 0


def _cmd_ternary(args, out):
    G = _load_graph(args)
    if args.ternary_op == "dim":
        value = eulerian3.dim_ternary(G, args.d)
        payload = {"dim": value}
        human = str(value)
    elif args.ternary_op == "reg":
        mu, witness = eulerian3.max_parity_join(G)
        payload = {"mu": mu, "reg": mu - 1, "witness": sorted(witness)}
        human = f"reg={mu - 1} mu={mu} witness={sorted(witness)}"
    elif args.ternary_op == "joins":
        joins = sorted(sorted(j) for j in eulerian3.enumerate_Jd(G, args.d))
        payload = {"d": args.d, "joins": joins}
        human = "\n".join(" ".join(str(i) for i in j) or "(empty)" for j in joins) or "(none)"
    else:  # basis
        mons = sorted(eulerian3.standard_monomials(G, args.d),
                      key=eulerian3.grevlex_key, reverse=True)
        payload = {"d": args.d, "basis": [format_monomial(m) for m in mons]}
        human = "\n".join(format_monomial(m) for m in mons) or "(none)"
    if args.as_json:
        payload.update({"schema": SCHEMA, "graph": _graph_ident(G, args), "q": 3})
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(human + "\n")
    return 0


def _cmd_family(args, out):
    if not args.family:
        raise UsageError("--family is required")
    G = graphmod.build_family(args.family, args.params)
    if args.seed_order:
        perm = [int(x) for x in args.seed_order.split(",")]
        G = G.reorder_edges(perm)
    out.write(graphmod.format_graph(G))
    return 0


# Verification harness: recompute everything by brute force, attach every
# applicable closed form, and mark each row PASS / FAIL / SKIPPED(reason).


def _row(check, expected, actual, d=None):
    status = "PASS" if expected == actual else "FAIL"
    row = {"check": check, "expected": expected, "actual": actual, "status": status}
    if d is not None:
        row["d"] = d
    return row


def _skip(check, reason, d=None):
    row = {"check": check, "status": f"SKIPPED({reason})"}
    if d is not None:
        row["d"] = d
    return row


def verify(G, q, d_max, budget=codes.DEFAULT_BUDGET, cap=toric.DEFAULT_POINT_CAP):
    """Cross-check every applicable closed form against brute force."""
    F = make_field(q)
    rows = []
    summary = graphmod.summarize(G)
    X = toric.parameterize(G, F, cap=cap)  # asserts the length theorem itself
    rows.append(_row("length", toric.expected_length(summary, F), X.m))

    s = G.s
    is_torus = X.m == (q - 1) ** (s - 1)
    kab = graphmod.is_complete_bipartite(G)
    half_cycle = graphmod.is_even_cycle(G)
    n_complete = graphmod.is_complete(G)
    multiparts = graphmod.is_complete_multipartite(G)
    connected = summary.b0 == 1

    dims = {}
    for d in range(d_max + 1):
        dims[d] = codes.dimension(X, d)
        if is_torus and q >= 3:
            rows.append(_row("dim torus formula", formulas.k_formula(s, d, q),
                             dims[d], d=d))
        if kab and q >= 3:
            a, b = kab
            rows.append(_row("dim complete bipartite",
                             formulas.dim_complete_bipartite(a, b, d, q),
                             dims[d], d=d))
        if half_cycle and q == 3:
            rows.append(_row("dim even cycle ternary",
                             formulas.dim_even_cycle_ternary(half_cycle, d),
                             dims[d], d=d))
        if q == 3:
            rows.append(_row("dim ternary parity joins",
                             eulerian3.dim_ternary(G, d), dims[d], d=d))

    deltas = {}
    prev = None
    for d in range(1, d_max + 1):
        try:
            delta = codes.minimum_distance(X, d, budget=budget)
        except ResourceRefused as exc:
            rows.append(_skip("mindist brute force",
                              f"requires {exc.required}", d=d))
            prev = None
            continue
        deltas[d] = delta
        singleton = X.m - dims[d] + 1
        rows.append(_row("singleton bound", True, delta <= singleton, d=d))
        if prev is not None:
            ok = delta < prev if prev > 1 else delta == 1
            rows.append(_row("strict decrease", True, ok, d=d))
        prev = delta
        if is_torus and q >= 3:
            rows.append(_row("mindist torus formula",
                             formulas.mindist_torus_formula(s, d, q), delta, d=d))
        if kab and q >= 3 and min(kab) >= 2:
            a, b = kab
            rows.append(_row("mindist complete bipartite",
                             formulas.mindist_complete_bipartite(a, b, d, q),
                             delta, d=d))
        if connected and summary.bipartite and q >= 3:
            parts = graphmod.bipartition(G)
            a, b = len(parts[0]), len(parts[1])
            if min(a, b) >= 2:
                lo, hi = formulas.mindist_bipartite_bounds(a, b, d, q)
                rows.append(_row("bipartite bounds", True, lo <= delta <= hi, d=d))
        if connected and not summary.bipartite and q >= 3:
            lo = formulas.mindist_nonbipartite_lower(G.n, d, q)
            rows.append(_row("non-bipartite lower bound", True, lo <= delta, d=d))

    reg = codes.regularity_index(X)
    rows.append(_row("hilbert plateau value", X.m, dims.get(reg, codes.dimension(X, reg))))
    if q >= 3:
        if is_torus:
            rows.append(_row("reg torus",
                             formulas.reg_closed_form(formulas.RegFamily("torus", (s,)), q), reg))
        if kab:
            rows.append(_row("reg complete bipartite",
                             formulas.reg_closed_form(formulas.RegFamily("complete_bipartite", kab), q), reg))
        if n_complete and n_complete > 3:
            rows.append(_row("reg complete",
                             formulas.reg_closed_form(formulas.RegFamily("complete", (n_complete,)), q), reg))
        if half_cycle:
            rows.append(_row("reg even cycle",
                             formulas.reg_closed_form(formulas.RegFamily("even_cycle", (half_cycle,)), q), reg))
        if multiparts and G.n > 3:
            rows.append(_row("reg complete multipartite",
                             formulas.reg_closed_form(formulas.RegFamily("complete_multipartite", multiparts), q), reg))
    if q == 3:
        mu, _ = eulerian3.max_parity_join(G)
        rows.append(_row("reg ternary (mu - 1)", mu - 1, reg))

    for d in range(reg, d_max + 1):
        if d in deltas:
            rows.append(_row("delta = 1 past plateau", 1, deltas[d], d=d))

    failed = any(r["status"] == "FAIL" for r in rows)
    return {"schema": SCHEMA, "q": q, "d_max": d_max, "length": X.m,
            "regularity": reg, "degenerate": X.degenerate,
            "rows": rows, "ok": not failed}


def _cmd_verify(args, out):
    G = _load_graph(args)
    report = verify(G, args.q, args.dmax, budget=args.budget, cap=args.cap)
    report["graph"] = _graph_ident(G, args)
    if args.as_json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        for r in report["rows"]:
            d = f" d={r['d']}" if "d" in r else ""
            if r["status"].startswith("SKIPPED"):
                out.write(f"{r['status']:>8} {r['check']}{d}\n")
            else:
                out.write(f"{r['status']:>8} {r['check']}{d} "
                          f"expected={r['expected']} actual={r['actual']}\n")
        out.write(f"{'OK' if report['ok'] else 'FAILED'} "
                  f"(length={report['length']}, reg={report['regularity']})\n")
    return 0 if report["ok"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="graphcodes",
        description="Parameterized linear codes over graphs: parameters by "
                    "exact brute force, closed-form formulas, and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("summarize", help="components, bipartiteness, gamma")
    _add_common(p)
    p.set_defaults(handler=_cmd_summarize)

    p = sub.add_parser("length", help="|X| by enumeration (checked against the formula)")
    _add_common(p, q=True, cap=True)
    p.set_defaults(handler=_cmd_length)

    p = sub.add_parser("dim", help="dim C_X(d) by exact rank")
    _add_common(p, q=True, d=True, cap=True)
    p.set_defaults(handler=_cmd_dim)

    p = sub.add_parser("reg", help="index of regularity (Hilbert plateau)")
    _add_common(p, q=True, cap=True)
    p.set_defaults(handler=_cmd_reg)

    p = sub.add_parser("mindist", help="exact minimum distance")
    _add_common(p, q=True, d=True, budget=True, cap=True)
    p.set_defaults(handler=_cmd_mindist)

    p = sub.add_parser("profile", help="per-degree dim/delta/singleton profile")
    _add_common(p, q=True, dmax=True, budget=True, cap=True)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("ternary", help="ternary (q=3) combinatorics")
    p.add_argument("ternary_op", choices=["dim", "reg", "joins", "basis"])
    _add_common(p)
    p.add_argument("--d", type=int, default=0, help="degree")
    p.set_defaults(handler=_cmd_ternary)

    p = sub.add_parser("family", help="emit a built family as a graph file")
    _add_graph_args(p)
    p.set_defaults(handler=_cmd_family, as_json=False)

    p = sub.add_parser("verify", help="formula-vs-brute-force verification harness")
    _add_common(p, q=True, dmax=True, budget=True, cap=True)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run_command(argv, out=None):
    """Dispatch argv (no program name); returns the exit status."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.handler(args, out)
    except ResourceRefused as exc:
        out.write(f"refused: {exc} (required: {exc.required})\n")
        return 3
    except UsageError as exc:
        out.write(f"usage error: {exc}\n")
        return 2
    except GraphCodesError as exc:
        out.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
