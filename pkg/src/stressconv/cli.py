"""Command-line interface.

Every subcommand prints one JSON object (keys sorted) or, with ``--table``,
an aligned text rendering of the same payload.  Exit status: 0 on success,
1 on domain errors (disconnected input to ``sn``, non-bipartite input to
``reduce``, unreadable files, ...), 2 on usage and parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import _kernels, graph as gmod
from .apsp import compute_apsp
from .classify import (
    convergence_sequence,
    is_geodetic,
    is_s_trivial,
    stress_equals_interval,
    underlying_graph,
)
from .families import (
    RNG_ALGORITHM,
    Family,
    FamilySpec,
    RandomKind,
    generate,
    random_graph,
)
from .graph import Graph, GraphError, ParseError, is_connected
from .reduction import build_reduction, verify_reduction
from .report import run_bench, run_table1
from .solve import (
    CapExceededError,
    classify_special,
    sn_block_graph,
    sn_split_graph,
    stress_hull_number_exact,
    stress_number_exact,
)
from .stress import (
    extreme_vertices,
    geodesic_interval,
    interval_query,
    is_stress_convex,
    stress_closure,
    stress_hull,
)


class UsageError(Exception):
    pass


def _load_graph(args) -> Graph:
    if args.graph and args.json:
        raise UsageError("give only one of --graph / --json")
    if not (args.graph or args.json):
        raise UsageError("an input graph is required (--graph FILE or --json FILE)")
    path = args.graph or args.json
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return gmod.parse_edge_list(text) if args.graph else gmod.loads(text)


def _labels_to_ids(g: Graph, labels) -> tuple[int, ...]:
    try:
        return g.ids(labels)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _parse_set(g: Graph, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("--set is required")
    return _labels_to_ids(g, [x for x in text.split(",") if x])


def _edges_by_label(g: Graph) -> list[list[str]]:
    return [[g.labels[u], g.labels[v]] for u, v in g.edges()]


# -- subcommands ------------------------------------------------------------------

def cmd_gen(args, g=None) -> dict:
    if args.random:
        if args.n is None:
            raise UsageError("--random needs --n")
        out = random_graph(args.random, args.n, args.seed, p=args.p)
        meta = {"kind": args.random, "n": args.n, "seed": args.seed, "rng": RNG_ALGORITHM}
    else:
        if not args.family:
            raise UsageError("gen needs --family or --random")
        fam = Family(args.family)
        params = {
            Family.COMPLETE_BIPARTITE: (args.m, args.n),
            Family.GAP_CONSTRUCTION: (args.n, args.k),
        }.get(fam, (args.n,))
        if any(p is None for p in params):
            raise UsageError(f"missing size parameter for {fam.value}")
        out = generate(FamilySpec(fam, params))
        meta = {"family": fam.value, "params": list(params)}
    return {"graph": gmod.to_json_obj(out), "meta": meta, "_graph": out}


def cmd_interval(args, g) -> dict:
    if not args.pair:
        raise UsageError("--pair L1 L2 is required")
    u, v = (_labels_to_ids(g, [x])[0] for x in args.pair)
    t = compute_apsp(g)
    q = interval_query(t, u, v)
    return {
        "stress": g.names(q.result),
        "geodesic": g.names(geodesic_interval(t, u, v)),
        "ordering": g.names(q.ordering) if q.ordering else None,
        "distance": t.distance(u, v) if t.connected(u, v) else None,
        "paths": t.count(u, v),
    }


def cmd_closure(args, g) -> dict:
    members = _parse_set(g, args.set)
    out = stress_closure(compute_apsp(g), members)
    return {"closure": g.names(out), "size": len(out), "stress_set": len(out) == g.n}


def cmd_hull(args, g) -> dict:
    members = _parse_set(g, args.set)
    out = stress_hull(compute_apsp(g), members)
    return {"hull": g.names(out), "size": len(out), "hull_set": len(out) == g.n}


def cmd_convex(args, g) -> dict:
    return {"convex": is_stress_convex(compute_apsp(g), _parse_set(g, args.set))}


def cmd_extreme(args, g) -> dict:
    members = _parse_set(g, args.set) if args.set else None
    return {"extreme": g.names(extreme_vertices(g, members))}


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceededError(f"graph has {g.n} vertices, exact solver cap is {cap} (raise with --cap)")


def cmd_sn(args, g) -> dict:
    method = args.method
    if method == "auto":
        info = classify_special(g)
        method = "block" if info.is_block else "split" if info.is_split else "exact"
    if method == "block":
        report = sn_block_graph(g)
    elif method == "split":
        report = sn_split_graph(g)
    else:
        _check_cap(g, args.cap)
        report = stress_number_exact(g)
    return report.to_json_obj(g)


def cmd_sh(args, g) -> dict:
    _check_cap(g, args.cap)
    return stress_hull_number_exact(g).to_json_obj(g)


def cmd_classify(args, g) -> dict:
    t = compute_apsp(g)
    info = classify_special(g)
    connected = is_connected(g)
    return {
        "s_trivial": is_s_trivial(g, t),
        "geodetic": is_geodetic(g, t),
        "connected": connected,
        "split": info.is_split,
        "block": info.is_block,
        "stress_equals_interval": stress_equals_interval(g, t) if connected else None,
    }


def cmd_underlying(args, g) -> dict:
    h = underlying_graph(g)
    return {"edges": _edges_by_label(h), "same_as_input": h.edge_set() == g.edge_set(), "_graph": h}


def cmd_converge(args, g) -> dict:
    trace = convergence_sequence(g, args.max_steps)
    return {
        "terminated": trace.terminated,
        "cycled": trace.cycled,
        "steps": trace.steps,
        "graphs": [_edges_by_label(h) for h in trace.graphs],
    }


def cmd_reduce(args, g) -> dict:
    inst = build_reduction(g)
    out = inst.roles_json()
    out["gadget"] = gmod.to_json_obj(inst.gadget)
    out["_graph"] = inst.gadget
    return out


def cmd_verify_reduction(args, g) -> dict:
    check = verify_reduction(g, cap=args.cap)
    return check.to_json_obj(build_reduction(g))


def cmd_table1(args, g=None) -> dict:
    rows = run_table1()
    return {"rows": [r.to_json_obj() for r in rows], "all_match": all(r.match for r in rows)}


def cmd_bench(args, g=None) -> dict:
    sizes = tuple(int(x) for x in args.sizes.split(","))
    backends = None if args.backend == "both" else [args.backend]
    return run_bench(sizes, seed=args.seed, backends=backends, repeat=args.repeat)


COMMANDS = {
    "gen": (cmd_gen, False, "generate a family member or a random graph"),
    "interval": (cmd_interval, True, "stress and geodesic interval of a pair"),
    "closure": (cmd_closure, True, "stress closure of a vertex set"),
    "hull": (cmd_hull, True, "s-convex hull of a vertex set"),
    "convex": (cmd_convex, True, "test s-convexity of a vertex set"),
    "extreme": (cmd_extreme, True, "s-extreme vertices (of the graph or of --set)"),
    "sn": (cmd_sn, True, "stress number"),
    "sh": (cmd_sh, True, "stress hull number"),
    "classify": (cmd_classify, True, "s-trivial / geodetic / split / block flags"),
    "underlying": (cmd_underlying, True, "underlying graph of the stress function"),
    "converge": (cmd_converge, True, "iterate the underlying-graph map"),
    "reduce": (cmd_reduce, True, "dominating-set gadget for a bipartite graph"),
    "verify-reduction": (cmd_verify_reduction, True, "check sn(G') == gamma(G) + n"),
    "table1": (cmd_table1, False, "recompute the family table"),
    "bench": (cmd_bench, False, "time all-pairs stress intervals and fit the growth exponent"),
}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stressconv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, needs_graph, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if needs_graph:
            p.add_argument("--graph", metavar="FILE", help="edge-list input")
            p.add_argument("--json", metavar="FILE", help="JSON graph input")
        p.add_argument("--table", action="store_true", help="aligned text instead of JSON")
        p.add_argument("--meta", action="store_true", help="wrap output with command, digest and timing")
        if name == "interval":
            p.add_argument("--pair", nargs=2, metavar=("L1", "L2"))
        if name in ("closure", "hull", "convex", "extreme"):
            p.add_argument("--set", metavar="L1,L2,...")
        if name in ("sn", "sh", "verify-reduction"):
            p.add_argument("--cap", type=_positive_int, default=30 if name != "verify-reduction" else 16)
        if name == "sn":
            p.add_argument("--method", choices=["auto", "exact", "split", "block"], default="exact")
        if name == "converge":
            p.add_argument("--max-steps", type=_positive_int, default=None)
        if name == "reduce":
            p.add_argument("--format", choices=["json", "edges"], default="json")
        if name == "gen":
            p.add_argument("--family", choices=[f.value for f in Family])
            p.add_argument("--random", choices=[k.value for k in RandomKind])
            p.add_argument("--n", type=int)
            p.add_argument("--m", type=int)
            p.add_argument("--k", type=int)
            p.add_argument("--p", type=float, default=None)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--format", choices=["json", "edges"], default="json")
        if name == "bench":
            p.add_argument("--sizes", default="50,100,200,400")
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--repeat", type=int, default=3)
            p.add_argument("--backend", choices=["both", "numba", "numpy"],
                           default="both" if _kernels.HAVE_NUMBA else "numpy")
    return parser


def _render_table(payload: dict) -> str:
    lines = []
    rows = payload.get("rows")
    if isinstance(rows, list) and rows and isinstance(rows[0], dict):
        cols = list(rows[0])
        cells = [[json.dumps(r[c]) if not isinstance(r[c], str) else r[c] for c in cols] for r in rows]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
        lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells]
        rest = {k: v for k, v in payload.items() if k != "rows"}
    else:
        rest = payload
    if rest:
        width = max(len(k) for k in rest)
        for k in sorted(rest):
            v = rest[k]
            text = ", ".join(map(str, v)) if isinstance(v, list) and all(isinstance(x, str) for x in v) else json.dumps(v, sort_keys=True)
            lines.append(f"{k.ljust(width)}  {text}")
    return "\n".join(lines)


def _digest(g: Graph | None) -> str | None:
    if g is None:
        return None
    return hashlib.sha256(gmod.dumps(g).encode()).hexdigest()


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    func, needs_graph, _ = COMMANDS[args.command]
    start = time.perf_counter()
    g = None
    try:
        if needs_graph:
            try:
                g = _load_graph(args)
            except GraphError as exc:
                raise ParseError(str(exc)) from None
        payload = func(args, g)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except GraphError as exc:
        print(f"error: {exc}", file=err)
        return 1
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    out_graph = payload.pop("_graph", None)
    fmt = getattr(args, "format", "json")
    if fmt == "edges" and out_graph is not None:
        header = payload.get("meta")
        if header:
            out.write("# " + json.dumps(header, sort_keys=True) + "\n")
        if args.command == "reduce":
            out.write("# " + json.dumps({"roles": payload["roles"], "k_shift": payload["k_shift"]}, sort_keys=True) + "\n")
        out.write(gmod.format_edge_list(out_graph))
        return 0
    if args.meta:
        payload = {
            "command": args.command,
            "input_digest": _digest(g),
            "payload": payload,
            "elapsed_ms": elapsed_ms,
        }
    if args.table:
        print(_render_table(payload), file=out)
    else:
        print(json.dumps(payload, sort_keys=True), file=out)
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
