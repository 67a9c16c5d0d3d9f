"""Command-line front end.

Human-readable results go to standard output; ``--json FILE`` also writes a
machine-readable report. Reports are deterministic for fixed inputs, seed and
budget apart from the ``timestamp`` field.

Exit status: 0 on success, 1 when a check or the suite fails (or a budget
runs out), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
import time
from pathlib import Path

from .blocking import blocked_colors, class_eliminable, eliminate_and_canonicalize, is_minimal, p4_system
from .coloring import ColoringError, as_coloring, find_bicolored_p4, is_proper, read_coloring
from .errors import BudgetExhausted, OracleTooLarge, PreconditionError, SearchStats
from .exact import (
    clique_number,
    exact_b_chromatic,
    exact_chromatic,
    exact_sb,
    exact_star_chromatic,
    sb_join,
    verify_chain,
)
from .families import FAMILY_TAGS, family_graph, sb_family
from .graph import Graph, GraphError, empty, graph_digest, read_graph, star
from .recoloring import star_recoloring_algorithm
from .star_degree import decompose, m_s_degree, star_degree_bruteforce, star_degree_girth7, star_degree_matching

__all__ = ["main", "run", "build_parser", "parse_graph_spec"]


class InputError(Exception):
    """Bad command-line input (exit status 2)."""


def parse_graph_spec(spec: str) -> Graph:
    """Build a graph from a short description.

    ``path:8``, ``cycle:5``, ``complete:4``, ``empty:3``, ``star:4``, ``kbipartite:3,5``,
    ``wheel:6``, ``fan:5``, ``ksplit:2,3``, ``tdelta:3``, ``tgap:2`` or an
    explicit edge list ``edges:N:0-1,1-2``.
    """
    tag, _, rest = spec.partition(":")
    try:
        if tag == "edges":
            n_text, _, pairs = rest.partition(":")
            edges = [tuple(int(x) for x in p.split("-")) for p in pairs.split(",") if p]
            return Graph(int(n_text), edges)
        if tag == "empty":
            return empty(int(rest))
        if tag == "star":
            return star(int(rest))
        nums = [int(x) for x in rest.split(",") if x]
        if tag not in FAMILY_TAGS or not nums:
            raise InputError(f"unknown graph spec {spec!r}")
        return family_graph(tag, nums[0], nums[1] if len(nums) > 1 else None)
    except (ValueError, GraphError) as exc:
        raise InputError(f"bad graph spec {spec!r}: {exc}") from exc


def _load_graph(args, which: str = "") -> Graph:
    path = getattr(args, f"{which}input", None)
    spec = getattr(args, f"{which}graph", None)
    if (path is None) == (spec is None):
        raise InputError(f"give exactly one of --{which}input / --{which}graph")
    if spec is not None:
        return parse_graph_spec(spec)
    try:
        return read_graph(path, getattr(args, "format", None))
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load_coloring(args, g: Graph):
    text = args.coloring
    if text is None:
        raise InputError("--coloring is required")
    try:
        if Path(text).is_file():
            c = read_coloring(text, g.n)
        else:
            c = as_coloring(text)
    except (ValueError, OSError) as exc:
        raise InputError(f"bad coloring: {exc}") from exc
    if c.n != g.n:
        raise InputError(f"coloring has {c.n} entries, graph has {g.n} vertices")
    return c


# -- subcommands -------------------------------------------------------------------
# each returns (exit_status, human_lines, results_dict)


def cmd_check_star(args):
    g = _load_graph(args)
    c = _load_coloring(args, g)
    if not is_proper(g, c):
        bad = next((u, v) for u, v in g.sorted_edges() if c[u] == c[v])
        return 1, [f"not proper: edge {bad[0]}-{bad[1]} has color {c[bad[0]]} on both ends"], {"star": False, "proper": False, "edge": list(bad)}
    w = find_bicolored_p4(g, c)
    if w is None:
        return 0, [f"star coloring with {c.k} colors"], {"star": True, "proper": True, "k": c.k}
    verts = list(w.vertices())
    cols = [c[v] for v in verts]
    return 1, [f"not a star coloring: bicolored P4 {verts} with colors {cols}"], {"star": False, "proper": True, "p4": verts}


def cmd_blocked(args):
    g = _load_graph(args)
    c = _load_coloring(args, g)
    verts = [args.vertex] if args.vertex is not None else list(g.vertices())
    out, lines = [], []
    for v in verts:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
        rep = blocked_colors(g, c, v)
        sys_ = p4_system(g, c, v)
        item = rep.to_json() | {"p4_system": sorted(sys_.members)}
        out.append(item)
        lines.append(f"v={v} color={c[v]} blocked={sorted(rep.blocked - {c[v]})} available={sorted(rep.available)} p4-system={sorted(sys_.members)}")
    return 0, lines, {"vertices": out}


def cmd_eliminate(args):
    g = _load_graph(args)
    c = _load_coloring(args, g)
    stats = SearchStats(budget=args.budget)
    colors = [args.color] if args.color is not None else c.palette
    out, lines = [], []
    for i in colors:
        if i not in c.colors:
            raise InputError(f"color {i} is not used")
        res = class_eliminable(g, c, i, stats=stats)
        item = res.to_json()
        if res.feasible:
            new = eliminate_and_canonicalize(c, res)
            item["result"] = new.to_json()
            lines.append(f"color {i}: eliminable -> {new}")
        else:
            lines.append(f"color {i}: not eliminable, star b-vertex {res.witness}")
        out.append(item)
    minimal = all(not o["feasible"] for o in out) if args.color is None else None
    if minimal is not None:
        lines.append("minimal" if minimal else "not minimal")
    return 0, lines, {"classes": out, "minimal": minimal, "nodes": stats.nodes}


def cmd_heuristic(args):
    g = _load_graph(args)
    stats = SearchStats(budget=args.budget)
    c, trace = star_recoloring_algorithm(g, args.policy, seed=args.seed, stats=stats)
    lines = [f"{c.k} colors: {c}", f"{len(trace.steps)} recoloring steps, {trace.nodes} nodes"]
    return 0, lines, {"k": c.k, "coloring": c.to_json(), "trace": trace.to_json()}


def cmd_exact(args):
    g = _load_graph(args)
    b = args.budget
    what = args.what
    if what == "sb":
        cert = exact_sb(g, b)
        lines = [str(cert.value), f"witness {cert.coloring}", "star b-vertices " + ", ".join(f"{i}:{v}" for i, v in sorted(cert.witnesses.items()))]
        return 0, lines, cert.to_json()
    if what == "s":
        k, c = exact_star_chromatic(g, b)
        return 0, [str(k), f"witness {c}"], {"value": k, "coloring": c.to_json()}
    if what == "chi":
        k = exact_chromatic(g, b)
        return 0, [str(k)], {"value": k}
    if what == "omega":
        k = clique_number(g)
        return 0, [str(k)], {"value": k}
    if what == "phi":
        k = exact_b_chromatic(g, b)
        return 0, [str(k)], {"value": k}
    if what == "chain":
        rep = verify_chain(g, b)
        line = f"{rep.omega} <= {rep.chi} <= {rep.star} <= {rep.sb} <= {rep.n}"
        return (0 if rep.holds else 1), [line if rep.holds else "chain violated: " + line], rep.to_json()
    if what == "join":
        h = _load_graph(args, "with_")
        value = sb_join(g, h, b, cross_check=args.cross_check)
        return 0, [str(value)], {"value": value, "cross_checked": bool(args.cross_check and g.n + h.n <= 8)}
    raise InputError(f"unknown exact target {what!r}")


def _degree_fn(method: str, max_ball: int):
    if method == "oracle":
        return lambda g, v: star_degree_bruteforce(g, v, max_ball=max_ball)
    if method == "girth7":
        return star_degree_girth7
    if method == "matching":
        return star_degree_matching
    raise InputError(f"unknown method {method!r}")


def cmd_degree(args):
    g = _load_graph(args)
    fn = _degree_fn(args.method, args.max_ball)
    verts = [args.vertex] if args.vertex is not None else list(g.vertices())
    out, lines = {}, []
    for v in verts:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
        try:
            d = fn(g, v)
        except PreconditionError as exc:
            if args.vertex is not None:
                raise
            d = None
            lines.append(f"v={v}: {exc}")
        else:
            lines.append(f"v={v}: d^s = {d}")
        out[str(v)] = d
    result = {"method": args.method, "degrees": out}
    if args.vertex is not None and args.method != "oracle":
        result["decomposition"] = decompose(g, args.vertex).to_json()
    return 0, lines, result


def cmd_msdeg(args):
    g = _load_graph(args)
    fn = _degree_fn(args.method, args.max_ball)
    try:
        value = m_s_degree(g, fn)
    except PreconditionError as exc:
        raise InputError(f"method {args.method} does not apply to every vertex: {exc}") from exc
    return 0, [str(value)], {"method": args.method, "m_s": value}


def cmd_family(args):
    res = sb_family(args.family, args.n, args.m, verify=args.emit_witness or args.verify, exact=args.exact, budget=args.budget)
    lines = [f"{args.family} {res.params}: S_b = {res.value} ({res.provenance})"]
    if args.emit_witness and res.witness is not None:
        lines.append(f"witness {res.witness}")
        lines.append(f"witness verified: {res.witness_ok}")
    if res.exact_value is not None:
        lines.append(f"exact: {res.exact_value}")
    lines += [f"note: {n}" for n in res.notes]
    data = res.to_json()
    if not args.emit_witness:
        data.pop("witness")
    bad = res.witness_ok is False or res.exact_ok is False
    return (1 if bad else 0), lines, data


def cmd_verify_paper(args):
    from .suite import format_table, run_suite

    only = None
    if args.only:
        try:
            only = {int(x) for x in args.only.split(",")}
        except ValueError as exc:
            raise InputError(f"bad --only list {args.only!r}") from exc
    results = run_suite(args.tier, only)
    ok = all(r.passed for r in results)
    return (0 if ok else 1), format_table(results).splitlines(), {
        "tier": args.tier,
        "criteria": [r.to_json() for r in results],
        "passed": ok,
        "_seconds": {str(r.number): round(r.seconds, 3) for r in results},
    }


COMMANDS = {
    "check-star": cmd_check_star,
    "blocked": cmd_blocked,
    "eliminate": cmd_eliminate,
    "heuristic": cmd_heuristic,
    "exact": cmd_exact,
    "degree": cmd_degree,
    "msdeg": cmd_msdeg,
    "family": cmd_family,
    "verify-paper": cmd_verify_paper,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph file (edge list, or DIMACS for .col/.dimacs)")
    common.add_argument("--graph", help="graph spec such as path:8, cycle:5, kbipartite:3,5, edges:4:0-1,1-2")
    common.add_argument("--format", choices=["edgelist", "dimacs"], help="override format detection")
    common.add_argument("--budget", type=int, help="node-expansion budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", metavar="FILE", help="also write a JSON report ('-' for stdout)")

    p = argparse.ArgumentParser(prog="starb", description="Star b-chromatic number toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-star", parents=[common], help="is the coloring a star coloring?")
    s.add_argument("--coloring", help="dash form 1-2-1-3, JSON list, or a file")

    s = sub.add_parser("blocked", parents=[common], help="blocked/available colors and P4-systems")
    s.add_argument("--coloring")
    s.add_argument("--vertex", type=int)

    s = sub.add_parser("eliminate", parents=[common], help="try to eliminate color classes")
    s.add_argument("--coloring")
    s.add_argument("--color", type=int, help="one class (default: all, i.e. a minimality check)")

    s = sub.add_parser("heuristic", parents=[common], help="star recoloring from the trivial coloring")
    s.add_argument("--policy", choices=["minindex", "random"], default="minindex")

    s = sub.add_parser("exact", parents=[common], help="exact S_b, S, chi, omega, phi, chain, join")
    s.add_argument("what", choices=["sb", "s", "chi", "omega", "phi", "chain", "join"])
    s.add_argument("--with-input", dest="with_input", help="second graph file for join")
    s.add_argument("--with-graph", dest="with_graph", help="second graph spec for join")
    s.add_argument("--cross-check", action="store_true", help="join: also solve the join directly when small")

    for name, helptext in (("degree", "star degree of vertices"), ("msdeg", "m_s-degree")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("--method", choices=["oracle", "girth7", "matching"], default="oracle")
        s.add_argument("--max-ball", type=int, default=64, dest="max_ball")
        if name == "degree":
            s.add_argument("--vertex", type=int)

    s = sub.add_parser("family", parents=[common], help="closed-form values and witnesses")
    s.add_argument("family", choices=list(FAMILY_TAGS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--emit-witness", action="store_true", dest="emit_witness")
    s.add_argument("--verify", action="store_true", help="machine-check the witness")
    s.add_argument("--exact", action="store_true", help="also run the exact solver")

    s = sub.add_parser("verify-paper", parents=[common], help="run the acceptance suite")
    s.add_argument("--tier", choices=["quick", "full"], default="quick")
    s.add_argument("--only", help="comma-separated criterion numbers")
    return p


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv``, run the command and return ``(status, report)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), {}
    argv = list(sys.argv[1:] if argv is None else argv)
    t0 = time.perf_counter()
    report: dict = {"command": argv}
    try:
        status, lines, results = COMMANDS[args.command](args)
    except (InputError, GraphError, ColoringError, OracleTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, report | {"error": str(exc)}
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, report | {"error": str(exc)}
    except BudgetExhausted as exc:
        lines = [f"unknown: {exc}", f"bounds: {exc.lower} <= value <= {exc.upper}"]
        status, results = 1, {"unknown": True, "lower": exc.lower, "upper": exc.upper}
    for line in lines:
        print(line)
    seconds = results.pop("_seconds", None) if isinstance(results, dict) else None
    if args.command != "verify-paper" and args.command != "family":
        try:
            report["input_digest"] = graph_digest(_load_graph(args))
        except InputError:
            pass
    report["results"] = results
    report["status"] = status
    report["timestamp"] = {
        "utc": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "elapsed_s": round(time.perf_counter() - t0, 3),
        **({"criteria_s": seconds} if seconds else {}),
    }
    if args.json:
        text = json.dumps(report, indent=2, sort_keys=True)
        if args.json == "-":
            print(text)
        else:
            Path(args.json).write_text(text + "\n")
    return status, report


def main(argv=None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
