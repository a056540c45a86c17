"""``epg`` command line.

Exit codes: 0 success, 1 a check failed (verification, unsatisfiable
formula, construction impossible), 2 bad usage or unreadable input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bipartite, bounds, construct, exact, io, reduce3sat, render
from .graph import GraphError, WidthExceeded, clique_cover_global, clique_cover_local, ktree_sequence
from .grid import GridError, Representation, crossings, make_pretzel
from .layout import ConstructionError
from .treewidth import DelegationFailed
from .verify import VertexMismatch, verify_representation

STRATEGIES = ("global-cover", "local-cover", "degeneracy", "treewidth", "edge-coloring")


class UsageError(Exception):
    pass


def _emit_rep(rep: Representation, dest, out) -> None:
    text = io.representation_to_json(rep)
    if dest:
        Path(dest).write_text(text)
    else:
        out.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_verify(args, out) -> int:
    g = io.parse_graph(_read(args.graph))
    rep = io.representation_from_json(_read(args.rep))
    try:
        report = verify_representation(rep, g, args.max_bends)
    except VertexMismatch as exc:
        out.write(f"ok: False\n{exc}\n")
        return 1
    out.write(report.summary() + "\n")
    return 0 if report.ok else 1


def _treewidth_sequence(g, seq_path):
    if seq_path:
        seq = io.sequence_from_json(_read(seq_path))
        return ktree_sequence(g, seq.k, seq)
    for k in range(1, len(g.vertices) + 1):
        try:
            return ktree_sequence(g, k)
        except WidthExceeded:
            continue
    raise UsageError("no build sequence found")


def cmd_construct(args, out) -> int:
    g = io.parse_graph(_read(args.graph))
    s = args.strategy
    if s == "global-cover":
        cover = io.cover_from_json(_read(args.cover)) if args.cover else clique_cover_global(g)
        rep = construct.construct_from_global_cover(g, cover)
    elif s == "local-cover":
        cover = io.cover_from_json(_read(args.cover)) if args.cover else clique_cover_local(g)
        rep = construct.construct_from_local_cover(g, cover)
    elif s == "degeneracy":
        rep = construct.construct_degeneracy(g)
    elif s == "treewidth":
        from .treewidth import construct_treewidth

        rep = construct_treewidth(g, _treewidth_sequence(g, args.seq))
    else:
        rep = construct.construct_edge_coloring(g)
    _emit_rep(rep, args.output, out)
    return 0


def cmd_kmn(args, out) -> int:
    if args.strategy == "comb":
        if args.n is None:
            raise UsageError("comb needs --n")
        rep = bipartite.construct_comb(args.m, args.n)
    elif args.strategy == "kmm3":
        rep = bipartite.construct_kmm3(args.m, args.n)
    else:
        rep = bipartite.construct_m4(args.m, args.n)
    _emit_rep(rep, args.output, out)
    return 0


def cmd_bounds(args, out) -> int:
    if not 1 <= args.m <= args.n:
        raise UsageError("need 1 <= m <= n")
    res = bounds.kmn_bend_bounds(args.m, args.n)
    out.write(f"lower {res.lower} upper {res.upper}\n")
    lo, up = res.attaining()
    out.write(f"lower from: {', '.join(lo)}\n")
    out.write(f"upper from: {', '.join(up)}\n")
    i, t = bounds.reference_interval_track(args.m, args.n)
    out.write(f"interval number {i} track number {t}\n")
    return 0


def cmd_pretzel(args, out) -> int:
    if args.blowup is None:
        p, q = make_pretzel(args.j)
        rep = Representation({"p1": p, "p2": q})
        out.write(f"crossings {crossings(p, q)}\n")
    else:
        bp = bipartite.blowup_pretzel(args.blowup, args.j)
        rep = Representation(bp.paths)
        total = sum(crossings(bp.paths[u], bp.paths[v]) for u, v in _pairs(bp.paths))
        out.write(f"total crossings {total}\n")
    if args.output:
        io.write_representation(rep, args.output)
    return 0


def _pairs(labels):
    labels = list(labels)
    return [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]


def cmd_crossings(args, out) -> int:
    rep = io.representation_from_json(_read(args.rep))
    for v in (args.u, args.v):
        if v not in rep:
            raise UsageError(f"no path for {v}")
    out.write(f"{crossings(rep[args.u], rep[args.v])}\n")
    return 0


def cmd_exact(args, out) -> int:
    g = io.parse_graph(_read(args.graph))
    budget = exact.SearchBudget(max_k=args.max_k, time_limit=args.time_limit)
    res = exact.exact_bend_number(g, budget)
    if isinstance(res, exact.Exact):
        out.write(f"exact {res.k}\n")
    elif isinstance(res, exact.LowerBoundOnly):
        out.write(f"lower bound {res.k}\n")
    else:
        out.write(f"exhausted ({res.reason})\n")
    return 0


def cmd_reduce(args, out) -> int:
    f = reduce3sat.parse_formula(_read(args.formula))
    rg = reduce3sat.build_reduction_graph(f)
    if args.output:
        io.write_graph(rg.graph, args.output)
    out.write(f"vertices {len(rg.graph.vertices)} edges {len(rg.graph.edges)}\n")
    if args.assign is None:
        return 0
    if args.assign == "auto":
        a = reduce3sat.brute_force_one_in_three(f)
        if a is None:
            out.write("unsatisfiable\n")
            return 1
    else:
        a = reduce3sat.Assignment(io.assignment_from_text(_read(args.assign)))
    out.write("true: " + " ".join(x for x in f.variables if a.truth.get(x)) + "\n")
    try:
        rep = reduce3sat.representation_from_assignment(f, a)
    except reduce3sat.AssignmentInvalid as exc:
        out.write(f"{exc}\n")
        return 1
    if args.rep:
        io.write_representation(rep, args.rep)
    return 0


def cmd_render(args, out) -> int:
    rep = io.representation_from_json(_read(args.rep))
    opts = render.RenderOptions(
        cell_size=args.cell_size, path_offset=args.offset, labels=not args.no_labels, crossings=args.crossings
    )
    Path(args.output).write_text(render.render_svg(rep, opts))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="epg", description="Bend-bounded grid path representations of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--max-bends", type=int)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("construct", help="build a representation of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--strategy", required=True, choices=STRATEGIES)
    p.add_argument("--cover")
    p.add_argument("--seq")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("kmn", help="representation of K_{m,n}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--strategy", choices=("comb", "kmm3", "m4"), default="comb")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_kmn)

    p = sub.add_parser("bounds", help="known bend-number bounds for K_{m,n}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("pretzel", help="pretzel pair or blown-up pretzel")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--blowup", type=int, metavar="M")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_pretzel)

    p = sub.add_parser("crossings", help="count crossings of two paths")
    p.add_argument("--rep", required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(fn=cmd_crossings)

    p = sub.add_parser("exact", help="exhaustive bend-number search for tiny graphs")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-k", type=int, default=2)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("reduce", help="graph and single-bend drawing for a one-in-three formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--assign", help="'auto' or a file of 'name true|false' lines")
    p.add_argument("-o", "--output", help="write G_F here")
    p.add_argument("--rep", help="write the representation here")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("render", help="draw a representation as SVG")
    p.add_argument("--rep", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--cell-size", type=float, default=24.0)
    p.add_argument("--offset", type=float, default=2.5)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("--crossings", action="store_true", help="mark crossing points")
    p.set_defaults(fn=cmd_render)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args, out)
    except (UsageError, io.FormatError, GraphError, GridError, reduce3sat.FormulaError, ValueError) as exc:
        err.write(f"epg {args.command}: {exc}\n")
        return 2
    except (ConstructionError, DelegationFailed) as exc:
        err.write(f"epg {args.command}: construction failed: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
