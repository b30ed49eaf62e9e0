"""Command-line entry point: ``mnet generate|analyze|paths|compare``.

Exit codes: 0 success, 2 usage or precondition failure, 3 enumeration cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import baselines
from .graph import GraphError, MGraph, build_mgraph, export_graph
from .matrix import (
    MatrixError,
    Polarity,
    Variant,
    build_mn_matrix,
    build_sign_matrix,
    format_csv,
    format_grid,
    to_binary,
    valid_type2_orders,
)
from .metrics import (
    bfs_levels,
    connectivity_index,
    diameter,
    format_fraction,
    hop_matrix,
    hop_profile,
    mean_hop_distance,
)
from .paths import (
    DEFAULT_PATH_CAP,
    BudgetExceeded,
    disjoint_upper_bound,
    enumerate_simple_paths,
    fault_tolerance_report,
    max_node_disjoint_paths,
    vertex_connectivity,
)

EXIT_USAGE = 2
EXIT_CAP = 3
KAPPA_AUTO_LIMIT = 64

_POLARITY = {"odd": Polarity.ODD_POSITIVE, "even": Polarity.EVEN_POSITIVE}


class UsageError(Exception):
    pass


def _mgraph(n: int, polarity: str) -> MGraph:
    base = build_mn_matrix(n, Variant.TYPE_II)
    return build_mgraph(to_binary(build_sign_matrix(base, _POLARITY[polarity])))


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _json(payload: dict) -> str:
    return json.dumps({"schema": 1, **payload}, indent=2) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "".join(
        "  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells
    )


# -- generate ----------------------------------------------------------------


def cmd_generate(args) -> str:
    variant = Variant.TYPE_I if args.type == "I" else Variant.TYPE_II
    base = build_mn_matrix(args.n, variant)
    if args.stage == "graph":
        if variant is Variant.TYPE_I:
            raise UsageError("graph stage needs a Type II matrix (n+1 prime)")
        graph = build_mgraph(to_binary(build_sign_matrix(base, _POLARITY[args.polarity])))
        fmt = {"text": "adjacency", "csv": "edges", "dot": "dot", "json": "json"}[args.format]
        return export_graph(graph, fmt)
    if args.format == "dot":
        raise UsageError("dot output is only available for --stage graph")
    if args.stage == "mn":
        m = base
    else:
        m = build_sign_matrix(base, _POLARITY[args.polarity])
        if args.stage == "binary":
            m = to_binary(m)
    if args.format == "csv":
        return format_csv(m.entries)
    if args.format == "json":
        return _json({"n": args.n, "type": variant.value, "stage": args.stage,
                      "polarity": None if args.stage == "mn" else args.polarity,
                      "matrix": m.tolist()})
    return format_grid(m.entries)


# -- analyze -----------------------------------------------------------------


def profile_table_rows(max_prime: int) -> list[list[int]]:
    rows = []
    for n in valid_type2_orders(max_prime):
        prof = hop_profile(_mgraph(n, "odd"), 1)
        rows.append([n + 1, n, 2 * n, n // 2, *prof.level_counts])
    return rows


def cmd_profile_table(args) -> str:
    rows = profile_table_rows(args.max_prime)
    width = max((len(r) - 4 for r in rows), default=4)
    header = ["n+1", "n", "N", "p"] + [f"{h}-hop" for h in range(1, width + 1)]
    if args.format == "csv":
        return _csv([header] + rows)
    if args.format == "json":
        return _json({"table1": [dict(zip(["n+1", "n", "N", "p"], r[:4]), hops=r[4:]) for r in rows]})
    return _table(header, rows)


def _hop_matrix_text(m: list[list[int]]) -> str:
    n = len(m)
    header = [""] + [str(v) for v in range(1, n + 1)]
    return _table(header, [[i + 1, *row] for i, row in enumerate(m)])


def cmd_analyze(args) -> str:
    if args.table1:
        return cmd_profile_table(args)
    if args.n is None:
        raise UsageError("analyze needs --n or --table1")
    g = _mgraph(args.n, args.polarity)
    if not 1 <= args.source <= g.node_count:
        raise UsageError(f"--source must be in 1..{g.node_count}")
    prof = hop_profile(g, args.source)
    mean = mean_hop_distance(prof)
    diam = diameter(g)
    ci = connectivity_index(g)
    kappa = vertex_connectivity(g) if (args.kappa or g.node_count <= KAPPA_AUTO_LIMIT) else None
    matrix = hop_matrix(g) if args.hop_matrix else None
    tree = bfs_levels(g, args.source) if args.tree else None

    if args.format == "json":
        payload = {
            "n": args.n, "p": g.p, "N": g.node_count, "polarity": args.polarity,
            "source": args.source, "hop_profile": list(prof.level_counts),
            "diameter": diam, "mean_hop": {"exact": _frac(mean), "decimal": float(mean)},
            "connectivity_index": _frac(ci), "vertex_connectivity": kappa,
        }
        if tree:
            payload["spanning_tree"] = {"levels": tree.levels(), "edges": tree.edges()}
        if matrix is not None:
            payload["hop_matrix"] = matrix
        return _json(payload)
    if args.format == "csv":
        if matrix is not None:
            return _csv(matrix)
        return _csv([["n", "p", "N", "source", "diameter", "mean_hop", "mean_hop_decimal",
                      "connectivity_index", "vertex_connectivity"]
                     + [f"{h}-hop" for h in range(1, len(prof.level_counts) + 1)],
                     [args.n, g.p, g.node_count, args.source, diam, _frac(mean),
                      format_fraction(mean, 4), _frac(ci), "" if kappa is None else kappa,
                      *prof.level_counts]])
    out = [
        f"M-network (p={g.p}, N={g.node_count}) n={args.n} polarity={args.polarity}",
        f"source: {args.source}",
        "hop profile: " + " ".join(map(str, prof.level_counts)),
        f"diameter: {diam}",
        f"mean hop distance: {_frac(mean)} = {format_fraction(mean)}",
        f"connectivity index (p/n): {_frac(ci)} = {format_fraction(ci)}",
        "vertex connectivity: " + ("skipped (use --kappa)" if kappa is None else str(kappa)),
    ]
    if tree:
        out.append("spanning tree levels:")
        for depth, nodes in enumerate(tree.levels()):
            out.append(f"  {depth}: " + " ".join(map(str, nodes)))
        out.append("spanning tree edges: " + " ".join(f"{u}-{v}" for u, v in tree.edges()))
    text = "\n".join(out) + "\n"
    if matrix is not None:
        text += "hop matrix:\n" + _hop_matrix_text(matrix)
    return text


# -- paths -------------------------------------------------------------------


def _bounds(g, src, dst):
    d_short = bfs_levels(g, src).level[dst]
    diam = diameter(g)
    return {
        "shortest_distance": d_short,
        "diameter": diam,
        "bound_at_shortest": disjoint_upper_bound(g.node_count, max(d_short, 2)),
        "bound_at_diameter": disjoint_upper_bound(g.node_count, max(diam, 2)),
    }


def cmd_paths(args) -> str:
    g = _mgraph(args.n, args.polarity)
    for name, v in (("--src", args.src), ("--dst", args.dst)):
        if not 1 <= v <= g.node_count:
            raise UsageError(f"{name} must be in 1..{g.node_count}")
    if args.src == args.dst:
        raise UsageError("source equals destination")
    disjoint = max_node_disjoint_paths(g, args.src, args.dst)
    bounds = _bounds(g, args.src, args.dst)
    enum = report = None
    if not args.disjoint:
        enum = enumerate_simple_paths(g, args.src, args.dst, args.max_hops, args.cap)
        report = fault_tolerance_report(enum, g)

    if args.format == "json":
        payload = {"n": args.n, "p": g.p, "N": g.node_count,
                   "source": args.src, "destination": args.dst}
        if enum is not None:
            payload["total"] = enum.total
            payload["paths"] = {str(h): [list(p) for p in ps] for h, ps in enum.paths_by_hops.items()}
            payload["fault_tolerance"] = [
                {"hops": c.hops, "paths": c.path_count, "nodes_used": c.nodes_used,
                 "node_failures": c.node_failures, "edge_failures": c.edge_failures}
                for c in report.classes
            ]
        payload["disjoint"] = {"count": disjoint.count, "paths": [list(p) for p in disjoint.paths],
                               **bounds}
        return _json(payload)

    out = [f"M-network (p={g.p}, N={g.node_count}) paths {args.src} -> {args.dst}"]
    if enum is not None:
        out.append(f"total successful paths: {enum.total}")
        for h, ps in enum.paths_by_hops.items():
            out.append("")
            out.append(f"{h}-hop paths ({len(ps)}):")
            out.extend(",".join(map(str, p)) for p in ps)
        out.append("")
    out.append(f"node-disjoint paths: {disjoint.count}")
    out.extend(",".join(map(str, p)) for p in disjoint.paths)
    for key, d in (("shortest", bounds["shortest_distance"]), ("diameter", bounds["diameter"])):
        b = bounds[f"bound_at_{key}"]
        out.append(f"upper bound floor((N-2)/(d-1)) at d={max(d, 2)} ({key}): {b}"
                   f" achieved {disjoint.count} gap {b - disjoint.count}")
    if report is not None:
        out.append("")
        out.append("fault tolerance:")
        out.append(_table(["hops", "paths", "nodes_used", "node_failures", "edge_failures"],
                          [[c.hops, c.path_count, c.nodes_used, c.node_failures, c.edge_failures]
                           for c in report.classes]).rstrip("\n"))
        for c in report.classes:
            out.append(f"{c.hops}-hop class: {c.node_failures}-node, "
                       f"{c.edge_failures}-edge fault-tolerant")
    return "\n".join(out) + "\n"


# -- compare -----------------------------------------------------------------


def _ints(text: str, count: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got {text!r}")
    if len(vals) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got {text!r}")
    return vals


class _SpecAction(argparse.Action):
    """Collect topology flags into one list, preserving command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        specs = getattr(namespace, "specs", None) or []
        specs.append((self.const, values))
        namespace.specs = specs


_SPEC_ARITY = {"mnet": 1, "hypercube": 1, "debruijn": 2, "shufflenet": 2, "msn": 2}
_SPEC_CLASS = {
    "mnet": baselines.MNetwork,
    "hypercube": baselines.Hypercube,
    "debruijn": baselines.DeBruijn,
    "shufflenet": baselines.ShuffleNet,
    "msn": baselines.MSN,
}


def _make_spec(kind: str, raw: str):
    vals = _ints(raw, _SPEC_ARITY[kind])
    if kind == "msn" and (vals[0] % 2 or vals[1] % 2):
        raise UsageError(f"--msn needs even dimensions, got {raw}")
    if kind == "hypercube" and vals[0] < 1:
        raise UsageError("--hypercube needs p >= 1")
    if kind in ("debruijn",) and (vals[0] < 2 or vals[1] < 2):
        raise UsageError("--debruijn needs delta >= 2 and D >= 2")
    if kind == "shufflenet" and (vals[0] < 2 or vals[1] < 1):
        raise UsageError("--shufflenet needs p >= 2 and k >= 1")
    return _SPEC_CLASS[kind](*vals)


def _num(x: float | None) -> str:
    if x is None:
        return "-"
    return str(int(x)) if float(x).is_integer() else f"{x:.2f}"


def cmd_compare(args) -> str:
    raw = getattr(args, "specs", None) or []
    if not raw:
        raise UsageError("compare needs at least one topology flag")
    try:
        specs = [_make_spec(kind, value) for kind, value in raw]
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc))
    rows = baselines.compare_topologies(specs)
    if args.format == "json":
        return _json({"rows": [
            {"name": r.name, "label": r.label, "directed": r.directed, "degree": r.degree,
             "size": r.size, "mean_hop": {"exact": _frac(r.mean_hop), "decimal": float(r.mean_hop)},
             "diameter": r.diameter, "formula_mean_hop": r.formula_mean_hop,
             "formula_diameter": r.formula_diameter}
            for r in rows]})
    if args.format == "csv":
        return _csv([["network", "instance", "directed", "degree", "size", "mean_hop",
                      "mean_hop_decimal", "diameter", "formula_mean_hop", "formula_diameter"]] +
                    [[r.name, r.label, int(r.directed), r.degree, r.size, _frac(r.mean_hop),
                      format_fraction(r.mean_hop, 4), r.diameter,
                      "" if r.formula_mean_hop is None else f"{r.formula_mean_hop:.4f}",
                      "" if r.formula_diameter is None else f"{r.formula_diameter:.4f}"]
                     for r in rows])
    return _table(
        ["Network", "Instance", "Degree", "Size", "Mean-Hop", "Diameter",
         "Mean-Hop(formula)", "Diameter(formula)"],
        [[r.name, r.label, r.degree, r.size,
          f"{_frac(r.mean_hop)}={format_fraction(r.mean_hop)}", r.diameter,
          _num(r.formula_mean_hop), _num(r.formula_diameter)] for r in rows],
    )


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mnet", description="M-network construction and analysis")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default="text"):
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", help="write to FILE instead of standard output")

    g = sub.add_parser("generate", help="emit a residue, sign or binary matrix, or the graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--type", choices=["I", "II"], default="II")
    g.add_argument("--stage", choices=["mn", "sign", "binary", "graph"], default="binary")
    g.add_argument("--polarity", choices=sorted(_POLARITY), default="odd")
    common(g, ["text", "csv", "json", "dot"])
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="hop profile, diameter, mean hop, hop-profile table")
    a.add_argument("--n", type=int)
    a.add_argument("--polarity", choices=sorted(_POLARITY), default="odd")
    a.add_argument("--source", type=int, default=1)
    a.add_argument("--hop-matrix", action="store_true")
    a.add_argument("--tree", action="store_true", help="print BFS spanning-tree levels")
    a.add_argument("--kappa", action="store_true",
                   help=f"force vertex connectivity (automatic for N <= {KAPPA_AUTO_LIMIT})")
    a.add_argument("--table1", action="store_true", help="hop profiles for every valid n up to --max-prime")
    a.add_argument("--max-prime", type=int, default=19)
    common(a, ["text", "csv", "json"])
    a.set_defaults(func=cmd_analyze)

    p = sub.add_parser("paths", help="path enumeration, disjoint paths, fault tolerance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--polarity", choices=sorted(_POLARITY), default="odd")
    p.add_argument("--src", type=int, required=True)
    p.add_argument("--dst", type=int, required=True)
    p.add_argument("--max-hops", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    p.add_argument("--disjoint", action="store_true", help="only the node-disjoint section")
    common(p, ["text", "json"])
    p.set_defaults(func=cmd_paths)

    c = sub.add_parser("compare", help="compare against classical topologies")
    c.add_argument("--mnet", action=_SpecAction, const="mnet", metavar="N")
    c.add_argument("--hypercube", action=_SpecAction, const="hypercube", metavar="P")
    c.add_argument("--debruijn", action=_SpecAction, const="debruijn", metavar="DELTA,D")
    c.add_argument("--shufflenet", action=_SpecAction, const="shufflenet", metavar="P,K")
    c.add_argument("--msn", action=_SpecAction, const="msn", metavar="ROWS,COLS")
    common(c, ["text", "csv", "json"])
    c.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except BudgetExceeded as exc:
        print(f"mnet: error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, MatrixError, GraphError, ValueError) as exc:
        print(f"mnet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
