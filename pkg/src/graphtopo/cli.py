"""Command-line entry point.

Exit status: 0 for a determinate result, 2 when the answer is unknown within
the given bounds, 1 on errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .classification import CLASSIFY_BUDGET, basic_graph_of, classify
from .contractibility import is_contractible
from .cubical import rasterize, read_shape, run_experiment
from .equivalence import DEFAULT_ATTACH_BOUND, DEFAULT_BUDGET, DEFAULT_DEPTH, UNKNOWN, homotopy_equivalent
from .graph import GraphError, read_graph, serialize_graph
from .invariants import DEFAULT_MAX_COUNT, DEFAULT_MAX_LEN, enumerate_curves, homology, is_simply_connected
from .invariants import UNKNOWN as SC_UNKNOWN
from .transforms import compress

OK, ERROR, UNDETERMINED = 0, 1, 2


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    p.add_argument("--format", choices=("lines", "human"), default="lines")
    p.add_argument("--trace", help="write the transformation trace to this file")
    p.add_argument("--budget", type=_positive, help="node/subset budget for searches")
    p.add_argument("--depth", type=_positive, default=DEFAULT_DEPTH, help="search depth for equivalence")
    p.add_argument("--attach-bound", type=_positive, default=DEFAULT_ATTACH_BOUND, help="largest rim for point attachments")
    p.add_argument("--subgraph-cap", type=_positive, help="largest simple subgraph tried on big graphs")
    p.add_argument("--threads", type=int, default=1, help="worker processes (0 = all cores)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="graphtopo", description="Homotopy of graphs via contractible transformations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contractible", parents=[common], help="decide contractibility")
    p.add_argument("graph")
    p = sub.add_parser("compress", parents=[common], help="reduce to a compressed graph")
    p.add_argument("graph")
    p = sub.add_parser("invariants", parents=[common], help="Euler characteristic and homology")
    p.add_argument("graph")
    p.add_argument("--max-dim", type=int)
    p = sub.add_parser("equiv", parents=[common], help="decide homotopy equivalence of two graphs")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("classify", parents=[common], help="classes of compressed graphs up to an order")
    p.add_argument("--order", type=_positive, required=True)
    p = sub.add_parser("basic-of", parents=[common], help="basic graph, complexity and weight")
    p.add_argument("graph")
    p = sub.add_parser("rasterize", parents=[common], help="digital model of a shape")
    p.add_argument("shape")
    p.add_argument("--cell-size", type=_positive_float, help="cube side L (overrides the shape file)")
    p.add_argument("--cells", help="export occupied cells to this file")
    p.add_argument("--expect", help="graph file the compressed model should match")
    p = sub.add_parser("curves", parents=[common], help="simple closed curves")
    p.add_argument("graph")
    p.add_argument("--max-len", type=_positive, default=DEFAULT_MAX_LEN)
    p.add_argument("--max-count", type=_positive, default=DEFAULT_MAX_COUNT)
    p = sub.add_parser("simply-connected", parents=[common], help="simple connectivity")
    p.add_argument("graph")
    p.add_argument("--max-len", type=_positive, default=DEFAULT_MAX_LEN)
    return parser


def _align(text: str) -> str:
    """Pad columns within each run of consecutive multi-field lines."""
    rows = [line.split(" ") for line in text.splitlines()]
    out: list[str] = []
    i = 0
    while i < len(rows):
        if len(rows[i]) < 2:
            out.append(" ".join(rows[i]))
            i += 1
            continue
        j = i
        while j < len(rows) and len(rows[j]) >= 2:
            j += 1
        run = rows[i:j]
        m = min(len(r) for r in run)
        widths = [max(len(r[k]) for r in run) for k in range(m)]
        for r in run:
            head = "  ".join(r[k].ljust(widths[k]) for k in range(m))
            out.append(" ".join([head] + r[m:]).rstrip())
        i = j
    return "\n".join(out) + "\n"


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def _run(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "contractible":
        g = read_graph(args.graph)
        verdict, trace = is_contractible(g, with_trace=True)
        if args.trace and trace is not None:
            _write(args.trace, trace.to_text())
        return ("CONTRACTIBLE\n" if verdict else "NOT-CONTRACTIBLE\n"), OK

    if cmd == "compress":
        g = read_graph(args.graph)
        h, trace = compress(g, args.subgraph_cap)
        if args.trace:
            _write(args.trace, trace.to_text())
        return serialize_graph(h), OK

    if cmd == "invariants":
        return homology(read_graph(args.graph), args.max_dim).to_text() + "\n", OK

    if cmd == "equiv":
        a, b = read_graph(args.a), read_graph(args.b)
        v = homotopy_equivalent(
            a, b, args.budget or DEFAULT_BUDGET, args.depth, args.attach_bound, args.subgraph_cap
        )
        if args.trace and v.trace is not None:
            _write(args.trace, v.trace.to_text())
        return v.to_text(), (UNDETERMINED if v.outcome == UNKNOWN else OK)

    if cmd == "classify":
        table = classify(args.order, args.budget or CLASSIFY_BUDGET, args.depth, args.attach_bound, args.threads)
        text = table.to_text()
        notes = table.compare_reference()
        if notes:
            text += "\n" + "\n".join(f"# {n}" for n in notes) + "\n"
        return text, OK

    if cmd == "basic-of":
        g = read_graph(args.graph)
        res = basic_graph_of(g, budget=args.budget or CLASSIFY_BUDGET)
        if res is None:
            return "UNKNOWN\n", UNDETERMINED
        return f"complexity={res.complexity} weight={res.weight}\n" + serialize_graph(res.basic), OK

    if cmd == "rasterize":
        shape, extras = read_shape(args.shape)
        L = args.cell_size or extras.get("L")
        if L is None:
            raise GraphError("no cell size: pass --cell-size or 'param L' in the shape file")
        expected = read_graph(args.expect) if args.expect else None
        report = run_experiment(shape, L, expected=expected, subgraph_cap=args.subgraph_cap, threads=args.threads)
        if args.cells:
            _write(args.cells, rasterize(shape, L, threads=args.threads).to_text())
        return report.to_text(), OK

    if cmd == "curves":
        curves, complete = enumerate_curves(read_graph(args.graph), args.max_len, args.max_count)
        text = "".join(" ".join(map(str, c.points)) + "\n" for c in curves)
        text += f"# complete={'yes' if complete else 'no'}\n"
        return text, (OK if complete else UNDETERMINED)

    if cmd == "simply-connected":
        g = read_graph(args.graph)
        kw = {"max_len": args.max_len}
        if args.budget:
            kw["budget"] = args.budget
        v = is_simply_connected(g, **kw)
        return v.upper() + "\n", (UNDETERMINED if v == SC_UNKNOWN else OK)

    raise AssertionError(cmd)  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, status = _run(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    if args.format == "human":
        text = _align(text)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
