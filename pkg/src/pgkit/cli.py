"""Command-line interface.

JSON goes to stdout, diagnostics to stderr.  Vertices are numbered 1..n in
all input and output, as in DIMACS files.

Exit status: 0 computed (whatever the verdict), 1 internal invariant
violation, 2 input error, 3 size-limit refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from . import analysis, berge, construct, iso, lovasz
from .dimacs import parse_dimacs, parse_graph6_file, serialize_dimacs
from .errors import GraphError, InvariantViolation, SizeLimitError
from .graph import Graph, complement
from .harness import Theorem, hole_json, perfectness_json, run_battery

log = logging.getLogger("pgkit")

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


class UsageError(GraphError):
    pass


def read_graph(path: str, fmt: str = "dimacs") -> Graph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "graph6":
        graphs = parse_graph6_file(text)
        if len(graphs) != 1:
            raise UsageError(f"{path}: expected exactly one graph6 record, found {len(graphs)}")
        return graphs[0]
    return parse_dimacs(text)


def _ext(g: Graph, v: int) -> int:
    return g.index(v) + 1


def _int_vertex(g: Graph, k: int) -> int:
    if not 1 <= k <= g.n:
        raise UsageError(f"vertex {k} outside 1..{g.n}")
    return g.vertices[k - 1]


def _coloring_json(g: Graph, f) -> dict[str, int]:
    return {str(_ext(g, v)): f[v] for v in g.vertices}


def parse_mult(text: str, g: Graph) -> dict[int, int]:
    """``"v:k,..."`` with 1-based vertices; unlisted vertices keep multiplicity 1."""
    mult = {v: 1 for v in g.vertices}
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            v, k = item.split(":")
            mult[_int_vertex(g, int(v))] = int(k)
        except ValueError:
            raise UsageError(f"bad multiplicity entry {item!r}; expected v:k") from None
    return mult


# -- commands ----------------------------------------------------------------

def cmd_omega(args) -> Any:
    g = read_graph(args.file, args.format)
    n, k = analysis.clique_number(g)
    return {"value": n, "witness": [_ext(g, v) for v in k]}


def cmd_alpha(args) -> Any:
    g = read_graph(args.file, args.format)
    n, s = analysis.stability_number(g)
    return {"value": n, "witness": [_ext(g, v) for v in s]}


def cmd_chi(args) -> Any:
    g = read_graph(args.file, args.format)
    n, f = analysis.chromatic_number(g)
    return {"value": n, "witness": _coloring_json(g, f)}


def cmd_perfect(args) -> Any:
    g = read_graph(args.file, args.format)
    return perfectness_json(g, analysis.is_perfect(g))


def cmd_berge(args) -> Any:
    g = read_graph(args.file, args.format)
    verdict, cert = berge.is_berge(g)
    out: dict[str, Any] = {"verdict": verdict}
    if cert is not None:
        out["certificate"] = hole_json(g, cert)
    return out


def cmd_complement(args) -> str:
    return serialize_dimacs(complement(read_graph(args.file, args.format)))


def cmd_replicate(args) -> str:
    g = read_graph(args.file, args.format)
    a = _int_vertex(g, args.vertex)
    if args.new_label is None:
        a2 = construct.fresh_vertex(g)
    else:
        # external numbering: label L-1 internally
        a2 = args.new_label - 1
        if a2 < 0:
            raise UsageError("--new-label must be >= 1")
    return serialize_dimacs(construct.repeat_vertex(g, a, a2))


def cmd_expand(args) -> str:
    g = read_graph(args.file, args.format)
    return serialize_dimacs(construct.expand(g, parse_mult(args.mult, g)))


def cmd_iso(args) -> Any:
    g = read_graph(args.file1, args.format)
    g2 = read_graph(args.file2, args.format)
    phi = iso.find_bijection(g, g2)
    if phi is None:
        return {"isomorphic": False}
    return {"isomorphic": True, "map": {str(_ext(g, x)): _ext(g2, y) for x, y in phi.items()}}


def cmd_extend_coloring(args) -> Any:
    g = read_graph(args.file, args.format)
    a = _int_vertex(g, args.vertex)
    _, f = analysis.chromatic_number(g)
    a2 = construct.fresh_vertex(g)
    ext = lovasz.extend(g, f, a, a2)
    g2 = construct.repeat_vertex(g, a, a2)
    return {
        "case": ext.case.value,
        "new_vertex": _ext(g2, a2),
        "coloring": _coloring_json(g2, ext.coloring),
        "colors_used": list(analysis.colors_used(g2, ext.coloring)),
        "omega_after": analysis.clique_number(g2)[0],
    }


def cmd_verify(args) -> Any:
    report = run_battery(args.theorem, args.max_n, args.min_n, jobs=args.jobs)
    log.info("%s: %d graphs checked, %d failures", report.theorem.value,
             report.graphs_checked, len(report.failures))
    return report.to_dict()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pgkit", description="Exact perfect-graph analysis.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=("file",)):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f, help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=("dimacs", "graph6"), default="dimacs")
        sp.set_defaults(func=func)
        return sp

    add("omega", cmd_omega, "clique number with a maximum clique")
    add("alpha", cmd_alpha, "stability number with a maximum stable set")
    add("chi", cmd_chi, "chromatic number with an optimal colouring")
    add("perfect", cmd_perfect, "perfectness with least failing induced subgraph")
    add("berge", cmd_berge, "odd hole / odd antihole search")
    add("complement", cmd_complement, "complement graph as DIMACS")
    sp = add("replicate", cmd_replicate, "repeat a vertex; DIMACS output is renumbered 1..n")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--new-label", type=int)
    sp = add("expand", cmd_expand, "replace vertices by cliques")
    sp.add_argument("--mult", required=True, help='e.g. "1:2,2:3"')
    add("iso", cmd_iso, "isomorphism with vertex map", files=("file1", "file2"))
    sp = add("extend-coloring", cmd_extend_coloring, "optimal colouring after repeating a vertex")
    sp.add_argument("--vertex", type=int, required=True)

    sp = sub.add_parser("verify", help="exhaustive theorem battery")
    sp.add_argument("--theorem", choices=[t.value for t in Theorem], required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--min-n", type=int, help="smallest size checked (default: max-n)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        result = args.func(args)
    except SizeLimitError as exc:
        print(f"pgkit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvariantViolation as exc:
        print(f"pgkit: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GraphError as exc:
        print(f"pgkit: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        json.dump(result, sys.stdout)
        sys.stdout.write("\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
