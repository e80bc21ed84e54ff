"""DIMACS edge-format and graph6 serialization.

DIMACS grammar (strict)::

    c <anything>          comment, anywhere
    p edge <n> <m>        exactly one header, before any edge line
    e <u> <v>             1 <= u, v <= n, u != v

Vertices ``1..n`` map to labels ``0..n-1``.  Duplicate edge lines collapse,
and ``m`` must equal the number of distinct edges.  Blank lines are ignored.
"""

from __future__ import annotations

from .errors import GraphError, InvalidEdge, SelfLoop
from .graph import Graph, build


class DimacsSyntaxError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _int(tok: str, lineno: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise DimacsSyntaxError(f"expected an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise DimacsSyntaxError(f"negative value {value}", lineno)
    return value


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        kind = toks[0]
        if kind == "p":
            if n is not None:
                raise DimacsSyntaxError("second 'p' header", lineno)
            if len(toks) != 4 or toks[1] != "edge":
                raise DimacsSyntaxError("header must be 'p edge <n> <m>'", lineno)
            n, m = _int(toks[2], lineno), _int(toks[3], lineno)
        elif kind == "e":
            if n is None:
                raise DimacsSyntaxError("edge line before 'p' header", lineno)
            if len(toks) != 3:
                raise DimacsSyntaxError("edge line must be 'e <u> <v>'", lineno)
            u, v = _int(toks[1], lineno), _int(toks[2], lineno)
            if u == v:
                raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidEdge(f"line {lineno}: edge ({u},{v}) outside 1..{n}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise DimacsSyntaxError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise DimacsSyntaxError("missing 'p edge <n> <m>' header")
    if len(edges) != m:
        raise DimacsSyntaxError(f"header declares {m} edges, found {len(edges)} distinct")
    return build(range(n), sorted(edges))


def serialize_dimacs(g: Graph, comment: str | None = None) -> str:
    """DIMACS text for ``g``; vertex at sorted position ``i`` is written as ``i+1``."""
    pos = {x: i + 1 for i, x in enumerate(g.vertices)}
    lines = [f"c {comment}"] if comment else []
    es = g.edges()
    lines.append(f"p edge {g.n} {len(es)}")
    lines += [f"e {pos[u]} {pos[v]}" for u, v in es]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (optional ``>>graph6<<`` header)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise DimacsSyntaxError(f"invalid graph6 record {line!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        raise DimacsSyntaxError(f"truncated graph6 size field in {line!r}")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise DimacsSyntaxError(f"graph6 record has {len(rest)} data bytes, expected {(nbits + 5) // 6}")
    bits = []
    for d in rest:
        bits.extend((d >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build(range(n), edges)


def parse_graph6_file(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
