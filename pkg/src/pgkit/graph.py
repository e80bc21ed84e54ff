"""Finite simple undirected graphs.

A :class:`Graph` is a vertex :class:`~pgkit.ordset.OrdSet` plus adjacency
stored as one bitmask row per vertex, indexed by the vertex's position in
the sorted vertex sequence.  Every public constructor guarantees the three
structural invariants: irreflexive, symmetric, and confined to the vertex set.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import NamedTuple

from .errors import InvalidEdge, InvariantViolation, NotASubset, SelfLoop, UnknownVertex
from .ordset import Label, OrdSet, mask_of, subset_from_mask


class EdgePair(NamedTuple):
    u: Label
    v: Label

    @classmethod
    def of(cls, a: Label, b: Label) -> EdgePair:
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    __slots__ = ("_vertices", "_rows", "_pos")

    def __init__(self, vertices: OrdSet, rows: tuple[int, ...]) -> None:
        # Trusted constructor; use build() for unchecked input.
        object.__setattr__(self, "_vertices", vertices)
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_pos", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- views ---------------------------------------------------------------
    @property
    def vertices(self) -> OrdSet:
        return self._vertices

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def full_mask(self) -> int:
        return (1 << len(self._vertices)) - 1

    def index(self, v: Label) -> int:
        pos = self._pos
        if pos is None:
            pos = {x: i for i, x in enumerate(self._vertices.elems)}
            object.__setattr__(self, "_pos", pos)
        try:
            return pos[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} not in graph") from None

    def __contains__(self, v: object) -> bool:
        return v in self._vertices

    def __iter__(self) -> Iterator[Label]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def edges(self) -> tuple[EdgePair, ...]:
        xs = self._vertices.elems
        out = []
        for i, row in enumerate(self._rows):
            r = row >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append(EdgePair(xs[i], xs[j]))
                r >>= 1
                j += 1
        return tuple(out)

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def mask_to_set(self, mask: int) -> OrdSet:
        return subset_from_mask(self._vertices, mask)

    def set_to_mask(self, s: Iterable[Label]) -> int:
        m = 0
        for x in s:
            m |= 1 << self.index(x)
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._vertices, self._rows))

    def __repr__(self) -> str:
        es = " ".join(f"{u}-{v}" for u, v in self.edges())
        return f"Graph(V={self._vertices!r}, E=[{es}])"

    def validate(self) -> None:
        """Re-check all structural invariants; raise InvariantViolation on failure."""
        n = len(self._vertices)
        if len(self._rows) != n:
            raise InvariantViolation("row count differs from vertex count")
        full = (1 << n) - 1
        for i, row in enumerate(self._rows):
            if row & ~full:
                raise InvariantViolation(f"row {i} has bits outside the vertex set")
            if row >> i & 1:
                raise InvariantViolation(f"self-loop at position {i}")
            r, j = row, 0
            while r:
                if r & 1 and not self._rows[j] >> i & 1:
                    raise InvariantViolation(f"asymmetric pair ({i},{j})")
                r >>= 1
                j += 1


def build(vertices: OrdSet | Iterable[Label], edges: Iterable[tuple[Label, Label]]) -> Graph:
    """Construct a graph, rejecting self-loops and edges that leave ``vertices``."""
    vs = vertices if isinstance(vertices, OrdSet) else OrdSet(vertices)
    pos = {x: i for i, x in enumerate(vs.elems)}
    rows = [0] * len(vs)
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if u not in pos or v not in pos:
            bad = u if u not in pos else v
            raise InvalidEdge(f"edge ({u},{v}) has endpoint {bad} outside the vertex set")
        i, j = pos[u], pos[v]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(vs, tuple(rows))


def empty_graph() -> Graph:
    return Graph(OrdSet(), ())


def has_edge(g: Graph, u: Label, v: Label) -> bool:
    if u == v or u not in g.vertices or v not in g.vertices:
        return False
    return bool(g.rows[g.index(u)] >> g.index(v) & 1)


def neighbors(g: Graph, v: Label) -> OrdSet:
    return g.mask_to_set(g.rows[g.index(v)])


def degree(g: Graph, v: Label) -> int:
    return g.rows[g.index(v)].bit_count()


def induced_by_mask(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the vertex positions selected by ``mask``."""
    idx = [i for i in range(g.n) if mask >> i & 1]
    rows = []
    for i in idx:
        row = g.rows[i]
        r = 0
        for k, j in enumerate(idx):
            if row >> j & 1:
                r |= 1 << k
        rows.append(r)
    return Graph(g.mask_to_set(mask), tuple(rows))


def induced_subgraph(g: Graph, s: OrdSet | Iterable[Label]) -> Graph:
    s = s if isinstance(s, OrdSet) else OrdSet(s)
    if not s.issubset(g.vertices):
        raise NotASubset(f"{s!r} is not a subset of {g.vertices!r}")
    return induced_by_mask(g, mask_of(g.vertices, s))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.vertices, tuple((~row & full) & ~(1 << i) for i, row in enumerate(g.rows)))


def is_subgraph(h: Graph, g: Graph) -> bool:
    if not h.vertices.issubset(g.vertices):
        return False
    return all(has_edge(g, u, v) for u, v in h.edges())


def is_induced_subgraph(h: Graph, g: Graph) -> bool:
    if not h.vertices.issubset(g.vertices):
        return False
    return h == induced_subgraph(g, h.vertices)
