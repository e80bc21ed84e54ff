"""Graph construction from raw relations, vertex replication and clique expansion.

Raw relations need not be irreflexive, symmetric or confined.  The
normalisers :func:`mk_irefl`, :func:`mk_sym` and :func:`restrict_to` each
make the minimum change needed to establish one invariant without breaking
the others, so ``to_graph(mk_sym(mk_irefl(restrict_to(r, s))), s)`` always
yields a valid :class:`Graph`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import PartialMap, UnknownVertex, VertexCollision, ZeroMultiplicity
from .graph import Graph, build, has_edge
from .ordset import Label, OrdSet, insert, inter, union


@dataclass(frozen=True)
class VertexRelation:
    """Finite binary relation: true exactly on ``pairs``, whose endpoints lie in ``support``."""

    support: OrdSet
    pairs: frozenset[tuple[Label, Label]]

    def __call__(self, x: Label, y: Label) -> bool:
        return (x, y) in self.pairs

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Label, Label]]) -> VertexRelation:
        ps = frozenset((x, y) for x, y in pairs)
        return cls(OrdSet(v for p in ps for v in p), ps)

    @classmethod
    def from_predicate(cls, support: Iterable[Label], pred) -> VertexRelation:
        s = support if isinstance(support, OrdSet) else OrdSet(support)
        return cls(s, frozenset((x, y) for x in s for y in s if pred(x, y)))

    def is_irreflexive(self) -> bool:
        return all(x != y for x, y in self.pairs)

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)


def mk_irefl(r: VertexRelation) -> VertexRelation:
    return VertexRelation(r.support, frozenset(p for p in r.pairs if p[0] != p[1]))


def mk_sym(r: VertexRelation) -> VertexRelation:
    # symmetric closure: r(x, y) or r(y, x)
    return VertexRelation(r.support, r.pairs | frozenset((y, x) for x, y in r.pairs))


def restrict_to(r: VertexRelation, s: OrdSet) -> VertexRelation:
    return VertexRelation(
        inter(r.support, s), frozenset(p for p in r.pairs if p[0] in s and p[1] in s)
    )


def to_graph(r: VertexRelation, vertices: OrdSet) -> Graph:
    """Package a normalised relation as a graph on ``vertices``.

    ``build`` raises if the relation is not irreflexive or leaves ``vertices``;
    an asymmetric pair is rejected explicitly.
    """
    if not r.is_symmetric():
        raise ValueError("relation is not symmetric")
    return build(vertices, ((x, y) for x, y in r.pairs if x < y))


def graph_relation(g: Graph) -> VertexRelation:
    return VertexRelation(g.vertices, frozenset(
        p for u, v in g.edges() for p in ((u, v), (v, u))))


def nw_edg(g: Graph, a: Label, a2: Label) -> VertexRelation:
    """Raw replication relation for copying ``a`` to ``a2``.

    Pairs ``(x, y)`` with ``y != a2`` keep ``g``'s adjacency, ``(a, a2)``
    holds, and ``(x, a2)`` for ``x != a`` copies ``(x, a)``.  The result is
    deliberately left asymmetric and possibly reflexive.
    """
    if a not in g.vertices:
        raise UnknownVertex(f"vertex {a} not in graph")
    universe = insert(a2, g.vertices)

    def rel(x: Label, y: Label) -> bool:
        if y != a2:
            return has_edge(g, x, y)
        if x == a:
            return True
        return has_edge(g, x, a)

    # Off the universe every case reduces to has_edge on a missing vertex.
    return VertexRelation.from_predicate(universe, rel)


def fresh_vertex(g: Graph) -> Label:
    return g.vertices[-1] + 1 if len(g.vertices) else 0


def repeat_vertex(g: Graph, a: Label, a2: Label | None = None) -> Graph:
    """Add ``a2`` adjacent to ``a`` and to every neighbour of ``a``."""
    if a not in g.vertices:
        raise UnknownVertex(f"vertex {a} not in graph")
    if a2 is None:
        a2 = fresh_vertex(g)
    elif a2 in g.vertices:
        raise VertexCollision(f"vertex {a2} already in graph")
    nodes = insert(a2, g.vertices)
    return to_graph(mk_sym(mk_irefl(restrict_to(nw_edg(g, a, a2), nodes))), nodes)


def expand(g: Graph, mult: Mapping[Label, int]) -> Graph:
    """Replace each vertex ``v`` by a clique of ``mult[v]`` vertices.

    Vertices are processed in increasing order; copy 0 keeps the original
    label and further copies take consecutive fresh labels.
    """
    missing = [v for v in g.vertices if v not in mult]
    if missing:
        raise PartialMap(f"no multiplicity for vertices {missing}")
    zero = [v for v in g.vertices if mult[v] < 1]
    if zero:
        raise ZeroMultiplicity(f"multiplicity must be >= 1 for vertices {zero}")
    out = g
    for v in g.vertices:
        for _ in range(mult[v] - 1):
            out = repeat_vertex(out, v, fresh_vertex(out))
    return out


def copies_of(g: Graph, mult: Mapping[Label, int]) -> dict[Label, OrdSet]:
    """Labels forming the clique that replaces each original vertex in ``expand``."""
    nxt = fresh_vertex(g)
    out = {}
    for v in g.vertices:
        extra = range(nxt, nxt + mult[v] - 1)
        out[v] = union(OrdSet([v]), OrdSet(extra))
        nxt += mult[v] - 1
    return out
