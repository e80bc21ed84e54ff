"""Isomorphism witnessed by self-inverse vertex maps.

An :class:`IsoMap` acts on an explicit finite support and is the identity
everywhere else, so the involution property ``f(f(x)) == x`` can be checked
by finite iteration.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .analysis import Coloring
from .errors import ISO_LIMIT, GraphError, check_size
from .graph import Graph, has_edge
from .ordset import Label, OrdSet


@dataclass(frozen=True)
class IsoMap:
    mapping: Mapping[Label, Label] = field(default_factory=dict)

    def __call__(self, x: Label) -> Label:
        return self.mapping.get(x, x)

    @property
    def support(self) -> OrdSet:
        return OrdSet(self.mapping)

    def is_involution(self) -> bool:
        return all(self(self(x)) == x for x in self.mapping)

    def image(self, xs: Iterable[Label]) -> OrdSet:
        return OrdSet(self(x) for x in xs)

    @classmethod
    def from_bijection(cls, phi: Mapping[Label, Label]) -> IsoMap:
        """Involution extending ``phi``: ``x -> phi(x)`` and ``phi(x) -> x``.

        Raises GraphError when ``phi`` cannot be so extended, i.e. when some
        ``phi(x)`` lies in the domain of ``phi`` without ``phi(phi(x)) == x``.
        """
        m: dict[Label, Label] = {}
        for x, y in phi.items():
            for a, b in ((x, y), (y, x)):
                if m.get(a, b) != b:
                    raise GraphError(f"bijection is not extendable to an involution at {a}")
                m[a] = b
        return cls({a: b for a, b in m.items() if a != b})


identity = IsoMap()


def is_iso_using(f: IsoMap, g: Graph, g2: Graph) -> bool:
    """True iff ``f`` is an involution mapping ``g`` onto ``g2`` edge for edge."""
    if not f.is_involution():
        return False
    if f.image(g.vertices) != g2.vertices:
        return False
    # Off this universe both relations are false and f is the identity.
    universe = sorted(set(g.vertices) | set(g2.vertices) | set(f.mapping))
    return all(
        has_edge(g, x, y) == has_edge(g2, f(x), f(y))
        for i, x in enumerate(universe)
        for y in universe[i + 1:]
    )


def map_graph(f: IsoMap, g: Graph) -> Graph:
    """Image of ``g`` under ``f``; requires ``f`` injective on the vertices."""
    if not f.is_involution():
        raise GraphError("map is not an involution")
    vs = f.image(g.vertices)
    pos = {x: i for i, x in enumerate(vs)}
    old = g.vertices.elems
    rows = [0] * len(vs)
    for i, row in enumerate(g.rows):
        fi = pos[f(old[i])]
        r = row
        j = 0
        while r:
            if r & 1:
                rows[fi] |= 1 << pos[f(old[j])]
            r >>= 1
            j += 1
    return Graph(vs, tuple(rows))


def compose_coloring(c: Coloring, f: IsoMap, g2: Graph) -> dict[Label, int]:
    """The colouring ``x -> c(f(x))`` pulled back onto the vertices of ``g2``."""
    return {x: c[f(x)] for x in g2.vertices}


def find_isomorphism(g: Graph, g2: Graph) -> IsoMap | None:
    """Involutive isomorphism witness from ``g`` to ``g2``, or None.

    Backtracking over vertices of ``g`` in decreasing-degree order; candidates
    must match degree and adjacency to the already-mapped vertices.  When the
    vertex sets overlap, the partial map is also kept extendable to an
    involution (a mapped pair ``x -> y`` with ``y`` in ``V(g)`` forces
    ``y -> x``).
    """
    check_size("find_isomorphism", max(g.n, g2.n), ISO_LIMIT)
    if g.n != g2.n or g.num_edges() != g2.num_edges():
        return None
    n = g.n
    deg1 = [r.bit_count() for r in g.rows]
    deg2 = [r.bit_count() for r in g2.rows]
    if sorted(deg1) != sorted(deg2):
        return None
    v1, v2 = g.vertices.elems, g2.vertices.elems
    in_g = {x: i for i, x in enumerate(v1)}
    in_g2 = {x: i for i, x in enumerate(v2)}

    order = sorted(range(n), key=lambda i: (-deg1[i], i))
    phi = [-1] * n   # position in g -> position in g2
    used = [False] * n

    def pairing(i: int, j: int) -> list[tuple[int, int]] | None:
        # Assignments implied by i -> j so that phi extends to an involution:
        # if either label is shared, phi must also send label y back to x.
        x, y = v1[i], v2[j]
        if x == y or (x not in in_g2 and y not in in_g):
            return [(i, j)]
        if x not in in_g2 or y not in in_g:
            return None
        return [(i, j), (in_g[y], in_g2[x])]

    def fits(i: int, j: int) -> bool:
        if deg1[i] != deg2[j]:
            return False
        if phi[i] != -1:
            return phi[i] == j
        if used[j]:
            return False
        ri, rj = g.rows[i], g2.rows[j]
        return all(
            (ri >> k & 1) == (rj >> phi[k] & 1) for k in range(n) if phi[k] != -1
        )

    def search(depth: int) -> bool:
        if depth == n:
            return True
        i = order[depth]
        if phi[i] != -1:
            return search(depth + 1)
        for j in range(n):
            if used[j]:
                continue
            moves = pairing(i, j)
            if moves is None:
                continue
            done = []
            ok = True
            for a, b in moves:
                if not fits(a, b):
                    ok = False
                    break
                if phi[a] == -1:
                    phi[a] = b
                    used[b] = True
                    done.append(a)
            if ok and search(depth + 1):
                return True
            for a in done:
                used[phi[a]] = False
                phi[a] = -1
        return False

    if not search(0):
        return None
    f = IsoMap.from_bijection({v1[i]: v2[phi[i]] for i in range(n)})
    if not is_iso_using(f, g, g2):
        raise AssertionError("isomorphism search produced an invalid witness")
    return f


def relabel_apart(g: Graph, other: Graph) -> tuple[Graph, IsoMap]:
    """Copy of ``g`` on fresh labels disjoint from both graphs, with the swap used."""
    start = max([*g.vertices, *other.vertices], default=-1) + 1
    f = IsoMap({**{x: start + i for i, x in enumerate(g.vertices)},
                **{start + i: x for i, x in enumerate(g.vertices)}})
    return map_graph(f, g), f


def are_isomorphic(g: Graph, g2: Graph) -> bool:
    """Ordinary isomorphism test; vertex sets are first moved apart, so the
    involution constraint never bites."""
    h, _ = relabel_apart(g2, g)
    return find_isomorphism(g, h) is not None


def find_bijection(g: Graph, g2: Graph) -> dict[Label, Label] | None:
    """Vertex bijection ``V(g) -> V(g2)`` preserving adjacency, or None.

    ``g2`` is moved onto fresh labels, an involutive witness is found there,
    and the relabeling is composed back.  Unlike :func:`find_isomorphism`
    the result need not be an involution when the vertex sets overlap.
    """
    h, back = relabel_apart(g2, g)
    f = find_isomorphism(g, h)
    if f is None:
        return None
    return {x: back(f(x)) for x in g.vertices}


def is_bijective_iso(phi: Mapping[Label, Label], g: Graph, g2: Graph) -> bool:
    """Check a plain bijection by turning it into an involution on disjoint copies."""
    if set(phi) != set(g.vertices) or sorted(phi.values()) != list(g2.vertices):
        return False
    h, back = relabel_apart(g2, g)
    return is_iso_using(IsoMap.from_bijection({x: back(y) for x, y in phi.items()}), g, h)
