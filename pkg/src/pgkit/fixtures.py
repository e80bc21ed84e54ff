"""Named graphs used throughout the tests and the CLI.

All fixtures use labels ``0..n-1``.  Figure fixtures follow the drawings in
the classic perfect-graph examples: pentagon ``v1..v5`` is labels ``0..4``.
"""

from __future__ import annotations

from itertools import combinations

from .construct import repeat_vertex
from .graph import Graph, build, empty_graph


def cycle(n: int) -> Graph:
    """Cycle on ``0..n-1``; for ``n < 3`` this degenerates to a path."""
    if n < 3:
        return path(n)
    return build(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build(range(n), combinations(range(n), 2))


def path(n: int) -> Graph:
    return build(range(n), [(i, i + 1) for i in range(n - 1)])


def edgeless(n: int) -> Graph:
    return build(range(n), [])


def pentagon_blowup(k: int) -> Graph:
    """``k`` disjoint 5-cycles joined by every edge between distinct copies."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 5 * k
    edges = [(5 * c + i, 5 * c + (i + 1) % 5) for c in range(k) for i in range(5)]
    edges += [(u, v) for u, v in combinations(range(n), 2) if u // 5 != v // 5]
    return build(range(n), edges)


def mycielski(g: Graph) -> Graph:
    """Mycielskian of ``g``.

    Vertex at position ``i`` keeps its label, its shadow gets ``base + i``,
    and the hub gets ``base + n``, where ``base`` is one past the largest label.
    """
    xs = g.vertices.elems
    n = len(xs)
    base = xs[-1] + 1 if n else 0
    hub = base + n
    edges = list(g.edges())
    pos = {x: i for i, x in enumerate(xs)}
    for u, v in g.edges():
        edges.append((base + pos[u], v))
        edges.append((base + pos[v], u))
    edges += [(base + i, hub) for i in range(n)]
    return build(list(xs) + [base + i for i in range(n)] + [hub], edges)


def mycielski_chain(k: int) -> Graph:
    """``M_k``: triangle-free with chromatic number ``k`` (k >= 2)."""
    g = complete(2)
    for _ in range(k - 2):
        g = mycielski(g)
    return g


def fig1_bipartite() -> Graph:
    """Bipartite graph with left side 0..3 and right side 4..7."""
    return build(range(8), [(4, 1), (2, 6), (3, 5), (7, 2)])


def fig2_pentagram() -> Graph:
    """The pentagon drawn as a star: the complement of ``cycle(5)``."""
    return build(range(5), [(0, 2), (1, 3), (2, 4), (1, 4), (0, 3)])


def fig3_left() -> Graph:
    """Pentagon plus a vertex joined to three consecutive pentagon vertices."""
    return build(range(6), [*cycle(5).edges(), (1, 5), (2, 5), (3, 5)])


def fig3_right() -> Graph:
    """Pentagon and a K4 on 5..8, bridged by one edge."""
    k4 = [(u, v) for u, v in combinations(range(5, 9), 2)]
    return build(range(9), [*cycle(5).edges(), *k4, (2, 8)])


def fig4_G1() -> Graph:
    return cycle(5)


def fig4_G2() -> Graph:
    """Pentagon with v4 (label 3) repeated as label 5."""
    return repeat_vertex(cycle(5), 3, 5)


def fig4_G3() -> Graph:
    """``fig4_G2`` with v2 (label 1) repeated as label 6."""
    return repeat_vertex(fig4_G2(), 1, 6)


def fig5_G1() -> Graph:
    """4-cycle a-b-c-d on labels 0..3."""
    return build(range(4), [(3, 2), (2, 1), (1, 0), (0, 3)])


FIG5_MULTIPLICITIES = {0: 2, 1: 3, 2: 4, 3: 1}


def fig6_G() -> Graph:
    """Star with centre a = 0 and leaves v1, v2, v3 = 1, 2, 3."""
    return build(range(4), [(0, 1), (0, 2), (0, 3)])


def named() -> dict[str, Graph]:
    """Every fixture by name, for round-trip and CLI tests."""
    from .construct import expand

    return {
        "empty": empty_graph(),
        "K1": complete(1),
        "K3": complete(3),
        "K4": complete(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "C7": cycle(7),
        "P5": path(5),
        "blowup2": pentagon_blowup(2),
        "blowup3": pentagon_blowup(3),
        "grotzsch": mycielski(cycle(5)),
        "fig1_bipartite": fig1_bipartite(),
        "fig2_pentagram": fig2_pentagram(),
        "fig3_left": fig3_left(),
        "fig3_right": fig3_right(),
        "fig4_G2": fig4_G2(),
        "fig4_G3": fig4_G3(),
        "fig5_G1": fig5_G1(),
        "fig5_G4": expand(fig5_G1(), FIG5_MULTIPLICITIES),
        "fig6_G": fig6_G(),
    }
