"""Vertex replication preserves perfectness: checker and constructive colouring.

:func:`extend_coloring` follows the two-case argument for the whole
replicated graph.  Either ``a`` lies in a maximum clique, and ``a2`` simply
gets a brand-new colour, or it does not, and the graph minus the rest of
``a``'s colour class is recoloured with one colour fewer so that ``a2`` can
share ``a``'s old colour class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .analysis import (
    Coloring,
    chromatic_number,
    clique_number,
    colors_used,
    is_perfect,
    is_proper_coloring,
    max_clique_mask,
)
from .construct import fresh_vertex, repeat_vertex
from .errors import (
    REPLICATION_LIMIT,
    ImproperInput,
    InvariantViolation,
    UnknownVertex,
    VertexCollision,
    check_size,
)
from .graph import Graph, induced_subgraph
from .ordset import Label, OrdSet


class CaseTag(enum.Enum):
    CASE_2A = "2A"  # a lies in some maximum clique
    CASE_2B = "2B"


@dataclass(frozen=True)
class ReplicationInstance:
    g: Graph
    a: Label
    a2: Label
    g2: Graph

    @classmethod
    def make(cls, g: Graph, a: Label, a2: Label | None = None) -> ReplicationInstance:
        a2 = fresh_vertex(g) if a2 is None else a2
        return cls(g, a, a2, repeat_vertex(g, a, a2))


@dataclass(frozen=True)
class Extension:
    case: CaseTag
    coloring: dict[Label, int]


def exists_max_clique_with(g: Graph, a: Label) -> tuple[bool, OrdSet | None]:
    i = g.index(a)
    omega = max_clique_mask(g.rows, g.full_mask).bit_count()
    through = max_clique_mask(g.rows, g.rows[i]) | 1 << i
    if through.bit_count() == omega:
        return True, g.mask_to_set(through)
    return False, None


def replication_case(g: Graph, a: Label) -> CaseTag:
    return CaseTag.CASE_2A if exists_max_clique_with(g, a)[0] else CaseTag.CASE_2B


def extend(g: Graph, f: Coloring, a: Label, a2: Label) -> Extension:
    """Case tag plus an optimal colouring of ``repeat_vertex(g, a, a2)``.

    ``f`` must be a proper colouring of ``g`` with exactly ``omega(g)``
    colours.  ``g`` is assumed perfect; if it is not, the recolouring step
    may need too many colours and InvariantViolation is raised.
    """
    if a not in g.vertices:
        raise UnknownVertex(f"vertex {a} not in graph")
    if a2 in g.vertices:
        raise VertexCollision(f"vertex {a2} already in graph")
    if not is_proper_coloring(g, f):
        raise ImproperInput("input colouring is not proper")
    omega = clique_number(g)[0]
    palette = colors_used(g, f)
    if len(palette) != omega:
        raise ImproperInput(f"input colouring uses {len(palette)} colours, omega is {omega}")

    in_max, _ = exists_max_clique_with(g, a)
    if in_max:
        out = {v: f[v] for v in g.vertices}
        out[a2] = palette[-1] + 1
        return Extension(CaseTag.CASE_2A, out)

    fa = f[a]
    star = induced_subgraph(g, OrdSet(v for v in g.vertices if f[v] != fa or v == a))
    omega_star = clique_number(star)[0]
    if not omega_star < omega:
        raise InvariantViolation(f"omega(G*)={omega_star} is not below omega(G)={omega}")
    chi_star, f_star = chromatic_number(star)
    spare = [c for c in palette if c != fa]
    if chi_star > len(spare):
        raise InvariantViolation(
            f"G* needs {chi_star} colours but only {len(spare)} avoid f(a); input graph is not perfect"
        )
    # rename f*'s colours 0..chi*-1 onto colours of f other than f(a)
    out = {v: spare[f_star[v]] if v in f_star else fa for v in g.vertices}
    out[a2] = fa
    return Extension(CaseTag.CASE_2B, out)


def extend_coloring(g: Graph, f: Coloring, a: Label, a2: Label) -> dict[Label, int]:
    return extend(g, f, a, a2).coloring


def check_replication_lemma(g: Graph) -> bool:
    """Every single-vertex replication of a perfect ``g`` is perfect (vacuous otherwise)."""
    return not replication_failures(g)


def replication_failures(g: Graph) -> list[Label]:
    """Vertices whose replication breaks perfectness of a perfect ``g``."""
    check_size("check_replication_lemma", g.n, REPLICATION_LIMIT)
    if not is_perfect(g):
        return []
    a2 = fresh_vertex(g)
    return [a for a in g.vertices if not is_perfect(repeat_vertex(g, a, a2))]
