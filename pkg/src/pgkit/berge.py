"""Odd holes, odd antiholes and the Berge predicate.

Detection enumerates odd vertex subsets of size >= 5 (smallest size first,
then lexicographic by vertex position) and tests whether each induces a
single chordless cycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import HOLE_SEARCH_LIMIT, check_size, subset_guard
from .graph import Graph, complement, has_edge
from .ordset import Label


class HoleKind(enum.Enum):
    ODD_HOLE = "odd_hole"
    ODD_ANTIHOLE = "odd_antihole"


@dataclass(frozen=True)
class HoleCertificate:
    kind: HoleKind
    cycle: tuple[Label, ...]

    def validate(self, g: Graph) -> bool:
        """Re-check the certificate against ``g`` by direct adjacency queries."""
        c = self.cycle
        k = len(c)
        if k < 5 or k % 2 == 0 or len(set(c)) != k or any(v not in g for v in c):
            return False
        want_edge = self.kind is HoleKind.ODD_HOLE
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if (has_edge(g, c[i], c[j]) == want_edge) != consecutive:
                    return False
        return True


def _induces_cycle(rows: tuple[int, ...], mask: int) -> bool:
    """True iff the subgraph induced by ``mask`` is connected and 2-regular."""
    q = mask
    while q:
        v = (q & -q).bit_length() - 1
        q &= q - 1
        if (rows[v] & mask).bit_count() != 2:
            return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = rows[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _cycle_order(g: Graph, mask: int) -> tuple[Label, ...]:
    # start at the least label, step towards its smaller-labelled neighbour
    prev = (mask & -mask).bit_length() - 1
    nbrs = g.rows[prev] & mask
    cur = (nbrs & -nbrs).bit_length() - 1
    order = [prev]
    while cur != order[0]:
        order.append(cur)
        nxt = g.rows[cur] & mask & ~(1 << prev)
        prev, cur = cur, (nxt & -nxt).bit_length() - 1
    xs = g.vertices.elems
    return tuple(xs[i] for i in order)


def _find_hole_mask(g: Graph) -> int | None:
    n = g.n
    for size in range(5, n + 1, 2):
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if _induces_cycle(g.rows, mask):
                return mask
    return None


def find_odd_hole(g: Graph) -> HoleCertificate | None:
    check_size("find_odd_hole", g.n, subset_guard(HOLE_SEARCH_LIMIT))
    mask = _find_hole_mask(g)
    if mask is None:
        return None
    return HoleCertificate(HoleKind.ODD_HOLE, _cycle_order(g, mask))


def find_odd_antihole(g: Graph) -> HoleCertificate | None:
    hole = find_odd_hole(complement(g))
    if hole is None:
        return None
    return HoleCertificate(HoleKind.ODD_ANTIHOLE, hole.cycle)


def is_berge(g: Graph) -> tuple[bool, HoleCertificate | None]:
    cert = find_odd_hole(g) or find_odd_antihole(g)
    return cert is None, cert
