"""Exact clique, stable-set, colouring and perfectness computations.

The searches work on the bitmask rows of :class:`~pgkit.graph.Graph`
(bit ``j`` of ``rows[i]`` set iff positions ``i`` and ``j`` are adjacent).
Witnesses are translated back to vertex labels at the boundary.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from .errors import POWERSET_LIMIT, NotASubset, PartialColoring, check_size, subset_guard
from .graph import Graph, complement, induced_by_mask
from .ordset import Label, OrdSet

Coloring = Mapping[Label, int]


@dataclass(frozen=True)
class Counterexample:
    subset: OrdSet
    omega: int
    chi: int


@dataclass(frozen=True)
class PerfectnessReport:
    verdict: bool
    counterexample: Counterexample | None = None

    def __bool__(self) -> bool:
        return self.verdict


# -- bitmask kernels -----------------------------------------------------------

def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _greedy_color_order(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of ``cand``; returns vertices and their colour bounds
    in non-decreasing colour order (the classic MCQ sort)."""
    order: list[int] = []
    bounds: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = _low(q)
            q &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique_mask(rows: tuple[int, ...], cand: int) -> int:
    """Bitmask of a maximum clique inside ``cand`` (branch and bound)."""
    best = [0, 0]  # mask, size

    def expand(r: int, size: int, p: int) -> None:
        order, bounds = _greedy_color_order(rows, p)
        for k in range(len(order) - 1, -1, -1):
            if size + bounds[k] <= best[1]:
                return
            v = order[k]
            np_ = p & rows[v]
            if np_:
                expand(r | 1 << v, size + 1, np_)
            elif size + 1 > best[1]:
                best[0], best[1] = r | 1 << v, size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best[0]


def iter_maximal_stable(rows: tuple[int, ...], p: int, x: int = 0) -> Iterator[int]:
    """Maximal stable sets inside candidate set ``p`` (Bron-Kerbosch on the
    complement with pivoting).  ``x`` holds already-excluded vertices."""
    if p == 0:
        if x == 0:
            yield 0
        return
    px = p | x
    # pivot: vertex whose non-neighbourhood covers most of p
    pivot, best = -1, -1
    q = px
    while q:
        u = _low(q)
        q &= q - 1
        c = (p & ~rows[u] & ~(1 << u)).bit_count()
        if c > best:
            pivot, best = u, c
    branch = p & (rows[pivot] | 1 << pivot)
    while branch:
        v = _low(branch)
        branch &= branch - 1
        bit = 1 << v
        non = ~rows[v] & ~bit
        for s in iter_maximal_stable(rows, p & non, x & non):
            yield s | bit
        p &= ~bit
        x |= bit


def _stable_through(rows: tuple[int, ...], mask: int, v: int) -> Iterator[int]:
    """Maximal stable subsets of ``mask`` that contain ``v``."""
    bit = 1 << v
    for s in iter_maximal_stable(rows, mask & ~rows[v] & ~bit):
        yield s | bit


def color_classes(rows: tuple[int, ...], mask: int, k: int, failed: dict[int, int]) -> list[int] | None:
    """Partition ``mask`` into at most ``k`` stable sets, or None.

    Each new class is forced to contain the least uncoloured vertex and is
    taken maximal; ``failed`` memoises the largest ``k`` proven infeasible.
    """
    if mask == 0:
        return []
    if k <= 0:
        return None
    if mask.bit_count() <= k:
        out, m = [], mask
        while m:
            out.append(m & -m)
            m &= m - 1
        return out
    if failed.get(mask, 0) >= k:
        return None
    v = _low(mask)
    for cls in _stable_through(rows, mask, v):
        rest = color_classes(rows, mask & ~cls, k - 1, failed)
        if rest is not None:
            return [cls, *rest]
    failed[mask] = k
    return None


def omega_table(rows: tuple[int, ...], n: int) -> bytearray:
    """Clique number of every induced subgraph, indexed by vertex mask."""
    om = bytearray(1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        a = om[rest]
        b = om[rest & rows[low.bit_length() - 1]] + 1
        om[s] = a if a > b else b
    return om


def first_imperfect_mask(rows: tuple[int, ...], n: int) -> int | None:
    """Least vertex mask (binary-counting order) whose induced subgraph has chi > omega."""
    om = bytearray(1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        a = om[rest]
        b = om[rest & rows[v]] + 1
        w = a if a > b else b
        om[s] = w
        # Every proper subset is already known to be nice, so s is nice iff
        # some colour class through v leaves a remainder of clique number w-1.
        if s == low or w == s.bit_count():
            continue
        for cls in _stable_through(rows, s, v):
            if om[s & ~cls] < w:
                break
        else:
            return s
    return None


# -- public API ----------------------------------------------------------------

def _require_subset(g: Graph, s: OrdSet) -> int:
    if not s.issubset(g.vertices):
        raise NotASubset(f"{s!r} is not a subset of {g.vertices!r}")
    return g.set_to_mask(s)


def is_clique(g: Graph, k: OrdSet) -> bool:
    m = _require_subset(g, k)
    q = m
    while q:
        v = _low(q)
        q &= q - 1
        if (m & ~(1 << v)) & ~g.rows[v]:
            return False
    return True


def is_stable(g: Graph, i: OrdSet) -> bool:
    m = _require_subset(g, i)
    q = m
    while q:
        v = _low(q)
        q &= q - 1
        if m & g.rows[v]:
            return False
    return True


def _check_total(g: Graph, f: Coloring) -> None:
    missing = [v for v in g.vertices if v not in f]
    if missing:
        raise PartialColoring(f"coloring has no colour for vertices {missing}")


def is_proper_coloring(g: Graph, f: Coloring) -> bool:
    _check_total(g, f)
    return all(f[u] != f[v] for u, v in g.edges())


def colors_used(g: Graph, f: Coloring) -> OrdSet:
    _check_total(g, f)
    return OrdSet(f[v] for v in g.vertices)


def clique_number(g: Graph) -> tuple[int, OrdSet]:
    """``(omega, witness)``; the empty graph has clique number 0."""
    m = max_clique_mask(g.rows, g.full_mask)
    return m.bit_count(), g.mask_to_set(m)


def stability_number(g: Graph) -> tuple[int, OrdSet]:
    """``(alpha, witness)``: a maximum stable set."""
    return clique_number(complement(g))


def is_max_clique(g: Graph, k: OrdSet) -> bool:
    return is_clique(g, k) and len(k) == clique_number(g)[0]


def is_max_stable(g: Graph, i: OrdSet) -> bool:
    return is_stable(g, i) and len(i) == stability_number(g)[0]


def normalize_coloring(f: Coloring) -> dict[Label, int]:
    """Rename colours to 0..k-1 in order of each class's least vertex."""
    rename: dict[int, int] = {}
    out = {}
    for v in sorted(f):
        c = f[v]
        if c not in rename:
            rename[c] = len(rename)
        out[v] = rename[c]
    return out


def _classes_to_coloring(g: Graph, classes: list[int]) -> dict[Label, int]:
    f = {}
    for c, cls in enumerate(classes):
        for v in g.mask_to_set(cls):
            f[v] = c
    return normalize_coloring(f)


def chromatic_number(g: Graph) -> tuple[int, dict[Label, int]]:
    """``(chi, witness)`` by iterative deepening from the clique number."""
    if g.n == 0:
        return 0, {}
    k = max_clique_mask(g.rows, g.full_mask).bit_count()
    failed: dict[int, int] = {}
    while True:
        classes = color_classes(g.rows, g.full_mask, k, failed)
        if classes is not None:
            return len(classes), _classes_to_coloring(g, classes)
        k += 1


def k_coloring(g: Graph, k: int) -> dict[Label, int] | None:
    """A proper colouring with at most ``k`` colours, or None."""
    classes = color_classes(g.rows, g.full_mask, k, {})
    return None if classes is None else _classes_to_coloring(g, classes)


def is_nice(g: Graph) -> bool:
    return clique_number(g)[0] == chromatic_number(g)[0]


def is_perfect(g: Graph) -> PerfectnessReport:
    """Check chi(H) == omega(H) for every induced subgraph H.

    On failure the counterexample is the least failing vertex subset in
    powerset enumeration order.
    """
    check_size("is_perfect", g.n, subset_guard(POWERSET_LIMIT))
    bad = first_imperfect_mask(g.rows, g.n)
    if bad is None:
        return PerfectnessReport(True)
    h = induced_by_mask(g, bad)
    return PerfectnessReport(
        False, Counterexample(h.vertices, clique_number(h)[0], chromatic_number(h)[0])
    )
