"""Exhaustive labeled-graph enumeration and the theorem batteries.

Each battery streams every labeled graph on ``0..n-1`` for
``n_min <= n <= n_max`` and records a certificate for every graph on which
the claimed theorem fails.  Failures are data: an empty failure list means
the theorem holds throughout the checked range.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .analysis import (
    PerfectnessReport,
    chromatic_number,
    clique_number,
    colors_used,
    is_perfect,
    is_proper_coloring,
)
from .berge import HoleCertificate, is_berge
from .construct import fresh_vertex
from .dimacs import serialize_dimacs
from .errors import ENUMERATION_LIMIT, PgkitError, check_size
from .graph import Graph, complement, induced_by_mask
from .lovasz import CaseTag, ReplicationInstance, extend, replication_failures
from .ordset import OrdSet

REPLICATION_BATTERY_LIMIT = 5


class Theorem(str, enum.Enum):
    WPGT = "wpgt"
    SPGT = "spgt"
    REPLICATION = "replication"


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Pair order defining the edge bitmask: bit ``k`` is the ``k``-th pair."""
    return list(combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = edge_pairs(n) if pairs is None else pairs
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            u, v = pairs[k]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        k += 1
    return Graph(OrdSet(range(n)), tuple(rows))


def edge_mask_of(g: Graph) -> int:
    index = {p: k for k, p in enumerate(edge_pairs(g.n))}
    pos = {x: i for i, x in enumerate(g.vertices)}
    return sum(1 << index[(pos[u], pos[v])] for u, v in g.edges())


def enumerate_labeled(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All ``2**C(n,2)`` labeled graphs on ``0..n-1`` in edge-bitmask order.

    ``start``/``stop`` select a bitmask sub-range, for partitioned runs.
    """
    check_size("enumerate_labeled", n, ENUMERATION_LIMIT)
    pairs = edge_pairs(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield graph_from_edge_mask(n, mask, pairs)


# -- certificates (1-based vertex numbers, as in DIMACS files) -------------------

def _ext(g: Graph, labels) -> list[int]:
    return [g.index(x) + 1 for x in labels]


def perfectness_json(g: Graph, rep: PerfectnessReport) -> dict[str, Any]:
    out: dict[str, Any] = {"verdict": rep.verdict}
    if rep.counterexample is not None:
        ce = rep.counterexample
        out["counterexample"] = {"subset": _ext(g, ce.subset), "omega": ce.omega, "chi": ce.chi}
    return out


def hole_json(g: Graph, cert: HoleCertificate) -> dict[str, Any]:
    return {"kind": cert.kind.value, "cycle": _ext(g, cert.cycle)}


def is_perfect_by_subgraphs(g: Graph) -> bool:
    """Independent route: clique and chromatic number of every induced subgraph."""
    for mask in range(1 << g.n):
        h = induced_by_mask(g, mask)
        if clique_number(h)[0] != chromatic_number(h)[0]:
            return False
    return True


def check_wpgt(g: Graph) -> dict[str, Any] | None:
    p, q = is_perfect(g), is_perfect(complement(g))
    if p.verdict == q.verdict:
        return None
    return {"perfect": perfectness_json(g, p), "complement_perfect": perfectness_json(g, q)}


def check_spgt(g: Graph) -> dict[str, Any] | None:
    p = is_perfect(g)
    berge, hole = is_berge(g)
    if p.verdict == berge:
        return None
    cert: dict[str, Any] = {"perfect": perfectness_json(g, p), "berge": berge}
    if hole is not None:
        cert["hole"] = hole_json(g, hole)
    return cert


def check_replication(g: Graph) -> dict[str, Any] | None:
    """Replication lemma on every vertex plus optimality of the constructive colouring."""
    problems: list[dict[str, Any]] = []
    for a in replication_failures(g):
        problems.append({"vertex": g.index(a) + 1, "problem": "replicated graph not perfect"})
    if g.n and is_perfect(g):
        omega = clique_number(g)[0]
        _, f = chromatic_number(g)
        a2 = fresh_vertex(g)
        for a in g.vertices:
            inst = ReplicationInstance.make(g, a, a2)
            omega2 = clique_number(inst.g2)[0]
            vertex = g.index(a) + 1
            try:
                ext = extend(g, f, a, a2)
            except PgkitError as exc:
                problems.append({"vertex": vertex, "problem": f"extend failed: {exc}"})
                continue
            if not is_proper_coloring(inst.g2, ext.coloring):
                problems.append({"vertex": vertex, "problem": "extended colouring not proper"})
            used = len(colors_used(inst.g2, ext.coloring))
            if used != omega2:
                problems.append({"vertex": vertex, "problem": f"uses {used} colours, omega is {omega2}"})
            step = 1 if ext.case is CaseTag.CASE_2A else 0
            if omega2 - omega != step:
                problems.append({"vertex": vertex, "problem": f"case {ext.case.value} but omega rose by {omega2 - omega}"})
    return {"problems": problems} if problems else None


CHECKS = {
    Theorem.WPGT: check_wpgt,
    Theorem.SPGT: check_spgt,
    Theorem.REPLICATION: check_replication,
}


@dataclass
class BatteryReport:
    theorem: Theorem
    n_max: int
    n_min: int
    graphs_checked: int = 0
    failures: list[tuple[Graph, dict[str, Any]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem.value,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "passed": self.passed,
            "failures": [
                {"graph": serialize_dimacs(g), "certificate": cert} for g, cert in self.failures
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _run_range(theorem: Theorem, n: int, start: int, stop: int) -> tuple[int, list[tuple[int, dict]]]:
    check = CHECKS[theorem]
    count = 0
    failures = []
    for mask, g in enumerate(enumerate_labeled(n, start, stop), start=start):
        count += 1
        cert = check(g)
        if cert is not None:
            failures.append((mask, cert))
    return count, failures


def run_battery(theorem: Theorem | str, n_max: int, n_min: int | None = None, jobs: int = 1) -> BatteryReport:
    """Check ``theorem`` on every labeled graph with ``n_min <= n <= n_max`` vertices.

    ``n_min`` defaults to ``n_max``.  With ``jobs > 1`` each size's bitmask
    range is split across worker processes; the merged report is identical
    to the serial one.
    """
    theorem = Theorem(theorem)
    n_min = n_max if n_min is None else n_min
    check_size("run_battery", n_max, ENUMERATION_LIMIT)
    if theorem is Theorem.REPLICATION:
        check_size("replication battery", n_max, REPLICATION_BATTERY_LIMIT)
    report = BatteryReport(theorem, n_max, n_min)
    for n in range(n_min, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        if jobs <= 1 or total < 256:
            parts = [_run_range(theorem, n, 0, total)]
        else:
            step = -(-total // (jobs * 4))
            ranges = [(s, min(s + step, total)) for s in range(0, total, step)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futs = [pool.submit(_run_range, theorem, n, s, e) for s, e in ranges]
                parts = [f.result() for f in futs]
        for count, fails in parts:
            report.graphs_checked += count
            report.failures += [(graph_from_edge_mask(n, m), c) for m, c in fails]
    return report


def recheck_failure(theorem: Theorem | str, g: Graph) -> bool:
    """Confirm a reported failure through routes independent of the battery's own.

    Perfectness is recomputed subgraph by subgraph and holes are re-certified
    by direct adjacency checks.
    """
    theorem = Theorem(theorem)
    if theorem is Theorem.WPGT:
        return is_perfect_by_subgraphs(g) != is_perfect_by_subgraphs(complement(g))
    if theorem is Theorem.SPGT:
        berge, hole = is_berge(g)
        if hole is not None and not hole.validate(g):
            return False
        return is_perfect_by_subgraphs(g) != berge
    return check_replication(g) is not None
