"""Exit criteria for the build: one test per criterion, tolerances as stated.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary
prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import json
import os
import random
import time
from itertools import combinations

import pytest

from pgkit.analysis import (
    chromatic_number,
    clique_number,
    colors_used,
    is_clique,
    is_perfect,
    is_proper_coloring,
    is_stable,
)
from pgkit.berge import HoleCertificate, HoleKind
from pgkit.cli import main
from pgkit.construct import (
    VertexRelation,
    fresh_vertex,
    mk_irefl,
    mk_sym,
    repeat_vertex,
    restrict_to,
    to_graph,
)
from pgkit.dimacs import parse_dimacs, serialize_dimacs
from pgkit.fixtures import fig4_G2, fig4_G3, mycielski, cycle, named, pentagon_blowup
from pgkit.graph import has_edge, induced_subgraph, is_induced_subgraph
from pgkit.harness import enumerate_labeled, recheck_failure, run_battery
from pgkit.iso import IsoMap, compose_coloring, find_isomorphism, is_bijective_iso, is_iso_using, map_graph
from pgkit.ordset import OrdSet

from oracles import brute_chi, brute_omega
from strategies import random_graph, random_proper_coloring

JOBS = os.cpu_count() or 1
SEED = 20261014


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


@pytest.mark.criterion(1, "fixture exactness (C5, blowups, replicated C5, Groetzsch)")
def test_fixture_exactness():
    cases = [
        ("C5", cycle(5), 2, 3, 5.0),
        ("blowup(2)", pentagon_blowup(2), 4, 6, 5.0),
        ("blowup(3)", pentagon_blowup(3), 6, 9, 60.0),
        ("fig4_G2", fig4_G2(), 3, 3, 5.0),
        ("mycielski(C5)", mycielski(cycle(5)), 2, 4, 5.0),
    ]
    for name, g, omega, chi, budget in cases:
        (w, _), tw = timed(clique_number, g)
        (c, _), tc = timed(chromatic_number, g)
        assert (w, c) == (omega, chi), name
        assert tw + tc < budget, f"{name} took {tw + tc:.1f}s"
    g3 = fig4_G3()
    (w, _), tw = timed(clique_number, g3)
    (c, _), tc = timed(chromatic_number, g3)
    assert (w, c) == (3, 4) and tw + tc < 5.0


def _assert_battery(report, expected_count):
    assert report.graphs_checked == expected_count
    assert report.failures == [], [recheck_failure(report.theorem, g) for g, _ in report.failures]


@pytest.mark.criterion(2, "WPGT battery on all 2^15 labeled graphs with 6 vertices")
def test_wpgt_battery():
    report, t = timed(run_battery, "wpgt", 6, None, JOBS)
    _assert_battery(report, 2 ** 15)
    assert t <= 600


@pytest.mark.criterion(3, "SPGT battery on all labeled graphs with <= 6 vertices")
def test_spgt_battery():
    report, t = timed(run_battery, "spgt", 6, 0, JOBS)
    _assert_battery(report, sum(2 ** (n * (n - 1) // 2) for n in range(7)))
    assert t <= 600


@pytest.mark.criterion(4, "replication battery on all labeled graphs with <= 5 vertices")
def test_replication_battery():
    report, t = timed(run_battery, "replication", 5, 0, JOBS)
    _assert_battery(report, sum(2 ** (n * (n - 1) // 2) for n in range(6)))
    assert t <= 600


@pytest.mark.criterion(5, "omega/chi equal brute-force oracles (all n <= 5, 500 random n in 6..8)")
def test_oracle_equivalence():
    def agree(g):
        assert clique_number(g)[0] == brute_omega(g), g
        assert chromatic_number(g)[0] == brute_chi(g), g

    for n in range(6):
        for g in enumerate_labeled(n):
            agree(g)
    rng = random.Random(SEED)
    for _ in range(500):
        agree(random_graph(rng, rng.choice((6, 7, 8))))


@pytest.mark.criterion(6, "property suites: combinators, replication edge lemmas, iso transfer")
def test_property_suites():
    rng = random.Random(SEED)
    # combinators discharge the graph invariants on 10,000 raw relations
    for _ in range(10_000):
        pairs = [(rng.randrange(8), rng.randrange(8)) for _ in range(rng.randrange(30))]
        r = VertexRelation.from_pairs(pairs)
        s = OrdSet(x for x in range(8) if rng.random() < 0.7)
        g = to_graph(mk_sym(mk_irefl(restrict_to(r, s))), s)
        g.validate()

    # the five replication edge lemmas on 1,000 (g, a, a') triples
    for _ in range(1_000):
        g = random_graph(rng, rng.randint(1, 7))
        a = rng.choice(g.vertices.elems)
        a2 = fresh_vertex(g)
        gp = repeat_vertex(g, a, a2)
        universe = list(g.vertices) + [a2, a2 + 1]
        for x in universe:
            for y in universe:
                if has_edge(g, x, y):
                    assert has_edge(gp, x, y)
                if x in g.vertices and y in g.vertices:
                    assert has_edge(g, x, y) == has_edge(gp, x, y)
                if x != a2 and y != a2:
                    assert has_edge(g, x, y) == has_edge(gp, x, y)
            if x not in (a, a2):
                assert has_edge(g, x, a) == has_edge(gp, x, a2)
                assert has_edge(g, a, x) == has_edge(gp, a2, x)

    # iso transfer on 200 random isomorphic pairs with |V| <= 6
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 6))
        universe = list(range(2 * g.n + 1))
        rng.shuffle(universe)
        sigma = {}
        while len(universe) >= 2:
            x, y = universe.pop(), universe.pop()
            if rng.random() < 0.8:
                sigma[x], sigma[y] = y, x
        g2 = map_graph(IsoMap(sigma), g)
        f = find_isomorphism(g, g2)
        assert f is not None and is_iso_using(f, g, g2)
        for m in range(1 << g.n):
            s = g.mask_to_set(m)
            if is_clique(g, s):
                assert is_clique(g2, f.image(s))
            if is_stable(g, s):
                assert is_stable(g2, f.image(s))
            h = induced_subgraph(g, s)
            h2 = map_graph(f, h)
            assert is_induced_subgraph(h2, g2) and is_iso_using(f, h, h2)
        c = random_proper_coloring(rng, g2)
        assert is_proper_coloring(g, compose_coloring(c, f, g))
        assert is_perfect(g).verdict == is_perfect(g2).verdict
        assert clique_number(g)[0] == clique_number(g2)[0]
        assert chromatic_number(g)[0] == chromatic_number(g2)[0]


@pytest.mark.criterion(7, "omega <= colours of any proper colouring on 10,000 random graphs")
def test_omega_below_colors():
    rng = random.Random(SEED + 7)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(0, 9))
        f = random_proper_coloring(rng, g)
        assert is_proper_coloring(g, f)
        assert clique_number(g)[0] <= len(colors_used(g, f))


def _cli_json(capsys, *argv):
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)


@pytest.mark.criterion(8, "DIMACS round trip and CLI witnesses re-validate")
def test_cli_roundtrip(capsys, tmp_path):
    fixtures = named()
    rng = random.Random(SEED + 8)
    randoms = [random_graph(rng, rng.randint(0, 12)) for _ in range(1_000)]
    for g in [*fixtures.values(), *randoms]:
        assert parse_dimacs(serialize_dimacs(g)) == g

    for name, g in fixtures.items():
        path = tmp_path / f"{name}.dimacs"
        path.write_text(serialize_dimacs(g))
        f = str(path)
        inner = lambda ext: g.vertices[ext - 1]  # noqa: E731

        om = _cli_json(capsys, "omega", f)
        assert is_clique(g, OrdSet(map(inner, om["witness"]))) and len(om["witness"]) == om["value"]
        ch = _cli_json(capsys, "chi", f)
        col = {inner(int(k)): c for k, c in ch["witness"].items()}
        assert is_proper_coloring(g, col) and len(colors_used(g, col)) == ch["value"]
        assert om["value"] <= ch["value"]
        if g.n <= 12:
            pf = _cli_json(capsys, "perfect", f)
            if not pf["verdict"]:
                ce = pf["counterexample"]
                h = induced_subgraph(g, OrdSet(map(inner, ce["subset"])))
                assert (brute_omega(h), brute_chi(h)) == (ce["omega"], ce["chi"])
                assert ce["chi"] > ce["omega"]
            bg = _cli_json(capsys, "berge", f)
            if not bg["verdict"]:
                cert = bg["certificate"]
                hole = HoleCertificate(HoleKind(cert["kind"]), tuple(map(inner, cert["cycle"])))
                assert hole.validate(g)
        if g.n <= 10:
            io = _cli_json(capsys, "iso", f, f)
            phi = {inner(int(k)): inner(v) for k, v in io["map"].items()}
            assert io["isomorphic"] and is_bijective_iso(phi, g, g)
        if g.n and g.n <= 12 and is_perfect(g).verdict:
            ext = _cli_json(capsys, "extend-coloring", f, "--vertex", "1")
            g2 = repeat_vertex(g, g.vertices[0], fresh_vertex(g))
            col2 = {g2.vertices[int(k) - 1]: c for k, c in ext["coloring"].items()}
            assert is_proper_coloring(g2, col2)
            assert len(colors_used(g2, col2)) == ext["omega_after"] == clique_number(g2)[0]
