import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgkit.analysis import (
    chromatic_number,
    clique_number,
    colors_used,
    is_perfect,
    is_proper_coloring,
)
from pgkit.construct import repeat_vertex
from pgkit.errors import ImproperInput, SizeLimitError, VertexCollision
from pgkit.fixtures import complete, cycle, edgeless, fig4_G2, fig4_G3
from pgkit.graph import build, induced_subgraph
from pgkit.harness import enumerate_labeled
from pgkit.lovasz import (
    CaseTag,
    ReplicationInstance,
    check_replication_lemma,
    exists_max_clique_with,
    extend,
    extend_coloring,
    replication_case,
)
from pgkit.ordset import OrdSet

from oracles import brute_chi, brute_is_clique, brute_k_colorable, brute_omega, brute_perfect, subsets
from strategies import graphs

# triangle 0-1-2 with pendant 3 hanging off corner 0
K3_PENDANT = build(range(4), [(0, 1), (1, 2), (0, 2), (0, 3)])


def test_exists_max_clique_with_examples():
    assert exists_max_clique_with(complete(3), 1)[0]
    ok, k = exists_max_clique_with(cycle(5), 2)
    assert ok and 2 in k and len(k) == 2
    # oracle: the largest clique through the pendant vertex
    through_p = max(len(s) for s in subsets([0, 1, 2, 3]) if 3 in s and brute_is_clique(K3_PENDANT, s))
    assert through_p == 2 < brute_omega(K3_PENDANT) == 3
    assert exists_max_clique_with(K3_PENDANT, 3) == (False, None)


def test_extend_coloring_case_2a_on_cliques():
    g = complete(3)
    _, f = chromatic_number(g)
    out = extend_coloring(g, f, 0, 3)
    g2 = repeat_vertex(g, 0, 3)
    assert g2 == complete(4)
    assert is_proper_coloring(g2, out) and len(colors_used(g2, out)) == 4


def test_extend_coloring_case_2b_pendant():
    g = K3_PENDANT
    assert is_perfect(g).verdict
    _, f = chromatic_number(g)
    ext = extend(g, f, 3, 4)
    g2 = repeat_vertex(g, 3, 4)
    assert ext.case is CaseTag.CASE_2B
    assert is_proper_coloring(g2, ext.coloring)
    assert len(colors_used(g2, ext.coloring)) == 3
    assert brute_omega(g2) == 3 and not brute_k_colorable(g2, 2)


def test_extend_coloring_edge_to_triangle():
    g = complete(2)
    out = extend_coloring(g, {0: 0, 1: 1}, 1, 2)
    assert repeat_vertex(g, 1, 2) == complete(3)
    assert len(set(out.values())) == 3


def test_extend_coloring_rejects_bad_input():
    with pytest.raises(ImproperInput):
        extend_coloring(complete(2), {0: 0, 1: 0}, 0, 2)
    c5 = cycle(5)
    _, f = chromatic_number(c5)  # 3 colours but omega is 2
    with pytest.raises(ImproperInput):
        extend_coloring(c5, f, 0, 5)
    with pytest.raises(VertexCollision):
        extend_coloring(complete(2), {0: 0, 1: 1}, 0, 1)


def test_check_replication_lemma_examples():
    c4 = cycle(4)
    assert check_replication_lemma(c4)
    assert all(brute_perfect(repeat_vertex(c4, a, 4)) for a in c4.vertices)
    assert check_replication_lemma(cycle(5))
    assert not brute_perfect(cycle(5))
    assert check_replication_lemma(complete(1))
    with pytest.raises(SizeLimitError):
        check_replication_lemma(edgeless(8))


def test_replication_instance():
    inst = ReplicationInstance.make(cycle(4), 1)
    assert inst.a2 == 4 and inst.g2 == repeat_vertex(cycle(4), 1, 4)


def test_replication_does_not_preserve_niceness():
    g2, g3 = fig4_G2(), fig4_G3()
    assert clique_number(g2)[0] == chromatic_number(g2)[0] == 3
    assert chromatic_number(g3)[0] > clique_number(g3)[0]
    assert (brute_omega(g3), brute_chi(g3)) == (clique_number(g3)[0], chromatic_number(g3)[0]) == (3, 4)
    assert not is_perfect(g2).verdict and not is_perfect(g3).verdict


def _perfect_graphs_upto(n_max):
    for n in range(1, n_max + 1):
        for g in enumerate_labeled(n):
            if is_perfect(g).verdict:
                yield g


def test_extend_coloring_optimal_on_all_small_perfect_graphs():
    checked = 0
    for g in _perfect_graphs_upto(5):
        omega = clique_number(g)[0]
        _, f = chromatic_number(g)
        for a in g.vertices:
            ext = extend(g, f, a, g.n)
            g2 = repeat_vertex(g, a, g.n)
            omega2 = clique_number(g2)[0]
            assert is_proper_coloring(g2, ext.coloring)
            assert len(colors_used(g2, ext.coloring)) == omega2
            in_max = exists_max_clique_with(g, a)[0]
            assert in_max == (omega2 == omega + 1)
            assert (not in_max) == (omega2 == omega)
            assert (ext.case is CaseTag.CASE_2A) == in_max
            if not in_max:
                star = induced_subgraph(g, OrdSet(v for v in g.vertices if f[v] != f[a] or v == a))
                assert clique_number(star)[0] < omega
            checked += 1
    assert checked > 1000


@given(graphs(min_n=1, max_n=6), st.data())
@settings(max_examples=80)
def test_case_dichotomy_random(g, data):
    a = data.draw(st.sampled_from(g.vertices.elems))
    omega = clique_number(g)[0]
    omega2 = clique_number(repeat_vertex(g, a))[0]
    expected = CaseTag.CASE_2A if omega2 == omega + 1 else CaseTag.CASE_2B
    assert replication_case(g, a) is expected
    assert omega2 - omega in (0, 1)
