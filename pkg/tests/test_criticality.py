import pytest

from critlab.coloring import chromatic_number
from critlab.criticality import (
    check_no_k_minus_1_clique,
    criticality_report,
    is_double_critical,
    is_edge_plus_vertex_critical,
    is_indep_edge_pair_critical,
    is_triangle_critical,
    is_vertex_critical,
    verify_triangle_lemma,
)
from critlab.graphs import (
    complete_graph,
    cycle_graph,
    from_edges,
    join,
    triangles,
)
from oracles import petersen


def c5_chord():
    return from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])


def test_vertex_critical():
    assert is_vertex_critical(complete_graph(6)).holds
    assert is_vertex_critical(cycle_graph(5)).holds
    out = is_vertex_critical(c5_chord())
    assert out.holds is False
    assert out.witness.kind == "vertex" and out.witness.vertices == (3,)


def test_double_critical():
    for k in range(2, 9):
        assert is_double_critical(complete_graph(k)).holds, k
    assert is_double_critical(cycle_graph(5)).holds is False
    out = is_double_critical(cycle_graph(7))
    assert out.holds is False and out.witness.vertices == (0, 1)


def test_triangle_critical():
    assert is_triangle_critical(complete_graph(6)).holds
    assert is_triangle_critical(complete_graph(3)).holds
    k2 = complete_graph(2)
    out = is_triangle_critical(k2)
    assert out.holds is False and out.witness.kind == "chi_below_3"
    out = is_triangle_critical(join(cycle_graph(5), complete_graph(3)))
    assert out.holds is False
    assert out.witness.kind == "bad_triangle" and out.witness.vertices == (0, 1, 5)
    disconnected = from_edges(6, complete_graph(3).edges() + [(3, 4), (4, 5), (3, 5)])
    assert is_triangle_critical(disconnected).witness.kind == "disconnected"


def test_indep_edge_pairs():
    assert is_indep_edge_pair_critical(complete_graph(6)).holds
    assert is_indep_edge_pair_critical(complete_graph(4)).holds
    out = is_indep_edge_pair_critical(cycle_graph(6))
    assert out.holds is False
    na = is_indep_edge_pair_critical(complete_graph(3))
    assert na.holds is None and na.applicable is False


def test_edge_plus_vertex():
    assert is_edge_plus_vertex_critical(complete_graph(6)).holds
    assert is_edge_plus_vertex_critical(complete_graph(3)).holds
    out = is_edge_plus_vertex_critical(cycle_graph(5))
    assert out.holds is False and out.witness.vertices == (0, 1, 2)
    with pytest.raises(ValueError):
        is_edge_plus_vertex_critical(complete_graph(2))


def test_no_k_minus_1_clique():
    out = check_no_k_minus_1_clique(complete_graph(6))
    assert out.holds is False and out.witness.vertices == (0, 1, 2, 3, 4)
    out = check_no_k_minus_1_clique(cycle_graph(5))
    assert out.holds is False and out.witness.vertices == (0, 1)
    out = check_no_k_minus_1_clique(petersen())
    assert out.holds is False and out.witness.vertices == (0, 1)
    # C5 join C5 is 6-chromatic with clique number 4 < 5: the check holds
    c5c5 = join(cycle_graph(5), cycle_graph(5))
    assert chromatic_number(c5c5) == 6
    assert check_no_k_minus_1_clique(c5c5).holds is True


def test_report_implication_chain(connected):
    for n in range(1, 8):
        for g in connected(n):
            rep = criticality_report(g)  # __post_init__ asserts the chain
            if rep.triangle_critical:
                assert rep.failing_witness is None
            else:
                assert rep.failing_witness is not None


def test_report_fields():
    rep = criticality_report(complete_graph(6))
    doc = rep.to_json()
    assert doc["graph_id"] == "E~~w" and doc["chi"] == 6
    assert doc["triangle_critical"] and doc["failing_witness"] is None
    rep = criticality_report(cycle_graph(5))
    assert rep.vertex_critical and not rep.double_critical
    assert rep.failing_witness.kind == "edge"


def test_lemma_on_k6():
    k6 = complete_graph(6)
    for tri in triangles(k6):
        report = verify_triangle_lemma(k6, tri)
        assert report.ok, (tri, report.violations)
        assert len(report.t_set) == 3
        assert report.colors_on_t and all(x == 3 for x in report.colors_on_t)
        assert report.rainbow_triples
        for triple in report.rainbow_triples:
            assert set(triple) <= set(report.t_set)


def test_lemma_hypothesis_failure_still_measures():
    g = join(cycle_graph(5), complete_graph(3))
    report = verify_triangle_lemma(g, (5, 6, 7))
    assert not report.hypotheses_ok
    assert report.failed_hypothesis == "graph_not_triangle_critical"
    assert report.chi_without_triangle == 3
    assert report.t_set == (0, 1, 2, 3, 4)
    assert report.partitions_checked > 0
    assert all(x == 3 for x in report.colors_on_t)  # raw measurement still taken


def test_lemma_bad_triangle_input():
    report = verify_triangle_lemma(complete_graph(6), (0, 0, 1))
    assert report.failed_hypothesis == "triangle_does_not_induce_K3"
    report = verify_triangle_lemma(cycle_graph(5), (0, 1, 2))
    assert report.failed_hypothesis == "triangle_does_not_induce_K3"


def test_weakenings_only_complete_small(connected):
    for n in range(3, 7):
        for g in connected(n):
            full = (1 << g.n) - 1
            complete = all(g.adj[v] == full ^ (1 << v) for v in range(g.n))
            pair = is_indep_edge_pair_critical(g)
            if pair.holds is True:
                assert complete, g
            if g.edge_count:
                epv = is_edge_plus_vertex_critical(g)
                if epv.holds is True:
                    assert complete, g
