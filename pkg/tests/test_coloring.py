import pytest

from critlab.coloring import (
    Coloring,
    ColorStatus,
    chromatic_number,
    colorability_status,
    colors_used,
    count_color_partitions,
    enumerate_color_partitions,
    equivalent,
    is_k_colorable,
    is_uniquely_k_colorable,
    partition_of,
    rainbow_vertices,
    recolor_class_away,
    validate_coloring,
)
from critlab.graphs import (
    complete_graph,
    cycle_graph,
    delete_edges,
    delete_vertices,
    empty_graph,
    from_edges,
    join,
    path_graph,
)
from oracles import brute_chromatic, brute_partitions, petersen


def test_validate_coloring():
    k3 = complete_graph(3)
    assert validate_coloring(k3, Coloring((1, 2, 3), 3))
    assert not validate_coloring(k3, Coloring((1, 1, 2), 3))
    assert validate_coloring(empty_graph(3), Coloring((1, 1, 1), 1))
    with pytest.raises(ValueError):
        validate_coloring(k3, Coloring((1, 2), 3))
    with pytest.raises(ValueError):
        Coloring((1, 2, 4), 3)  # color above palette


def test_chromatic_examples():
    assert chromatic_number(complete_graph(6)) == 6
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(join(cycle_graph(5), complete_graph(3))) == 6
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(empty_graph(0)) == 0
    assert chromatic_number(empty_graph(4)) == 1


def test_chromatic_matches_oracle_small(connected):
    for n in range(1, 7):
        for g in connected(n):
            assert chromatic_number(g) == brute_chromatic(g)


def test_decision_matches_brute_oracle(connected):
    from oracles import brute_is_colorable

    for n in range(1, 8):
        for g in connected(n):
            for k in range(1, 6):
                found = is_k_colorable(g, k)
                assert (found is not None) == brute_is_colorable(g, k), (g, k)
                if found is not None:
                    assert validate_coloring(g, found)


def test_is_k_colorable():
    assert is_k_colorable(complete_graph(6), 5) is None
    c = is_k_colorable(cycle_graph(5), 3)
    assert c is not None and validate_coloring(cycle_graph(5), c)
    c4 = is_k_colorable(complete_graph(4), 4)
    assert c4 is not None and set(c4.colors) == {1, 2, 3, 4}
    assert is_k_colorable(empty_graph(0), 0) is not None
    assert is_k_colorable(complete_graph(2), 0) is None


def test_colors_used():
    c = Coloring((1, 2, 3, 1), 3)
    assert colors_used(c, [0, 3]) == frozenset({1})
    assert colors_used(Coloring((1, 2, 3), 3), []) == frozenset()
    with pytest.raises(ValueError):
        colors_used(c, [7])
    # a 3-coloring of the K3 left after deleting a K6 triangle uses 3 colors
    rest = delete_vertices(complete_graph(6), [0, 1, 2])
    c = is_k_colorable(rest, 3)
    assert len(colors_used(c, range(3))) == 3


def test_partition_and_equivalence():
    k3 = complete_graph(3)
    assert equivalent(Coloring((1, 2, 3), 3), Coloring((3, 1, 2), 3))
    p3 = path_graph(3)
    assert not equivalent(Coloring((1, 2, 1), 3), Coloring((1, 2, 3), 3))
    with pytest.raises(ValueError):
        equivalent(Coloring((1,), 1), Coloring((1, 2), 2))
    part = partition_of(Coloring((2, 1, 2), 2))
    assert part.to_json() == [[0, 2], [1]]
    assert validate_coloring(p3, Coloring((1, 2, 1), 2))


def test_obs_style_nonequivalent_construction():
    # moving one endpoint of a non-edge to a fresh color changes the partition
    p3 = path_graph(3)
    c = Coloring((1, 2, 1), 4)
    c_prime = Coloring((1, 2, 4), 4)
    assert validate_coloring(p3, c) and validate_coloring(p3, c_prime)
    assert not equivalent(c, c_prime)


def test_enumerate_partitions_examples():
    assert len(enumerate_color_partitions(complete_graph(4), 4, 2)) == 1
    parts = enumerate_color_partitions(path_graph(3), 4, 2)
    assert len(parts) == 2
    assert [p.to_json() for p in parts] == [[[0, 2], [1]], [[0], [1], [2]]]
    assert enumerate_color_partitions(complete_graph(6), 5, 1) == []
    with pytest.raises(ValueError):
        enumerate_color_partitions(path_graph(3), 4, 0)


def test_enumeration_matches_brute_oracle(allgraphs):
    for n in range(1, 6):
        for g in allgraphs(n):
            for k in range(1, 5):
                expected = brute_partitions(g, k)
                got = enumerate_color_partitions(g, k, 10_000)
                got_norm = set()
                for part in got:
                    colors = [0] * g.n
                    for i, cls in enumerate(part.classes, start=1):
                        for v in cls:
                            colors[v] = i
                    got_norm.add(tuple(colors))
                assert got_norm == expected


def test_unique_colorability_examples():
    assert is_uniquely_k_colorable(complete_graph(3), 4)
    assert is_uniquely_k_colorable(complete_graph(4), 4)
    assert not is_uniquely_k_colorable(path_graph(3), 4)
    assert not is_uniquely_k_colorable(complete_graph(5), 4)
    assert colorability_status(complete_graph(5), 4) is ColorStatus.UNCOLORABLE
    assert colorability_status(path_graph(3), 4) is ColorStatus.MULTIPLE
    assert colorability_status(complete_graph(4), 4) is ColorStatus.UNIQUE


def test_unique_monotone_in_k(allgraphs):
    # uniquely j-colorable implies uniquely k-colorable for chi <= k <= j
    for n in range(1, 7):
        for g in allgraphs(n):
            chi = chromatic_number(g)
            statuses = {k: is_uniquely_k_colorable(g, k) for k in range(max(chi, 1), 7)}
            for j in range(max(chi, 1), 7):
                if statuses[j]:
                    for k in range(max(chi, 1), j):
                        assert statuses[k], (g, k, j)


def test_monotone_deletion(connected):
    for n in range(2, 7):
        for g in connected(n):
            chi = chromatic_number(g)
            for v in range(g.n):
                sub_chi = chromatic_number(delete_vertices(g, [v]))
                assert chi - 1 <= sub_chi <= chi
            for e in g.edges():
                sub_chi = chromatic_number(delete_edges(g, [e]))
                assert chi - 1 <= sub_chi <= chi


def test_join_additivity(allgraphs):
    pools = {n: allgraphs(n) for n in range(1, 9)}
    for a in range(1, 9):
        for b in range(1, 9 - a + 1):
            for g in pools[a]:
                for h in pools[b]:
                    assert chromatic_number(join(g, h)) == (
                        chromatic_number(g) + chromatic_number(h)
                    )


def test_rainbow_vertices_examples():
    k6 = complete_graph(6)
    ident = Coloring(tuple(range(1, 7)), 6)
    assert rainbow_vertices(k6, ident) == [0, 1, 2, 3, 4, 5]

    # C5 with classes {0,2}, {1,3}, {4}: vertex 1 sees only class 1, but
    # vertex 3 is adjacent to 2 (class 1) and 4 (class 3)
    c5 = cycle_graph(5)
    c = Coloring((1, 2, 1, 2, 3), 3)
    assert rainbow_vertices(c5, c) == [0, 3, 4]

    # K6 plus an isolated vertex sharing color 1: vertex 0 covers class 1
    g = from_edges(7, complete_graph(6).edges())
    c = Coloring((1, 2, 3, 4, 5, 6, 1), 6)
    assert rainbow_vertices(g, c) == [0, 1, 2, 3, 4, 5]

    with pytest.raises(ValueError):
        rainbow_vertices(complete_graph(3), Coloring((1, 1, 2), 2))


def test_rainbow_absent_and_recoloring():
    # a 4-coloring of C5 where {1} is a class missing some other class
    c5 = cycle_graph(5)
    c = Coloring((1, 4, 1, 2, 3), 4)
    assert validate_coloring(c5, c)
    assert rainbow_vertices(c5, c) is None
    classes = partition_of(c).classes
    # class {1} (vertex 1, color 4) has no neighbor colored 3
    idx = next(i for i, cls in enumerate(classes) if cls == frozenset({1}))
    smaller = recolor_class_away(c5, c, idx)
    assert validate_coloring(c5, smaller)
    assert len(set(smaller.colors)) == len(set(c.colors)) - 1


def test_rainbow_completeness_small(connected):
    # every class of every proper chi-coloring has a rainbow vertex
    for n in range(2, 7):
        for g in connected(n):
            chi = chromatic_number(g)
            for part in enumerate_color_partitions(g, chi, 50):
                colors = [0] * g.n
                for i, cls in enumerate(part.classes, start=1):
                    for v in cls:
                        colors[v] = i
                c = Coloring(tuple(colors), chi)
                assert rainbow_vertices(g, c) is not None, (g, c)
