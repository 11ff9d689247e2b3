import warnings

import pytest

from graphyps.families import (ADJ_CASE_A, ADJ_CASE_B11, ADJ_XX5, NonSimpleGluingWarning,
                               catalog, complete, cycle, family, from_adjacency, glue, gzz, st5,
                               triangle, wheel, xx5, zigzag)
from graphyps.graph import betti, canonical_key, is_connected, is_isomorphic


def test_wheel_basics():
    assert is_isomorphic(wheel(3), complete(4))
    w = wheel(4)
    assert w.num_edges == 8 and betti(w) == 4
    assert w.degree_sequence() == (4, 3, 3, 3, 3)
    with pytest.raises(ValueError):
        wheel(2)


@pytest.mark.parametrize("n", range(3, 8))
def test_wheel_is_gzz(n):
    assert canonical_key(wheel(n)) == canonical_key(gzz([n - 1]))


def test_gzz_shapes():
    g = gzz([2])
    assert (g.vertex_count, g.num_edges) == (4, 6)
    assert is_isomorphic(g, wheel(3))
    assert is_isomorphic(gzz([2, 2]), zigzag(5))
    big = gzz([3, 2, 3, 4])
    assert (big.vertex_count, big.num_edges) == (14, 26)


@pytest.mark.parametrize("bad", [[1], [1, 2], [2, 1], [], [2, 0, 2]])
def test_gzz_rejects(bad):
    with pytest.raises(ValueError):
        gzz(bad)


@pytest.mark.parametrize("l", [[2], [3], [2, 2], [2, 1, 2], [3, 1, 1, 2], [4, 1, 3], [2, 2, 2]])
def test_gzz_invariants(l):
    g = gzz(l)
    assert g.is_simple() and is_connected(g)
    assert min(g.degrees()) >= 3
    assert g.num_edges == 2 * betti(g) == 2 * (1 + sum(l))
    assert g.vertex_count == betti(g) + 1


def test_zigzag():
    z = zigzag(5)
    assert z.num_edges == 10 and betti(z) == 5
    assert not is_isomorphic(z, wheel(5))
    assert zigzag(6).num_edges == 12 and betti(zigzag(6)) == 6
    with pytest.raises(ValueError):
        zigzag(4)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_zigzag_is_gzz(n):
    assert canonical_key(zigzag(n)) == canonical_key(gzz([2] + [1] * (n - 5) + [2]))


def test_case_matrices():
    assert is_isomorphic(from_adjacency(ADJ_CASE_A), wheel(5))
    assert is_isomorphic(from_adjacency(ADJ_CASE_B11), zigzag(5))
    assert is_isomorphic(from_adjacency(ADJ_XX5), xx5())


def _deg4_adjacent(g):
    deg = g.degrees()
    a, b = [v for v in range(g.vertex_count) if deg[v] == 4]
    return bool(g.adjacency()[a, b])


def test_exceptional_graphs():
    for g in (xx5(), st5()):
        assert (g.vertex_count, g.num_edges, betti(g)) == (6, 10, 5)
        assert g.degree_sequence() == (4, 4, 3, 3, 3, 3)
    assert not _deg4_adjacent(xx5())
    assert _deg4_adjacent(st5())
    assert not is_isomorphic(xx5(), st5())


def test_from_adjacency_validation():
    with pytest.raises(ValueError):
        from_adjacency([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        from_adjacency([[1]])


def test_glue_ws3_rims_give_xx5():
    w = wheel(3)
    rim = range(3)  # rim edges come first
    for a in rim:
        for b in rim:
            for swap in (False, True):
                assert is_isomorphic(glue(w, a, w, b, swap=swap), xx5())


def test_glue_counts():
    g = glue(wheel(4), 1, zigzag(5), 3)
    assert g.num_edges == 8 + 10 - 2
    assert betti(g) == 4 + 5 - 1


def test_glue_triangles_square():
    g = glue(triangle(), 0, triangle(), 0)
    assert is_isomorphic(g, cycle(4)) and betti(g) == 1


def test_glue_symmetric_up_to_iso():
    a, b = wheel(4), zigzag(5)
    assert is_isomorphic(glue(a, 2, b, 5), glue(b, 5, a, 2))


def test_glue_rim_choice_irrelevant_for_wheel():
    w, z = wheel(5), zigzag(5)
    keys = {canonical_key(glue(w, r, z, 0)) for r in range(5)}
    assert len(keys) == 1


def test_glue_of_simple_graphs_is_simple():
    # the only edges joining the identified pair are the two dropped ones
    for a in range(6):
        for b in range(8):
            with warnings.catch_warnings():
                warnings.simplefilter("error")
                assert glue(complete(4), a, wheel(4), b).is_simple()


def test_glue_nonsimple_warns():
    from graphyps.graph import Graph
    tripled = Graph(2, [(0, 1), (0, 1), (1, 0)])
    with pytest.warns(NonSimpleGluingWarning):
        g = glue(tripled, 0, triangle(), 0)
    assert not g.is_simple()


def test_glue_bad_edge():
    with pytest.raises(IndexError):
        glue(triangle(), 3, triangle(), 0)


def test_family_dispatch():
    assert family("ws", [4]) == wheel(4)
    assert family("gzz", [2, 1, 2]) == gzz([2, 1, 2])
    assert family("xx5") == xx5()
    with pytest.raises(ValueError):
        family("ws", [])
    with pytest.raises(ValueError):
        family("nope")


def test_catalog_contents():
    cat = catalog()
    assert set(cat) >= {"K4", "WS3", "WS6", "ZZ7", "XX5", "ST5", "GZZ(3,2,3,4)"}
