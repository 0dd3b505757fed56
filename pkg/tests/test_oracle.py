import itertools
import math

import pytest

from permgi import Graph, oracle_all_isomorphisms, oracle_isomorphism, verify_mapping

from .conftest import G1_TO_G2, all_labeled_graphs, complete_graph, path_graph


def naive_all(g1, g2):
    # no pruning at all
    return [
        p for p in itertools.permutations(range(g1.n)) if verify_mapping(g1, g2, p)
    ]


def test_g1_g2_contains_expected(g1, g2):
    found = oracle_all_isomorphisms(g1, g2)
    labelled = [m.labelled(g1, g2) for m in found]
    assert G1_TO_G2 in labelled
    assert [m.forward for m in found] == naive_all(g1, g2)
    assert len(found) == 1
    assert oracle_isomorphism(g1, g2).labelled(g1, g2) == G1_TO_G2


def test_p3_k3():
    assert oracle_isomorphism(path_graph(3), complete_graph(3)) is None


def test_k2():
    k2 = complete_graph(2)
    assert oracle_isomorphism(k2, k2).forward == (0, 1)
    assert [m.forward for m in oracle_all_isomorphisms(k2, k2)] == [(0, 1), (1, 0)]


def test_k3_full_symmetric_group():
    k3 = complete_graph(3)
    assert len(oracle_all_isomorphisms(k3, k3)) == math.factorial(3)


def test_bounds():
    big = path_graph(11)
    with pytest.raises(ValueError):
        oracle_isomorphism(big, big)
    with pytest.raises(ValueError):
        oracle_all_isomorphisms(path_graph(9), path_graph(9))


@pytest.mark.parametrize("n", [3, 4])
def test_matches_unpruned_search_exhaustive(n):
    graphs = list(all_labeled_graphs(n))
    for g in graphs[::3]:
        for h in graphs[::5]:
            found = [m.forward for m in oracle_all_isomorphisms(g, h)]
            assert found == naive_all(g, h)
            first = oracle_isomorphism(g, h)
            assert (first.forward if first else None) == (found[0] if found else None)


@pytest.mark.parametrize("n", range(1, 6))
def test_every_relabeling_found(n):
    g = Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if (i + 2 * j) % 3])
    for perm in itertools.permutations(range(n)):
        m = oracle_isomorphism(g, g.relabel(perm))
        assert m is not None and verify_mapping(g, g.relabel(perm), m)
