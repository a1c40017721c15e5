from itertools import combinations

import pytest

from src.exceptions import InputError
from src.graphs import (
    SimpleGraph,
    automorphisms,
    clique_reduction,
    cliques,
    complement,
    has_partial_conjugation,
    is_clique_reduced,
    is_collapsible,
    is_strongly_reduced,
    is_transvection_free,
    iter_graphs,
    join_decompose,
    link,
    maximal_join_subgraphs,
    orthogonal,
    star,
    untransvectable_vertices,
)


class TestConstruction:
    def test_rejects_duplicate_vertices(self):
        with pytest.raises(InputError):
            SimpleGraph(["a", "a"])

    def test_rejects_loops_and_undeclared_endpoints(self):
        with pytest.raises(InputError):
            SimpleGraph(["a"], [("a", "a")])
        with pytest.raises(InputError):
            SimpleGraph(["a"], [("a", "b")])

    def test_declaration_order_is_kept(self):
        g = SimpleGraph(["c", "a", "b"], [("a", "c")])
        assert g.vertices == ("c", "a", "b")
        assert g.ordered({"a", "b", "c"}) == ["c", "a", "b"]

    def test_subgraph_keeps_induced_edges(self, p4):
        sub = p4.subgraph({"a", "b", "d"})
        assert sub.vertices == ("a", "b", "d")
        assert sub.edges == {frozenset({"a", "b"})}

    def test_nx_graph_is_read_only(self, c5):
        import networkx as nx

        with pytest.raises(nx.NetworkXError):
            c5.nx_graph.add_edge("0", "2")


def test_link_and_star(p4):
    assert link(p4, "b") == {"a", "c"}
    assert star(p4, "b") == {"a", "b", "c"}
    with pytest.raises(InputError):
        link(p4, "z")


def test_orthogonal(p4, c5):
    assert orthogonal(p4, {"a"}).vertices == {"b"}
    assert orthogonal(p4, {"a", "c"}).vertices == {"b"}
    assert orthogonal(c5, set()).vertices == set(c5.vertices)


def _subsets(graph):
    vertices = graph.vertices
    return [frozenset(c) for size in range(len(vertices) + 1) for c in combinations(vertices, size)]


def test_orthogonal_is_antitone_and_double_orthogonal_grows():
    for graph in iter_graphs(1, 4):
        subsets = _subsets(graph)
        perp = {lam: orthogonal(graph, lam).vertices for lam in subsets}
        for lam in subsets:
            assert lam <= orthogonal(graph, perp[lam]).vertices
            for bigger in subsets:
                if lam <= bigger:
                    assert perp[bigger] <= perp[lam]


def test_complement(p4):
    edges = {frozenset(e) for e in [("a", "c"), ("a", "d"), ("b", "d")]}
    assert complement(p4).edges == edges


@pytest.mark.parametrize(
    "fixture, expected",
    [("c5", True), ("p4", False), ("k3", False), ("edge", False), ("free_pair", False)],
)
def test_is_transvection_free(request, fixture, expected):
    assert is_transvection_free(request.getfixturevalue(fixture)) is expected


@pytest.mark.parametrize(
    "fixture, expected",
    [("c5", {"0", "1", "2", "3", "4"}), ("p4", {"b", "c"}), ("k3", set())],
)
def test_untransvectable_vertices(request, fixture, expected):
    assert untransvectable_vertices(request.getfixturevalue(fixture)) == expected


def test_untransvectable_vertices_survive_automorphisms(p4, c5):
    for g in (p4, c5):
        marked = untransvectable_vertices(g)
        for sigma in automorphisms(g):
            assert {sigma[v] for v in marked} == marked


@pytest.mark.parametrize(
    "fixture, expected",
    [("c5", False), ("p4", False), ("c4", False), ("p5", True)],
)
def test_has_partial_conjugation(request, fixture, expected):
    assert has_partial_conjugation(request.getfixturevalue(fixture)) is expected


def test_strong_reduction(c5, c4, k3, p4):
    assert is_strongly_reduced(c5)
    assert is_strongly_reduced(p4)
    assert not is_strongly_reduced(c4)
    assert is_collapsible(c4, {"0", "2"})
    assert not is_strongly_reduced(k3)


def test_subset_scans_respect_the_size_limit():
    big = SimpleGraph.cycle(13)
    with pytest.raises(InputError):
        is_strongly_reduced(big)
    with pytest.raises(InputError):
        maximal_join_subgraphs(big)
    assert is_transvection_free(big)
    assert len(untransvectable_vertices(big)) == 13


def test_clique_reduction(k3, p4, edge):
    assert not is_clique_reduced(k3)
    assert is_clique_reduced(p4)
    assert not is_clique_reduced(edge)
    quotient, classes = clique_reduction(k3)
    assert quotient.vertices == ("a",)
    assert classes == {"a": ("a", "b", "c")}


def test_join_decompose(c4, c5):
    parts = [part.to_list() for part in join_decompose(c4)]
    assert parts == [["0", "2"], ["1", "3"]]
    assert [part.to_list() for part in join_decompose(c5)] == [list(c5.vertices)]
    with pytest.raises(InputError):
        join_decompose(SimpleGraph([]))


def test_cliques_include_the_empty_one(edge):
    assert cliques(edge) == (frozenset(), frozenset({"a"}), frozenset({"b"}), frozenset({"a", "b"}))


def test_maximal_join_subgraphs_of_a_pentagon(c5):
    found = maximal_join_subgraphs(c5)
    assert len(found) == 5
    assert all(len(lam) == 3 for lam in found)
    assert frozenset({"4", "0", "1"}) in found


def test_automorphism_counts(c5, p4):
    assert len(automorphisms(c5)) == 10
    assert len(automorphisms(p4)) == 2


@pytest.mark.parametrize("n, count", [(3, 4), (4, 11), (5, 34)])
def test_iter_graphs_counts(n, count):
    assert sum(1 for _ in iter_graphs(n, n)) == count


def test_iter_graphs_bounds():
    with pytest.raises(InputError):
        list(iter_graphs(0, 9))


@pytest.mark.slow
def test_iter_graphs_eight_vertices():
    assert sum(1 for _ in iter_graphs(8, 8)) == 12346
