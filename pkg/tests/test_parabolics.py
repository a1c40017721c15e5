from itertools import combinations

import numpy as np
import pytest

from src.exceptions import PresentationMismatchError
from src.graphs import SimpleGraph, closed_neighbourhood, iter_graphs
from src.groups.labels import VertexLabel
from src.groups.parabolics import (
    canonicalize,
    clique_factor,
    clique_inclusive_cofactors,
    contains,
    factors,
    intersect,
    is_special_subproduct,
    maximal_product_parabolics,
    member,
    member_of_product,
    normalizer,
    parabolic_support,
    retract_to,
    standard,
    subproducts,
    thick_free_factors,
    vertex_splitting,
)
from src.groups.words import Presentation, ball, normalize


@pytest.fixture
def p3():
    return Presentation.uniform(SimpleGraph.path(["a", "b", "c"]), VertexLabel.integers())


@pytest.fixture
def cone_over_square():
    """Apex a joined to the square 0-1-2-3"""
    square = [("0", "1"), ("1", "2"), ("2", "3"), ("3", "0")]
    apex = [("a", v) for v in "0123"]
    graph = SimpleGraph(["a", "0", "1", "2", "3"], square + apex)
    return Presentation.uniform(graph, VertexLabel.integers())


def types(parabolics):
    return [p.ordered_type() for p in parabolics]


class TestCanonicalize:
    def test_strips_tail_inside_the_type(self, free_product):
        a = free_product.syllable("a", 1)
        assert canonicalize(a, {"a"}).is_standard

    def test_strips_tail_in_the_orthogonal(self, free_abelian):
        b = free_abelian.syllable("b", 2)
        assert canonicalize(b, {"a"}) == standard(free_abelian, {"a"})

    def test_keeps_other_conjugators(self, free_product):
        b = free_product.syllable("b", 1)
        p = canonicalize(b, {"a"})
        assert p.conjugator == b
        assert str(p) == "b^1·G_{a}·(b^1)⁻¹"


class TestIntersect:
    def test_standard_subgroups(self, p3):
        meet = intersect(standard(p3, {"a", "b"}), standard(p3, {"b", "c"}))
        assert meet == standard(p3, {"b"})

    def test_conjugates_in_a_free_group_meet_trivially(self, free_product):
        a = free_product.syllable("a", 1)
        meet = intersect(canonicalize(a, {"b"}), standard(free_product, {"b"}))
        assert meet.is_trivial

    def test_conjugates_by_a_commuting_letter_coincide(self, free_abelian):
        b = free_abelian.syllable("b", 1)
        meet = intersect(canonicalize(b, {"a"}), standard(free_abelian, {"a"}))
        assert meet == standard(free_abelian, {"a"})

    def test_rejects_mixed_presentations(self, free_product, free_abelian):
        with pytest.raises(PresentationMismatchError):
            intersect(standard(free_product, {"a"}), standard(free_abelian, {"a"}))


def test_normalizer(p3):
    assert normalizer(standard(p3, {"a"})).type_vertices == {"a", "b"}
    assert normalizer(standard(p3, {"b"})).type_vertices == {"a", "b", "c"}


class TestParabolicSupport:
    def test_conjugate_of_a_vertex_element(self, free_product):
        x = normalize(free_product, [("a", 1), ("b", 1), ("a", -1)])
        support = parabolic_support(x)
        assert support.conjugator == free_product.syllable("a", 1)
        assert support.type_vertices == {"b"}

    def test_cyclically_reduced_element(self, free_product):
        x = normalize(free_product, [("a", 2), ("b", 1)])
        assert parabolic_support(x) == standard(free_product, {"a", "b"})

    def test_identity(self, free_product):
        assert parabolic_support(free_product.identity()).is_trivial


def test_membership_and_containment(free_product):
    a = free_product.syllable("a", 1)
    b = free_product.syllable("b", 1)
    g_a = standard(free_product, {"a"})
    assert member(g_a, a ** 3)
    assert not member(g_a, b)
    conj = canonicalize(a, {"b"})
    assert member(conj, b.conjugate(a))
    everything = standard(free_product, {"a", "b"})
    assert contains(everything, g_a)
    assert contains(everything, conj)
    assert not contains(g_a, everything)


def test_retract_to(free_product):
    x = normalize(free_product, [("a", 1), ("b", 1)])
    assert retract_to(standard(free_product, {"a"}), x) == free_product.syllable("a", 1)


def test_member_of_product(p3):
    x = normalize(p3, [("a", 1), ("c", 1)])
    assert member_of_product(x, {"a"}, {"c"})
    y = normalize(p3, [("c", 1), ("a", 1)])
    assert not member_of_product(y, {"a"}, {"c"})


def test_vertex_splitting(p3):
    star_a, link_a, rest = vertex_splitting(p3, "a")
    assert star_a.type_vertices == {"a", "b"}
    assert link_a.type_vertices == {"b"}
    assert rest.type_vertices == {"b", "c"}


def test_maximal_products(c5_integers, free_abelian, free_product):
    found = maximal_product_parabolics(c5_integers)
    assert len(found) == 5
    assert not any(m.isolated_clique for m in found)
    (only,) = maximal_product_parabolics(free_abelian)
    assert only.isolated_clique
    assert maximal_product_parabolics(free_product) == []


class TestFactors:
    def test_cone_over_a_square(self, cone_over_square):
        p = standard(cone_over_square, cone_over_square.graph.vertices)
        assert clique_factor(p).type_vertices == {"a"}
        assert types(factors(p)) == [["a"], ["0", "2"], ["1", "3"]]
        assert types(clique_inclusive_cofactors(p)) == [["a", "1", "3"], ["a", "0", "2"]]

    def test_subproducts(self, cone_over_square):
        p = standard(cone_over_square, cone_over_square.graph.vertices)
        found = subproducts(p)
        assert len(found) == 8
        assert found[0].is_trivial
        special = [s for s in found if is_special_subproduct(p, s)]
        assert standard(cone_over_square, {"0", "2"}) not in special

    def test_thick_free_factors(self):
        graph = SimpleGraph(["a", "b", "c", "d"], [("a", "b"), ("b", "c")])
        pres = Presentation.uniform(graph, VertexLabel.integers())
        p = standard(pres, graph.vertices)
        assert types(thick_free_factors(p)) == [["a", "b", "c"]]

    def test_trivial_parabolic(self, free_product):
        p = standard(free_product, set())
        assert factors(p) == []
        assert clique_factor(p).is_trivial


def parabolic_family(pres, radius):
    """Every type conjugated by every element of the ball"""
    vertices = pres.graph.vertices
    all_types = [frozenset(c) for size in range(len(vertices) + 1) for c in combinations(vertices, size)]
    return sorted({canonicalize(g, lam) for g in ball(pres, radius) for lam in all_types}, key=str)


@pytest.fixture(params=["path", "pentagon"])
def family(request):
    if request.param == "path":
        pres = Presentation.uniform(SimpleGraph.path(["a", "b", "c", "d"]), VertexLabel.cyclic(2))
        return parabolic_family(pres, 2)
    return parabolic_family(Presentation.uniform(SimpleGraph.cycle(5), VertexLabel.cyclic(3)), 1)


class TestCanonicalForms:
    def test_pentagon_conjugator_loses_its_tail(self):
        pres = Presentation.uniform(SimpleGraph.cycle(5), VertexLabel.cyclic(2))
        g = normalize(pres, [("3", 1), ("1", 1)])
        p = canonicalize(g, {"1"})
        assert p.conjugator == pres.syllable("3", 1)
        assert p.type_vertices == {"1"}

    def test_canonicalize_is_idempotent(self, family):
        for p in family:
            assert canonicalize(p.conjugator, p.type_vertices) == p

    def test_conjugating_by_the_type_changes_nothing(self, family):
        for p in family:
            for v in p.type_vertices:
                inside = p.presentation.syllable(v, 1)
                assert canonicalize(p.conjugator * inside, p.type_vertices) == p


class TestIntersectionLaws:
    def test_commutative_and_idempotent(self, family):
        rng = np.random.default_rng(31)
        for _ in range(150):
            p = family[int(rng.integers(len(family)))]
            q = family[int(rng.integers(len(family)))]
            assert intersect(p, q) == intersect(q, p)
            assert intersect(p, p) == p
            assert contains(p, intersect(p, q))

    def test_associative(self, family):
        rng = np.random.default_rng(37)
        for _ in range(100):
            p, q, r = (family[int(rng.integers(len(family)))] for _ in range(3))
            assert intersect(intersect(p, q), r) == intersect(p, intersect(q, r))

    def test_non_clique_conjugate_meets_a_standard_subgroup(self, p5):
        pres = Presentation.uniform(p5, VertexLabel.integers())
        a = pres.syllable("a", 1)
        meet = intersect(standard(pres, {"a", "b", "c", "d"}), canonicalize(a, {"b", "c", "d", "e"}))
        assert meet.conjugator == a
        assert meet.type_vertices == {"b", "c", "d"}

    def test_conjugates_by_an_orthogonal_element(self, c4):
        pres = Presentation.uniform(c4, VertexLabel.integers())
        g = pres.syllable("1", 2)
        meet = intersect(canonicalize(g, {"0", "2"}), standard(pres, {"0", "1"}))
        assert meet == standard(pres, {"0"})


def test_parabolics_split_along_a_product(c4):
    """A parabolic inside P1 × P2 is the product of its traces"""
    pres = Presentation.uniform(c4, VertexLabel.cyclic(2))
    left, right = standard(pres, {"0", "2"}), standard(pres, {"1", "3"})
    for q in parabolic_family(pres, 2):
        on_left, on_right = intersect(q, left), intersect(q, right)
        assert on_left.type_vertices == q.type_vertices & {"0", "2"}
        assert on_right.type_vertices == q.type_vertices & {"1", "3"}
        assert on_left.type_vertices | on_right.type_vertices == q.type_vertices
        assert contains(q, on_left) and contains(q, on_right)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_specialness_passes_to_smaller_subproducts(n):
    for graph in iter_graphs(n, n):
        pres = Presentation.uniform(graph, VertexLabel.integers())
        for found in maximal_product_parabolics(pres):
            p = found.parabolic
            subs = subproducts(p)
            assert not is_special_subproduct(p, subs[-1])
            everything = frozenset(graph.vertices)
            assert is_special_subproduct(p, subs[0]) == (closed_neighbourhood(graph, p.type_vertices) != everything)
            for s in subs:
                for t in subs:
                    if s.type_vertices <= t.type_vertices and is_special_subproduct(p, t):
                        assert is_special_subproduct(p, s)
