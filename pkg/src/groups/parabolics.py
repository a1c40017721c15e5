# src/groups/parabolics.py

"""
Parabolic subgroups gG_Λg⁻¹ in canonical form and their calculus:
intersections, normalizers, parabolic supports, retractions, and the
product / factor / clique-factor taxonomy of product parabolic subgroups.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from ..exceptions import PresentationMismatchError
from ..graphs import (
    InducedSubgraph,
    SimpleGraph,
    VertexSet,
    clique_factor_vertices,
    closed_neighbourhood,
    connected_components,
    is_clique,
    join_factors,
    maximal_join_subgraphs,
    orthogonal_vertices,
)
from .words import Element, Presentation, Syllable, invert, multiply, normalize, support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Parabolic:
    """
    Parabolic subgroup gG_Λg⁻¹ with g the canonical conjugator

    The canonical conjugator has no tail syllable in G_Λ × G_Λ⊥, which makes
    equality of subgroups structural equality of (conjugator, type).
    """

    conjugator: Element
    type_vertices: VertexSet

    @property
    def presentation(self) -> Presentation:
        return self.conjugator.presentation

    @property
    def graph(self) -> SimpleGraph:
        return self.conjugator.presentation.graph

    @property
    def is_trivial(self) -> bool:
        return not self.type_vertices

    @property
    def is_standard(self) -> bool:
        return self.conjugator.is_identity

    @property
    def type_graph(self) -> InducedSubgraph:
        return InducedSubgraph(self.graph, self.type_vertices)

    def ordered_type(self) -> List[str]:
        return self.graph.ordered(self.type_vertices)

    def to_dict(self) -> dict:
        return {"conjugator": str(self.conjugator), "type_vertices": self.ordered_type()}

    def __str__(self) -> str:
        inner = "{" + ",".join(self.ordered_type()) + "}"
        if self.is_standard:
            return f"G_{inner}"
        return f"{self.conjugator}·G_{inner}·({self.conjugator})⁻¹"


def _check_same(p: Parabolic, q: Parabolic) -> None:
    if p.presentation != q.presentation:
        raise PresentationMismatchError("Parabolic subgroups belong to different presentations")


def _head_positions(x: Element) -> List[int]:
    graph = x.presentation.graph
    return [
        i for i, s in enumerate(x.word)
        if all(graph.adjacent(t.vertex, s.vertex) for t in x.word[:i])
    ]


def _tail_positions(x: Element) -> List[int]:
    graph = x.presentation.graph
    return [
        i for i, s in enumerate(x.word)
        if all(graph.adjacent(t.vertex, s.vertex) for t in x.word[i + 1:])
    ]


def _drop(x: Element, position: int) -> Element:
    return normalize(x.presentation, x.word[:position] + x.word[position + 1:])


def _as_vertices(pres: Presentation, lam: Iterable[str]) -> VertexSet:
    if isinstance(lam, InducedSubgraph):
        return lam.vertices
    return pres.graph.check_subset(lam)


def canonicalize(conjugator: Element, lam: Iterable[str]) -> Parabolic:
    """
    Canonical pair for conjugator·G_Λ·conjugator⁻¹

    Tail syllables of the conjugator lying in Λ ∪ Λ⊥ normalize G_Λ, so they
    are stripped until none is left.
    """
    pres = conjugator.presentation
    vertices = _as_vertices(pres, lam)
    keep = closed_neighbourhood(pres.graph, vertices)
    g = conjugator
    while True:
        strippable = [i for i in _tail_positions(g) if g.word[i].vertex in keep]
        if not strippable:
            return Parabolic(g, vertices)
        g = _drop(g, strippable[0])


def standard(pres: Presentation, lam: Iterable[str]) -> Parabolic:
    return Parabolic(pres.identity(), _as_vertices(pres, lam))


def trivial(pres: Presentation) -> Parabolic:
    return Parabolic(pres.identity(), frozenset())


def conjugate_parabolic(p: Parabolic, by: Element) -> Parabolic:
    """by · p · by⁻¹"""
    return canonicalize(multiply(by, p.conjugator), p.type_vertices)


def member(p: Parabolic, x: Element) -> bool:
    """x ∈ gG_Λg⁻¹ exactly when g⁻¹xg has every syllable in Λ"""
    if x.presentation != p.presentation:
        raise PresentationMismatchError("Element and parabolic belong to different presentations")
    inner = multiply(multiply(invert(p.conjugator), x), p.conjugator)
    return support(inner) <= p.type_vertices


def _vertex_generators(p: Parabolic) -> List[Element]:
    pres = p.presentation
    gens = []
    for v in p.ordered_type():
        for letter in pres.label(v).generators():
            gens.append(pres.syllable(v, letter).conjugate(p.conjugator))
    return gens


def contains(p: Parabolic, q: Parabolic) -> bool:
    """q ⊆ p, tested on the conjugated vertex generators of q"""
    _check_same(p, q)
    return all(member(p, gen) for gen in _vertex_generators(q))


def intersect(p: Parabolic, q: Parabolic) -> Parabolic:
    """
    Intersection of two parabolic subgroups

    With p = aG_Aa⁻¹ and q = bG_Bb⁻¹, the problem reduces to gG_Ag⁻¹ ∩ G_B
    for g = b⁻¹a. Head syllables of g in G_B move into a conjugator h ∈ G_B
    and tail syllables in G_A are discarded, until g is a shortest
    representative of G_B g G_A. Then gG_Ag⁻¹ ∩ G_B = G_Υ where Υ consists
    of the vertices of A ∩ B joined to every vertex used by g.
    """
    _check_same(p, q)
    a_type, b_type = p.type_vertices, q.type_vertices
    g = multiply(invert(q.conjugator), p.conjugator)
    h_syllables: List[Syllable] = []
    while True:
        head_hits = [i for i in _head_positions(g) if g.word[i].vertex in b_type]
        if head_hits:
            i = head_hits[0]
            h_syllables.append(g.word[i])
            g = _drop(g, i)
            continue
        tail_hits = [i for i in _tail_positions(g) if g.word[i].vertex in a_type]
        if tail_hits:
            g = _drop(g, tail_hits[0])
            continue
        break
    graph = p.graph
    upsilon = a_type & b_type & orthogonal_vertices(graph, support(g))
    h = normalize(p.presentation, h_syllables)
    logger.debug("intersection reduced to %s with type %s", g, sorted(upsilon))
    return canonicalize(multiply(q.conjugator, h), upsilon)


def normalizer(p: Parabolic) -> Parabolic:
    """N(P) = P × P⊥, of type Λ∘Λ⊥ with the same conjugator"""
    return canonicalize(p.conjugator, closed_neighbourhood(p.graph, p.type_vertices))


def parabolic_support(x: Element) -> Parabolic:
    """
    Smallest parabolic subgroup containing x

    x is cyclically reduced: while some vertex carries both a head syllable
    and a distinct tail syllable, conjugate by that head syllable. What is
    left uses exactly the vertices of the support type.
    """
    pres = x.presentation
    y = x
    conj = pres.identity()
    while True:
        tails = _tail_positions(y)
        pair = None
        for i in _head_positions(y):
            vertex = y.word[i].vertex
            if any(j != i and y.word[j].vertex == vertex for j in tails):
                pair = i
                break
        if pair is None:
            break
        s = normalize(pres, [y.word[pair]])
        y = multiply(multiply(invert(s), y), s)
        conj = multiply(conj, s)
    return canonicalize(conj, support(y))


def retract_to(p: Parabolic, x: Element) -> Element:
    """
    Retraction G → P through the canonical conjugator

    Conjugates of vertex groups inside P are fixed, the others are killed.
    """
    pres = p.presentation
    inner = multiply(multiply(invert(p.conjugator), x), p.conjugator)
    kept = normalize(pres, [s for s in inner.word if s.vertex in p.type_vertices])
    return kept.conjugate(p.conjugator)


def member_of_product(x: Element, first: VertexSet, second: VertexSet) -> bool:
    """
    x ∈ G_first · G_second

    Head syllables in the first factor are stripped greedily; the shortest
    representative of G_first·x then lies in G_second exactly when x does
    lie in the product.
    """
    y = x
    while True:
        hits = [i for i in _head_positions(y) if y.word[i].vertex in first]
        if not hits:
            return support(y) <= second
        y = _drop(y, hits[0])


def vertex_splitting(pres: Presentation, v: str) -> Tuple[Parabolic, Parabolic, Parabolic]:
    """Amalgam data G = G_star(v) *_{G_lk(v)} G_{Γ∖{v}}"""
    graph = pres.graph
    graph.check_vertex(v)
    link = graph.neighbors(v)
    return (
        standard(pres, link | {v}),
        standard(pres, link),
        standard(pres, frozenset(graph.vertices) - {v}),
    )


# products and factors


@dataclass(frozen=True)
class MaximalProduct:
    parabolic: Parabolic
    isolated_clique: bool

    def to_dict(self) -> dict:
        data = self.parabolic.to_dict()
        data["isolated_clique"] = self.isolated_clique
        return data


def is_isolated_clique(graph: SimpleGraph, lam: VertexSet, within: Optional[VertexSet] = None) -> bool:
    """Λ is a connected component of the ambient subgraph and a clique"""
    return bool(lam) and lam in connected_components(graph, within) and is_clique(graph, lam)


def maximal_product_parabolics(pres: Presentation) -> List[MaximalProduct]:
    """Standard maximal product parabolic subgroups, flagged for isolated clique type"""
    graph = pres.graph
    return [
        MaximalProduct(standard(pres, lam), is_isolated_clique(graph, lam))
        for lam in maximal_join_subgraphs(graph)
    ]


def is_product(p: Parabolic) -> bool:
    return len(p.type_vertices) >= 2 and len(join_factors(p.graph, p.type_vertices)) >= 2


def clique_factor(p: Parabolic) -> Parabolic:
    if p.is_trivial:
        return p
    return canonicalize(p.conjugator, clique_factor_vertices(p.graph, p.type_vertices))


def _nonclique_factor_types(p: Parabolic) -> List[VertexSet]:
    if p.is_trivial:
        return []
    return [part for part in join_factors(p.graph, p.type_vertices) if len(part) >= 2]


def factors(p: Parabolic) -> List[Parabolic]:
    """The clique factor (when non-trivial) followed by the irreducible non-clique factors"""
    if p.is_trivial:
        return []
    result = []
    c0 = clique_factor_vertices(p.graph, p.type_vertices)
    if c0:
        result.append(canonicalize(p.conjugator, c0))
    result.extend(canonicalize(p.conjugator, part) for part in _nonclique_factor_types(p))
    return result


def clique_inclusive_cofactors(p: Parabolic) -> List[Parabolic]:
    """C0 × F1 × … × F̂j × … × Fk for every non-clique factor Fj"""
    if not is_product(p):
        return []
    parts = _nonclique_factor_types(p)
    return [canonicalize(p.conjugator, p.type_vertices - part) for part in parts]


def thick_free_factors(p: Parabolic) -> List[Parabolic]:
    """One parabolic per connected component of the type with at least two vertices"""
    if p.is_trivial:
        return []
    return [
        canonicalize(p.conjugator, part)
        for part in connected_components(p.graph, p.type_vertices)
        if len(part) >= 2
    ]


def subproduct_pieces(p: Parabolic) -> List[VertexSet]:
    """Fully split factors: single clique-factor vertices, then non-clique factors"""
    if p.is_trivial:
        return []
    c0 = clique_factor_vertices(p.graph, p.type_vertices)
    pieces = [frozenset({v}) for v in p.graph.ordered(c0)]
    return pieces + _nonclique_factor_types(p)


def subproducts(p: Parabolic) -> List[Parabolic]:
    """All products of sub-collections of the fully split factors, trivial one included"""
    pieces = subproduct_pieces(p)
    result = []
    for size in range(len(pieces) + 1):
        for combo in combinations(pieces, size):
            result.append(canonicalize(p.conjugator, frozenset().union(*combo)))
    return result


def is_special_subproduct(p: Parabolic, s: Parabolic) -> bool:
    """N(S) ⊄ N(P), read on types as S∘S⊥ ⊄ P∘P⊥"""
    graph = p.graph
    return not closed_neighbourhood(graph, s.type_vertices) <= closed_neighbourhood(graph, p.type_vertices)
