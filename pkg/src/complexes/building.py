# src/complexes/building.py

"""
Finite balls in the right-angled building: the cube complex whose vertices
are standard clique cosets gG_Υ, with a k-cube for every interval
gG_Λ ⊆ gG_Υ where |Υ∖Λ| = k.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx

from ..graphs import VertexSet, cliques
from ..groups.words import Element, Presentation, ball, multiply, normalize

logger = logging.getLogger(__name__)


def coset_representative(g: Element, clique: VertexSet) -> Element:
    """Shortest element of gG_Υ: strip tail syllables lying in Υ"""
    graph = g.presentation.graph
    rep = g
    while True:
        hits = [
            i for i, s in enumerate(rep.word)
            if s.vertex in clique
            and all(graph.adjacent(t.vertex, s.vertex) for t in rep.word[i + 1:])
        ]
        if not hits:
            return rep
        i = hits[0]
        rep = normalize(rep.presentation, rep.word[:i] + rep.word[i + 1:])


@dataclass(frozen=True)
class Coset:
    """Standard clique coset gG_Υ stored through its shortest representative"""

    representative: Element
    clique: VertexSet

    @classmethod
    def of(cls, g: Element, clique: VertexSet) -> "Coset":
        return cls(coset_representative(g, clique), frozenset(clique))

    @property
    def rank(self) -> int:
        return len(self.clique)

    def contains(self, other: "Coset") -> bool:
        """other ⊆ self as cosets"""
        return other.clique <= self.clique and coset_representative(
            other.representative, self.clique
        ) == self.representative

    def translate(self, g: Element) -> "Coset":
        return Coset.of(multiply(g, self.representative), self.clique)

    def ordered_clique(self) -> List[str]:
        return self.representative.presentation.graph.ordered(self.clique)

    def __str__(self) -> str:
        return f"{self.representative}·G_{{{','.join(self.ordered_clique())}}}"


def _coset_key(c: Coset) -> tuple:
    graph = c.representative.presentation.graph
    return (c.rank, [graph.index(v) for v in c.ordered_clique()]) + c.representative.sort_key()


@dataclass(frozen=True)
class BuildingBall:
    """
    Clique cosets with shortest representative of length ≤ radius

    Edges join cosets of consecutive rank ordered by inclusion; cubes are
    intervals [bottom, top] of dimension ≥ 2 all of whose vertices are
    present.
    """

    radius: int
    vertices: Tuple[Coset, ...]
    edges: Tuple[Tuple[int, int], ...]
    cubes: Tuple[Tuple[int, int, int], ...]

    def rank_counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(c.rank for c in self.vertices).items()))

    def cube_counts(self) -> Dict[int, int]:
        return dict(sorted(Counter(dim for _, _, dim in self.cubes).items()))

    @property
    def square_count(self) -> int:
        return sum(1 for _, _, dim in self.cubes if dim == 2)

    def fundamental_domain(self) -> List[Coset]:
        """Y_G: the cosets of the identity, one per clique of Γ"""
        return [c for c in self.vertices if c.representative.is_identity]

    def translates_cover(self) -> bool:
        """Every coset of the ball is a translate g·c of some c in Y_G"""
        domain = {c.clique: c for c in self.fundamental_domain()}
        return all(
            c.clique in domain and domain[c.clique].translate(c.representative) == c
            for c in self.vertices
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, c in enumerate(self.vertices):
            graph.add_node(i, rank=c.rank, type=",".join(c.ordered_clique()), coset=str(c))
        graph.add_edges_from(self.edges)
        return graph

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "vertices": [
                {"id": i, "coset": str(c), "rank": c.rank, "type": c.ordered_clique()}
                for i, c in enumerate(self.vertices)
            ],
            "edges": [list(edge) for edge in self.edges],
            "cubes": [{"bottom": b, "top": t, "dimension": d} for b, t, d in self.cubes],
        }


def building_ball(pres: Presentation, radius: int) -> BuildingBall:
    """
    Ball of the right-angled building

    Args:
        pres: Presentation with arithmetic labels
        radius: Bound on the word length of coset representatives

    Raises:
        EnumerationError: when the presentation cannot be enumerated
    """
    graph = pres.graph
    all_cliques = cliques(graph)
    elements = ball(pres, radius, allow_infinite=True)
    found: Dict[Coset, None] = {}
    for g in elements:
        for clique in all_cliques:
            found.setdefault(Coset.of(g, clique), None)
    vertices = tuple(sorted(found, key=_coset_key))
    index = {c: i for i, c in enumerate(vertices)}

    edges: List[Tuple[int, int]] = []
    cubes: List[Tuple[int, int, int]] = []
    for i, bottom in enumerate(vertices):
        rep = bottom.representative
        for clique in all_cliques:
            if not bottom.clique < clique:
                continue
            top = Coset.of(rep, clique)
            if top not in index:
                continue
            extra = graph.ordered(clique - bottom.clique)
            if len(extra) == 1:
                edges.append((i, index[top]))
                continue
            middle = (
                Coset.of(rep, bottom.clique | frozenset(subset))
                for size in range(1, len(extra))
                for subset in combinations(extra, size)
            )
            if all(c in index for c in middle):
                cubes.append((i, index[top], len(extra)))
    logger.debug(
        "building ball radius %d: %d vertices, %d edges, %d cubes",
        radius, len(vertices), len(edges), len(cubes),
    )
    return BuildingBall(radius, vertices, tuple(sorted(edges)), tuple(sorted(cubes)))
