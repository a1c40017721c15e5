# src/complexes/extension.py

"""
Finite balls in the extension graph: vertices are conjugates of vertex
groups, edges join the ones that commute.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

import networkx as nx

from ..graphs import star, untransvectable_vertices
from ..groups.parabolics import Parabolic, canonicalize, member_of_product
from ..groups.words import Presentation, ball, invert, multiply

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtensionBall:
    """Conjugates of vertex groups with canonical conjugator length ≤ radius"""

    radius: int
    nodes: Tuple[Parabolic, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def node_vertex(self, i: int) -> str:
        (v,) = self.nodes[i].type_vertices
        return v

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, vertex=self.node_vertex(i), conjugator=str(node.conjugator))
        graph.add_edges_from(self.edges)
        return graph

    def induced(self, keep: Callable[[Parabolic], bool]) -> "ExtensionBall":
        kept = [i for i, node in enumerate(self.nodes) if keep(node)]
        position = {old: new for new, old in enumerate(kept)}
        edges = tuple(
            (position[i], position[j]) for i, j in self.edges if i in position and j in position
        )
        return ExtensionBall(self.radius, tuple(self.nodes[i] for i in kept), edges)

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "nodes": [
                {"id": i, "vertex": self.node_vertex(i), "conjugator": str(node.conjugator)}
                for i, node in enumerate(self.nodes)
            ],
            "edges": [list(edge) for edge in self.edges],
        }


def vertex_conjugates_commute(p: Parabolic, q: Parabolic) -> bool:
    """
    Whether two distinct conjugates of vertex groups commute

    gG_vg⁻¹ and hG_wh⁻¹ commute exactly when v, w are adjacent and
    g⁻¹h ∈ G_star(v) · G_star(w).
    """
    if p == q:
        return False
    graph = p.graph
    (v,) = p.type_vertices
    (w,) = q.type_vertices
    if not graph.adjacent(v, w):
        return False
    x = multiply(invert(p.conjugator), q.conjugator)
    return member_of_product(x, star(graph, v), star(graph, w))


def _node_key(p: Parabolic) -> tuple:
    (v,) = p.type_vertices
    return (p.graph.index(v),) + p.conjugator.sort_key()


def extension_ball(pres: Presentation, radius: int) -> ExtensionBall:
    """
    Ball of the extension graph around the base copy of Γ

    Args:
        pres: Presentation with arithmetic labels
        radius: Bound on the word length of canonical conjugators

    Raises:
        EnumerationError: when the presentation cannot be enumerated
    """
    elements = ball(pres, radius, allow_infinite=True)
    found: Dict[Parabolic, None] = {}
    for g in elements:
        for v in pres.graph.vertices:
            found.setdefault(canonicalize(g, {v}), None)
    nodes = tuple(sorted(found, key=_node_key))
    edges: List[Tuple[int, int]] = []
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if vertex_conjugates_commute(nodes[i], nodes[j]):
                edges.append((i, j))
    logger.debug("extension ball radius %d: %d nodes, %d edges", radius, len(nodes), len(edges))
    return ExtensionBall(radius, nodes, tuple(edges))


def untransvectable_extension_ball(pres: Presentation, radius: int) -> ExtensionBall:
    """Sub-ball spanned by conjugates of untransvectable vertex groups"""
    keep = untransvectable_vertices(pres.graph)
    return extension_ball(pres, radius).induced(lambda p: p.type_vertices <= keep)
