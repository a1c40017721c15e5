# src/graphs.py

"""
Finite simple graphs and the graph-theoretic predicates used to study
graph products: links, stars, orthogonals, joins, collapsible subgraphs,
transvections and partial conjugations.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Sized, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .config import get_config
from .exceptions import InputError

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[str]


class SimpleGraph:
    """
    Finite simple graph with named vertices and a fixed declaration order

    The declaration order is used for every deterministic tie-break in the
    toolkit (canonical words, sorted outputs, search order).
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_index", "_nx", "_hash")

    def __init__(self, vertices: Sequence[str], edges: Iterable[Tuple[str, str]] = ()):
        names = [str(v) for v in vertices]
        if len(set(names)) != len(names):
            raise InputError(f"Duplicate vertex names in {names}")
        index = {v: i for i, v in enumerate(names)}
        adj: Dict[str, set] = {v: set() for v in names}
        edge_set = set()
        for edge in edges:
            u, w = (str(x) for x in edge)
            if u not in index or w not in index:
                raise InputError(f"Edge {u}-{w} uses an undeclared vertex")
            if u == w:
                raise InputError(f"Loop at vertex {u} is not allowed")
            adj[u].add(w)
            adj[w].add(u)
            edge_set.add(frozenset((u, w)))

        self._vertices: Tuple[str, ...] = tuple(names)
        self._edges: FrozenSet[FrozenSet[str]] = frozenset(edge_set)
        self._adj: Dict[str, VertexSet] = {v: frozenset(n) for v, n in adj.items()}
        self._index = index
        graph = nx.Graph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(tuple(e) for e in self._edges)
        self._nx = graph
        self._hash = hash((self._vertices, self._edges))

    # construction helpers

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        return cls([str(v) for v in graph.nodes()], [(str(u), str(w)) for u, w in graph.edges()])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        names = [str(i) for i in range(n)]
        return cls(names, [(names[i], names[(i + 1) % n]) for i in range(n)])

    @classmethod
    def path(cls, names: Sequence[str]) -> "SimpleGraph":
        return cls(names, list(zip(names, names[1:])))

    @classmethod
    def complete(cls, names: Sequence[str]) -> "SimpleGraph":
        return cls(names, list(combinations(names, 2)))

    @classmethod
    def discrete(cls, names: Sequence[str]) -> "SimpleGraph":
        return cls(names, [])

    # accessors

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> FrozenSet[FrozenSet[str]]:
        return self._edges

    @property
    def nx_graph(self) -> nx.Graph:
        """Read-only networkx view of the graph"""
        return nx.freeze(self._nx.copy())

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        edges = sorted(tuple(self.ordered(e)) for e in self._edges)
        return f"SimpleGraph(vertices={list(self._vertices)}, edges={edges})"

    def index(self, v: str) -> int:
        self.check_vertex(v)
        return self._index[v]

    def check_vertex(self, v: str) -> None:
        if v not in self._index:
            raise InputError(f"Unknown vertex {v!r}")

    def check_subset(self, vertices: Iterable[str]) -> VertexSet:
        subset = frozenset(vertices)
        unknown = subset.difference(self._index)
        if unknown:
            raise InputError(f"Unknown vertices {sorted(unknown)}")
        return subset

    def adjacent(self, u: str, w: str) -> bool:
        return w in self._adj[u]

    def neighbors(self, v: str) -> VertexSet:
        return self._adj[v]

    def ordered(self, vertices: Iterable[str]) -> List[str]:
        """Sort vertices by declaration order"""
        return sorted(vertices, key=self._index.__getitem__)

    def induced(self, vertices: Iterable[str]) -> "InducedSubgraph":
        return InducedSubgraph(self, self.check_subset(vertices))

    def subgraph(self, vertices: Iterable[str]) -> "SimpleGraph":
        """The induced subgraph as a standalone graph, declaration order kept"""
        subset = self.check_subset(vertices)
        names = [v for v in self._vertices if v in subset]
        return SimpleGraph(names, [tuple(e) for e in self._edges if e <= subset])


@dataclass(frozen=True)
class InducedSubgraph:
    """Vertex subset of a parent graph; edges are the parent edges inside it"""

    parent: SimpleGraph
    vertices: VertexSet

    def __iter__(self) -> Iterator[str]:
        return iter(self.parent.ordered(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def as_graph(self) -> SimpleGraph:
        return self.parent.subgraph(self.vertices)

    def to_list(self) -> List[str]:
        return self.parent.ordered(self.vertices)


def within_exhaustive_limit(vertices: Sized) -> bool:
    return len(vertices) <= get_config().max_exhaustive_vertices


def check_exhaustive_size(g: SimpleGraph, vertices: Sized, what: str) -> None:
    """
    Refuse subset scans over more vertices than the configured limit

    Raises:
        InputError: above GRAPHPROD_MAX_EXHAUSTIVE_VERTICES
    """
    if not within_exhaustive_limit(vertices):
        raise InputError(
            f"{what} scans every vertex subset; {len(vertices)} vertices exceed the limit of "
            f"{get_config().max_exhaustive_vertices} (GRAPHPROD_MAX_EXHAUSTIVE_VERTICES)"
        )


def _subset(g: SimpleGraph, vertices: Optional[Iterable[str]]) -> VertexSet:
    if vertices is None:
        return frozenset(g.vertices)
    if isinstance(vertices, InducedSubgraph):
        return vertices.vertices
    return g.check_subset(vertices)


# links, stars, orthogonals


def link(g: SimpleGraph, v: str) -> VertexSet:
    """All neighbours of v"""
    g.check_vertex(v)
    return g.neighbors(v)


def star(g: SimpleGraph, v: str) -> VertexSet:
    g.check_vertex(v)
    return g.neighbors(v) | {v}


def orthogonal(g: SimpleGraph, lam: Iterable[str], within: Optional[Iterable[str]] = None) -> InducedSubgraph:
    """
    Vertices outside lam joined to every vertex of lam

    Args:
        g: Ambient graph
        lam: Vertex set (possibly empty; the orthogonal of ∅ is everything)
        within: Optional vertex set restricting the ambient graph

    Returns:
        The orthogonal as an induced subgraph of g
    """
    return InducedSubgraph(g, orthogonal_vertices(g, _subset(g, lam), _subset(g, within)))


@lru_cache(maxsize=65536)
def orthogonal_vertices(g: SimpleGraph, lam: VertexSet, within: Optional[VertexSet] = None) -> VertexSet:
    ambient = frozenset(g.vertices) if within is None else within
    return frozenset(w for w in ambient - lam if all(g.adjacent(w, u) for u in lam))


def complement(g: SimpleGraph) -> SimpleGraph:
    """Same vertices, edges exactly between non-adjacent pairs"""
    return SimpleGraph(g.vertices, [(u, w) for u, w in combinations(g.vertices, 2) if not g.adjacent(u, w)])


def closed_neighbourhood(g: SimpleGraph, lam: VertexSet) -> VertexSet:
    """Vertex set of Λ∘Λ⊥, the type of the normalizer of G_Λ"""
    return lam | orthogonal_vertices(g, lam)


# connectivity and joins


@lru_cache(maxsize=65536)
def connected_components(g: SimpleGraph, within: Optional[VertexSet] = None) -> Tuple[VertexSet, ...]:
    """Connected components of the induced subgraph, sorted by smallest vertex"""
    sub = g._nx.subgraph(g.vertices if within is None else within)
    parts = [frozenset(c) for c in nx.connected_components(sub)]
    return tuple(sorted(parts, key=lambda c: min(g.index(v) for v in c)))


def is_connected(g: SimpleGraph, within: Optional[VertexSet] = None) -> bool:
    """Connectivity of the induced subgraph; the empty graph counts as connected"""
    return len(connected_components(g, within)) <= 1


@lru_cache(maxsize=65536)
def join_factors(g: SimpleGraph, within: Optional[VertexSet] = None) -> Tuple[VertexSet, ...]:
    """Irreducible join factors: connected components of the complement"""
    vertices = frozenset(g.vertices) if within is None else within
    complement = nx.complement(g._nx.subgraph(vertices))
    parts = [frozenset(c) for c in nx.connected_components(complement)]
    return tuple(sorted(parts, key=lambda c: min(g.index(v) for v in c)))


def join_decompose(g: SimpleGraph, within: Optional[Iterable[str]] = None) -> List[InducedSubgraph]:
    """
    Maximal join decomposition into irreducible factors

    Raises:
        InputError: if the graph (or the restricting subset) is empty
    """
    subset = _subset(g, within)
    if not subset:
        raise InputError("Join decomposition of the empty graph is undefined")
    return [InducedSubgraph(g, part) for part in join_factors(g, subset)]


def is_join(g: SimpleGraph, within: Optional[VertexSet] = None) -> bool:
    """True when the induced subgraph splits as a join of two non-empty parts"""
    vertices = frozenset(g.vertices) if within is None else within
    return len(vertices) >= 2 and len(join_factors(g, vertices)) >= 2


def is_clique(g: SimpleGraph, within: Optional[VertexSet] = None) -> bool:
    vertices = frozenset(g.vertices) if within is None else within
    return all(g.adjacent(u, w) for u, w in combinations(vertices, 2))


def clique_factor_vertices(g: SimpleGraph, within: Optional[VertexSet] = None) -> VertexSet:
    """Vertices of the subset joined to every other vertex of the subset"""
    vertices = frozenset(g.vertices) if within is None else within
    return frozenset(v for v in vertices if vertices - {v} <= g.neighbors(v))


@lru_cache(maxsize=4096)
def cliques(g: SimpleGraph) -> Tuple[VertexSet, ...]:
    """All cliques of g including the empty one, ordered by size then position"""
    found: List[VertexSet] = [frozenset()]
    for clique in nx.enumerate_all_cliques(g._nx):
        found.append(frozenset(clique))
    return tuple(sorted(found, key=lambda c: (len(c), [g.index(v) for v in g.ordered(c)])))


@lru_cache(maxsize=65536)
def maximal_join_subgraphs(g: SimpleGraph, within: Optional[VertexSet] = None) -> Tuple[VertexSet, ...]:
    """
    Inclusion-maximal induced subgraphs of the subset that split as joins

    Every subset is scanned, largest first, so the cost is exponential in
    the size of the subset.
    """
    vertices = g.ordered(frozenset(g.vertices) if within is None else within)
    check_exhaustive_size(g, vertices, "maximal join search")
    maximal: List[VertexSet] = []
    for size in range(len(vertices), 1, -1):
        for combo in combinations(vertices, size):
            candidate = frozenset(combo)
            if any(candidate <= m for m in maximal):
                continue
            if is_join(g, candidate):
                maximal.append(candidate)
    return tuple(sorted(maximal, key=lambda c: [g.index(v) for v in g.ordered(c)]))


# transvections, partial conjugations, collapsibility


def is_transvection_free(g: SimpleGraph) -> bool:
    """No distinct v, w with lk(v) ⊆ star(w)"""
    for v in g.vertices:
        for w in g.vertices:
            if v != w and g.neighbors(v) <= star(g, w):
                return False
    return True


def untransvectable_vertices(g: SimpleGraph) -> VertexSet:
    return frozenset(
        v
        for v in g.vertices
        if not any(w != v and g.neighbors(v) <= star(g, w) for w in g.vertices)
    )


def has_partial_conjugation(g: SimpleGraph) -> bool:
    """Some vertex whose star disconnects the graph"""
    everything = frozenset(g.vertices)
    return any(not is_connected(g, everything - star(g, v)) for v in g.vertices)


def is_collapsible(g: SimpleGraph, lam: Iterable[str]) -> bool:
    """All vertices of lam share the same link outside lam"""
    subset = _subset(g, lam)
    outer_links = {g.neighbors(x) - subset for x in subset}
    return len(outer_links) <= 1


@lru_cache(maxsize=8192)
def is_strongly_reduced(g: SimpleGraph) -> bool:
    """No proper collapsible subset on at least two vertices"""
    check_exhaustive_size(g, g.vertices, "strong reduction")
    return not any(
        is_collapsible(g, combo)
        for size in range(2, len(g))
        for combo in combinations(g.vertices, size)
    )


def is_clique_reduced(g: SimpleGraph) -> bool:
    stars = [star(g, v) for v in g.vertices]
    return len(set(stars)) == len(stars)


def clique_reduction(g: SimpleGraph) -> Tuple[SimpleGraph, Dict[str, Tuple[str, ...]]]:
    """
    Collapse classes of vertices with equal stars

    Each class is a clique; the quotient is clique-reduced and carries the
    same graph product once every class is replaced by the direct product
    of its vertex groups.

    Returns:
        The quotient graph (named after the first vertex of each class) and
        a map from quotient vertex to its class
    """
    classes: Dict[VertexSet, List[str]] = {}
    for v in g.vertices:
        classes.setdefault(star(g, v), []).append(v)
    representative = {}
    members: Dict[str, Tuple[str, ...]] = {}
    for group in classes.values():
        members[group[0]] = tuple(group)
        for v in group:
            representative[v] = group[0]
    names = [v for v in g.vertices if v in members]
    edges = {
        frozenset((representative[u], representative[w]))
        for u, w in (tuple(e) for e in g.edges)
        if representative[u] != representative[w]
    }
    return SimpleGraph(names, [tuple(e) for e in edges]), members


def automorphisms(g: SimpleGraph) -> List[Dict[str, str]]:
    """Brute-force automorphism group as a list of vertex maps"""
    matcher = GraphMatcher(g._nx, g._nx)
    return [dict(m) for m in matcher.isomorphisms_iter()]


# exhaustive enumeration


def _relabelled(graph: nx.Graph) -> SimpleGraph:
    mapping = {node: str(i) for i, node in enumerate(sorted(graph.nodes()))}
    return SimpleGraph.from_networkx(nx.relabel_nodes(graph, mapping))


def _one_vertex_extensions(graphs: List[nx.Graph]) -> Iterator[nx.Graph]:
    """Isomorphism classes on n+1 vertices from all classes on n vertices"""
    buckets: Dict[str, List[nx.Graph]] = {}
    for base in graphs:
        n = base.number_of_nodes()
        for size in range(n + 1):
            for neighbours in combinations(range(n), size):
                candidate = base.copy()
                candidate.add_node(n)
                candidate.add_edges_from((n, u) for u in neighbours)
                key = nx.weisfeiler_lehman_graph_hash(candidate, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(candidate, seen) for seen in bucket):
                    continue
                bucket.append(candidate)
                yield candidate


def iter_graphs(min_vertices: int, max_vertices: int) -> Iterator[SimpleGraph]:
    """
    All simple graphs up to isomorphism with vertex count in the range

    Up to seven vertices the networkx graph atlas is used; eight-vertex
    graphs are generated as one-vertex extensions of the seven-vertex atlas.
    """
    if min_vertices < 0 or max_vertices > 8:
        raise InputError("Exhaustive enumeration supports 0 to 8 vertices")
    atlas = nx.graph_atlas_g()
    for graph in atlas:
        if min_vertices <= graph.number_of_nodes() <= max_vertices:
            yield _relabelled(graph)
    if max_vertices >= 8:
        sevens = [graph for graph in atlas if graph.number_of_nodes() == 7]
        logger.debug("extending %d seven-vertex graphs", len(sevens))
        for graph in _one_vertex_extensions(sevens):
            yield _relabelled(graph)
