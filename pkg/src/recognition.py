# src/recognition.py

"""
Recognition of untransvectable vertex groups through zoom-in chains

A zoom-in chain descends from G through maximal product parabolic
subgroups and their factors until it reaches a clique factor:

    G = F0 ⊇ P1 ⊇ F1 ⊇ ... ⊇ Pn ⊇ Fn

The thick variant inserts a thick free factor Lj of F(j-1) above each Pj
and replaces the last step by a normalizer condition on Fn. Both searches
run on standard parabolic subgroups, i.e. on induced subgraphs, since the
characterizations are invariant under conjugation.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, List, Optional, Set, Tuple

from .exceptions import InputError
from .graphs import (
    SimpleGraph,
    VertexSet,
    clique_factor_vertices,
    closed_neighbourhood,
    connected_components,
    is_clique,
    is_strongly_reduced,
    join_factors,
    maximal_join_subgraphs,
    untransvectable_vertices,
)
from .groups.parabolics import (
    Parabolic,
    canonicalize,
    clique_factor,
    clique_inclusive_cofactors,
    factors,
    is_isolated_clique,
    is_product,
    is_special_subproduct,
    standard,
    subproducts,
    thick_free_factors,
)
from .groups.words import Presentation

logger = logging.getLogger(__name__)

PLAIN = "plain"
THICK = "thick"
VARIANTS = (PLAIN, THICK)

Step = Tuple[str, VertexSet]


@dataclass(frozen=True)
class ZoomChain:
    """
    Alternating chain of parabolic subgroups

    Roles are "F" (F0, ..., Fn), "P" (maximal products) and, in the thick
    variant, "L" (thick free factors).
    """

    variant: str
    steps: Tuple[Tuple[str, Parabolic], ...]

    @property
    def length(self) -> int:
        return sum(1 for role, _ in self.steps if role == "P")

    @property
    def endpoint(self) -> Parabolic:
        return self.steps[-1][1]

    def types(self) -> List[List[str]]:
        return [p.ordered_type() for _, p in self.steps]

    def to_dict(self) -> dict:
        steps = []
        j = 0
        for role, p in self.steps:
            if role == "P":
                j += 1
            index = j + 1 if role == "L" else j
            steps.append({"role": f"{role}{index}", "type_vertices": p.ordered_type()})
        return {"variant": self.variant, "length": self.length, "steps": steps}


def normalizer_condition(graph: SimpleGraph, upsilon: VertexSet) -> bool:
    """
    Type-level form of N(W) ⊆ N(G_Υ) for every non-trivial W ⊆ G_Υ, Υ a clique

    Subgroups of G_Υ have standard supports G_W with W ⊆ Υ, so the condition
    reads W∘W⊥ ⊆ Υ∘Υ⊥ for every non-empty W ⊆ Υ. It holds exactly when Υ is
    collapsible.
    """
    target = closed_neighbourhood(graph, upsilon)
    members = graph.ordered(upsilon)
    return all(
        closed_neighbourhood(graph, frozenset(w)) <= target
        for size in range(1, len(members) + 1)
        for w in combinations(members, size)
    )


def _factor_containing(graph: SimpleGraph, lam: VertexSet, v: str) -> VertexSet:
    return next(part for part in join_factors(graph, lam) if v in part)


@lru_cache(maxsize=65536)
def _plain_suffix(graph: SimpleGraph, upsilon: VertexSet, v: str) -> Optional[Tuple[Step, ...]]:
    if upsilon == frozenset({v}):
        return ()
    for lam in maximal_join_subgraphs(graph, upsilon):
        if v not in lam or is_isolated_clique(graph, lam, upsilon):
            continue
        c0 = clique_factor_vertices(graph, lam)
        if c0 == frozenset({v}):
            return (("P", lam), ("F", c0))
        if c0:
            continue
        factor = _factor_containing(graph, lam, v)
        rest = _plain_suffix(graph, factor, v)
        if rest is not None:
            return (("P", lam), ("F", factor)) + rest
    return None


@lru_cache(maxsize=65536)
def _thick_suffix(graph: SimpleGraph, upsilon: VertexSet, v: str) -> Optional[Tuple[Step, ...]]:
    for component in connected_components(graph, upsilon):
        if v not in component or len(component) < 2 or is_clique(graph, component):
            continue
        for lam in maximal_join_subgraphs(graph, component):
            if v not in lam:
                continue
            c0 = clique_factor_vertices(graph, lam)
            if c0 == frozenset({v}) and normalizer_condition(graph, c0):
                return (("L", component), ("P", lam), ("F", c0))
            if c0:
                continue
            factor = _factor_containing(graph, lam, v)
            rest = _thick_suffix(graph, factor, v)
            if rest is not None:
                return (("L", component), ("P", lam), ("F", factor)) + rest
    return None


@lru_cache(maxsize=4096)
def _thick_endpoints(graph: SimpleGraph, upsilon: VertexSet) -> FrozenSet[VertexSet]:
    found: Set[VertexSet] = set()
    for component in connected_components(graph, upsilon):
        if len(component) < 2 or is_clique(graph, component):
            continue
        for lam in maximal_join_subgraphs(graph, component):
            c0 = clique_factor_vertices(graph, lam)
            if c0:
                if normalizer_condition(graph, c0):
                    found.add(c0)
                continue
            for part in join_factors(graph, lam):
                found |= _thick_endpoints(graph, part)
    return frozenset(found)


def _check_variant(pres: Presentation, variant: str) -> None:
    if variant not in VARIANTS:
        raise InputError(f"Unknown chain variant {variant!r}; expected one of {VARIANTS}")
    if variant == THICK:
        graph = pres.graph
        if len(graph) < 2:
            raise InputError("Thick zoom-in chains need a graph with at least two vertices")
        if not is_strongly_reduced(graph):
            raise InputError("Thick zoom-in chains need a strongly reduced graph")


def find_zoom_chain(pres: Presentation, v: str, variant: str = PLAIN) -> Optional[ZoomChain]:
    """
    Search a zoom-in chain ending at G_v

    Args:
        pres: Presentation whose graph is searched
        v: Target vertex
        variant: "plain" or "thick" (the latter needs a strongly reduced
            graph on at least two vertices)

    Returns:
        The first chain found in declaration order, or None
    """
    _check_variant(pres, variant)
    graph = pres.graph
    graph.check_vertex(v)
    everything = frozenset(graph.vertices)
    suffix = _plain_suffix(graph, everything, v) if variant == PLAIN else _thick_suffix(graph, everything, v)
    if suffix is None:
        logger.debug("no %s chain for vertex %s", variant, v)
        return None
    steps = [("F", standard(pres, everything))]
    steps.extend((role, standard(pres, lam)) for role, lam in suffix)
    return ZoomChain(variant, tuple(steps))


def untransvectable_via_chains(pres: Presentation, variant: str = PLAIN) -> VertexSet:
    _check_variant(pres, variant)
    return frozenset(v for v in pres.graph.vertices if find_zoom_chain(pres, v, variant) is not None)


def thick_chain_endpoints(pres: Presentation) -> List[Parabolic]:
    """
    Standard endpoints Fn of all thick chains, whatever vertex they end at

    On a strongly reduced graph these are exactly the untransvectable vertex
    groups.
    """
    _check_variant(pres, THICK)
    graph = pres.graph
    endpoints = _thick_endpoints(graph, frozenset(graph.vertices))
    ordered = sorted(endpoints, key=lambda t: [graph.index(v) for v in graph.ordered(t)])
    return [standard(pres, t) for t in ordered]


def recognized_vertex_types(pres: Presentation, variant: str = PLAIN) -> List[Parabolic]:
    """Standard vertex groups reached by some chain of the variant"""
    if variant == THICK:
        return thick_chain_endpoints(pres)
    graph = pres.graph
    return [standard(pres, {v}) for v in graph.ordered(untransvectable_via_chains(pres, variant))]


# Q-property report


@dataclass
class QPropertyReport:
    """Type-level evaluation of the recognition properties for one parabolic subgroup"""

    parabolic: Parabolic
    is_product: bool = False
    is_maximal_product: bool = False
    isolated_clique: bool = False
    clique_factor: Optional[Parabolic] = None
    clique_factor_trivial: bool = True
    factors: List[Parabolic] = field(default_factory=list)
    clique_inclusive_cofactors: List[Parabolic] = field(default_factory=list)
    cofactor_intersection: Optional[Parabolic] = None
    special_subproducts: List[Parabolic] = field(default_factory=list)
    thick_free_factors: List[Parabolic] = field(default_factory=list)
    is_thick_free_factor: bool = False
    is_untransvectable_vertex_group: bool = False

    def to_dict(self) -> dict:
        def dump(items):
            return [p.to_dict() for p in items]

        return {
            "parabolic": self.parabolic.to_dict(),
            "is_product": self.is_product,
            "is_maximal_product": self.is_maximal_product,
            "isolated_clique": self.isolated_clique,
            "clique_factor": self.clique_factor.to_dict() if self.clique_factor else None,
            "clique_factor_trivial": self.clique_factor_trivial,
            "factors": dump(self.factors),
            "clique_inclusive_cofactors": dump(self.clique_inclusive_cofactors),
            "cofactor_intersection": (
                self.cofactor_intersection.to_dict() if self.cofactor_intersection else None
            ),
            "special_subproducts": dump(self.special_subproducts),
            "thick_free_factors": dump(self.thick_free_factors),
            "is_thick_free_factor": self.is_thick_free_factor,
            "is_untransvectable_vertex_group": self.is_untransvectable_vertex_group,
        }


def q_property_report(pres: Presentation, p: Parabolic) -> QPropertyReport:
    """
    Evaluate the recognition properties of p through their type-level forms

    Returns:
        A report; the trivial subgroup yields an all-empty report
    """
    report = QPropertyReport(parabolic=p)
    if p.is_trivial:
        return report
    graph = pres.graph
    lam = p.type_vertices
    report.is_product = is_product(p)
    report.is_maximal_product = lam in maximal_join_subgraphs(graph)
    report.isolated_clique = is_isolated_clique(graph, lam)
    report.clique_factor = clique_factor(p)
    report.clique_factor_trivial = report.clique_factor.is_trivial
    report.factors = factors(p)
    report.clique_inclusive_cofactors = clique_inclusive_cofactors(p)
    if report.clique_inclusive_cofactors:
        common = frozenset(lam)
        for q in report.clique_inclusive_cofactors:
            common &= q.type_vertices
        report.cofactor_intersection = canonicalize(p.conjugator, common)
    if report.is_product:
        report.special_subproducts = [s for s in subproducts(p) if is_special_subproduct(p, s)]
    report.thick_free_factors = thick_free_factors(p)
    report.is_thick_free_factor = len(lam) >= 2 and lam in connected_components(graph)
    report.is_untransvectable_vertex_group = (
        len(lam) == 1 and lam <= untransvectable_vertices(graph)
    )
    return report
