# src/classification.py

"""
Classification verdicts for pairs of graph products

A verdict compares two presentations up to isomorphism, strong
commensurability or orbit equivalence. Under the rigidity hypotheses the
groups are related exactly when some graph isomorphism σ: Γ_G → Γ_H matches
every vertex group with a related vertex group, so the verdict reduces to a
label-respecting isomorphism search. Vertex-level judgments come from a
LabelRelation: built-in rules first overridden by user tables.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .exceptions import InputError, RelationError
from .graphs import (
    SimpleGraph,
    has_partial_conjugation,
    is_strongly_reduced,
    is_transvection_free,
    join_factors,
)
from .groups.labels import VertexLabel
from .groups.words import Presentation

logger = logging.getLogger(__name__)

ISO = "iso"
STRONG_COMMENSURABLE = "strong-commensurable"
ORBIT_EQUIVALENT = "orbit-equivalent"
RELATIONS = (ISO, STRONG_COMMENSURABLE, ORBIT_EQUIVALENT)

UNDETERMINED = "undetermined"

# relation -> (positive verdict, negative verdict)
VERDICT_NAMES: Dict[str, Tuple[str, str]] = {
    ISO: ("isomorphic", "not-isomorphic"),
    STRONG_COMMENSURABLE: ("strongly-commensurable", "not-commensurable"),
    ORBIT_EQUIVALENT: ("orbit-equivalent", "not-measure-equivalent"),
}


def check_relation_name(relation: str) -> str:
    if relation not in RELATIONS:
        raise InputError(f"Unknown relation {relation!r}; expected one of {RELATIONS}")
    return relation


# Higman groups


def higman_homomorphism_exists(k_src: int, k_dst: int) -> bool:
    """
    Whether a non-trivial homomorphism Hig_{k_src} → Hig_{k_dst} exists

    It does exactly when k_dst divides k_src.
    """
    for k in (k_src, k_dst):
        if k < 4:
            raise InputError(f"Higman parameter must be at least 4, got {k}")
    return k_src % k_dst == 0


# built-in vertex-level judgments


def _is_integers(label: VertexLabel) -> bool:
    return (label.kind == "cyclic" and label.order == 0) or (
        label.kind == "free" and label.rank == 1
    )


def _judge_iso(a: VertexLabel, b: VertexLabel) -> Optional[bool]:
    if _is_integers(a) and _is_integers(b):
        return True
    kinds = {a.kind, b.kind}
    if "opaque" in kinds:
        return None
    if kinds <= {"cyclic", "free"}:
        return False
    if kinds == {"higman"}:
        # Hig_k ≅ Hig_k' forces mutual divisibility
        return higman_homomorphism_exists(a.k, b.k) and higman_homomorphism_exists(b.k, a.k)
    return False


def _is_finite(label: VertexLabel) -> bool:
    return label.is_finite or (label.kind == "opaque" and not label.infinite)


def _judge_strong_commensurable(a: VertexLabel, b: VertexLabel) -> Optional[bool]:
    if _is_finite(a) != _is_finite(b):
        return False
    if _is_integers(a) and _is_integers(b):
        return True
    kinds = {a.kind, b.kind}
    if "opaque" in kinds:
        return None
    if a.is_finite:
        # same-index subgroups of finite groups only match for equal orders
        return a.order == b.order
    if kinds == {"higman"}:
        return a.k == b.k
    # ℤ vs Fr, Fr vs Fs, Higman vs free: same-index subgroups never match
    return False


def _judge_orbit_equivalent(a: VertexLabel, b: VertexLabel) -> Optional[bool]:
    if _is_finite(a) != _is_finite(b):
        return False
    if a.is_finite and b.is_finite:
        return a.order == b.order
    amenable = (a.is_amenable, b.is_amenable)
    if None not in amenable and amenable[0] != amenable[1]:
        return False
    if amenable == (True, True):
        return True
    kinds = {a.kind, b.kind}
    if kinds == {"free"}:
        # free groups of different ranks have different cost
        return a.rank == b.rank
    if kinds == {"higman"}:
        return a.k == b.k
    return None


BUILT_IN_JUDGES = {
    ISO: _judge_iso,
    STRONG_COMMENSURABLE: _judge_strong_commensurable,
    ORBIT_EQUIVALENT: _judge_orbit_equivalent,
}


def _pair(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class LabelRelation:
    """
    Vertex-level relation between labels

    Args:
        relation: One of "iso", "strong-commensurable", "orbit-equivalent"
        related: Pairs of label keys declared related
        unrelated: Pairs of label keys declared unrelated
        name: Name reported in verdicts; defaults to the relation
    """

    def __init__(self, relation: str, related: Iterable[Tuple[str, str]] = (),
                 unrelated: Iterable[Tuple[str, str]] = (), name: str = ""):
        self.relation = check_relation_name(relation)
        self.name = name or relation
        self.table: Dict[Tuple[str, str], bool] = {}
        for pairs, value in ((related, True), (unrelated, False)):
            for a, b in pairs:
                key = _pair(str(a), str(b))
                if self.table.get(key, value) != value:
                    raise RelationError(f"Pair {key} is declared both related and unrelated")
                self.table[key] = value

    @classmethod
    def built_in(cls, relation: str) -> "LabelRelation":
        return cls(relation)

    def judge(self, a: VertexLabel, b: VertexLabel) -> Optional[bool]:
        """True, False, or None when neither the table nor the built-in rules decide"""
        if a.key == b.key:
            return True
        key = _pair(a.key, b.key)
        if key in self.table:
            return self.table[key]
        return BUILT_IN_JUDGES[self.relation](a, b)

    def require(self, a: VertexLabel, b: VertexLabel) -> bool:
        verdict = self.judge(a, b)
        if verdict is None:
            raise RelationError(
                f"Relation {self.name!r} cannot decide {a.display_name} vs {b.display_name}; "
                f"add the pair to the relation table"
            )
        return verdict

    def to_dict(self) -> dict:
        related = [list(k) for k, v in sorted(self.table.items()) if v]
        unrelated = [list(k) for k, v in sorted(self.table.items()) if not v]
        return {"relation": self.relation, "name": self.name,
                "related": related, "unrelated": unrelated}


# hypotheses


def _is_vertex_or_edge(graph: SimpleGraph) -> bool:
    return len(graph) == 1 or (len(graph) == 2 and bool(graph.edges))


def _is_join_of_strongly_reduced(graph: SimpleGraph) -> bool:
    """Every irreducible join factor is strongly reduced and neither a vertex nor an edge"""
    factors = [graph.subgraph(part) for part in join_factors(graph)]
    return all(not _is_vertex_or_edge(f) and is_strongly_reduced(f) for f in factors)


def graph_hypotheses(pres: Presentation, relation: str) -> Dict[str, bool]:
    """Hypotheses of the classification theorem for one side of a comparison"""
    graph = pres.graph
    checks = {"not_one_vertex": len(graph) >= 2}
    if relation == ISO:
        checks["join_of_strongly_reduced"] = _is_join_of_strongly_reduced(graph)
        checks["transvection_free"] = is_transvection_free(graph)
    else:
        checks["transvection_free"] = is_transvection_free(graph)
        checks["no_partial_conjugation"] = not has_partial_conjugation(graph)
        checks["countably_infinite_labels"] = all(
            label.is_countably_infinite for label in pres.labels
        )
    return checks


def hypotheses_report(pres_a: Presentation, pres_b: Presentation, relation: str) -> dict:
    """
    Hypotheses on both inputs

    For isomorphism only Γ_G must be transvection-free, so the check is
    dropped from the H side.
    """
    side_a = graph_hypotheses(pres_a, relation)
    side_b = graph_hypotheses(pres_b, relation)
    if relation == ISO:
        side_b.pop("transvection_free")
    failed = [f"A.{name}" for name, ok in side_a.items() if not ok]
    failed += [f"B.{name}" for name, ok in side_b.items() if not ok]
    return {"A": side_a, "B": side_b, "holds": not failed, "failed": failed}


# searches


def _labelled_graph(graph: SimpleGraph, labels: Dict[str, VertexLabel]) -> nx.Graph:
    labelled = nx.Graph()
    labelled.add_nodes_from((v, {"label": labels[v]}) for v in graph.vertices)
    labelled.add_edges_from(tuple(e) for e in graph.edges)
    return labelled


def find_label_respecting_isomorphism(pres_a: Presentation, pres_b: Presentation,
                                      relation: LabelRelation) -> Optional[Dict[str, str]]:
    """
    First graph isomorphism σ with G_v related to H_σ(v) for every v

    Raises:
        RelationError: when a label pair met during the search is undecided
    """
    if len(pres_a.graph) != len(pres_b.graph) or len(pres_a.graph.edges) != len(pres_b.graph.edges):
        return None
    labels_a, labels_b = pres_a.label_map(), pres_b.label_map()

    def node_match(first: dict, second: dict) -> bool:
        return relation.require(first["label"], second["label"])

    matcher = GraphMatcher(
        _labelled_graph(pres_a.graph, labels_a), _labelled_graph(pres_b.graph, labels_b),
        node_match=node_match,
    )
    for mapping in matcher.isomorphisms_iter():
        logger.debug("label-respecting isomorphism found: %s", mapping)
        return {v: mapping[v] for v in pres_a.graph.vertices}
    return None


def label_homomorphism_exists(a: VertexLabel, b: VertexLabel) -> Optional[bool]:
    """Whether a non-trivial homomorphism G_a → G_b exists; None when unknown"""
    if a.key == b.key:
        return True
    if "opaque" in (a.kind, b.kind):
        return None
    if a.kind == "higman":
        # perfect with no proper finite-index subgroup
        return b.kind == "higman" and higman_homomorphism_exists(a.k, b.k)
    if a.is_finite:
        if b.kind == "cyclic" and b.order >= 2:
            n, m = a.order, b.order
            while m:
                n, m = m, n % m
            return n > 1
        return False
    # ℤ and free groups map onto every non-trivial cyclic subgroup
    return True


def find_label_respecting_homomorphism(pres_a: Presentation,
                                       pres_b: Presentation) -> Optional[Dict[str, str]]:
    """
    Backtracking search for a graph homomorphism Γ_G → Γ_H carrying every
    vertex group to one that receives a non-trivial homomorphism from it

    Unknown label pairs are treated as incompatible.
    """
    graph_a, graph_b = pres_a.graph, pres_b.graph
    labels_a, labels_b = pres_a.label_map(), pres_b.label_map()
    candidates = {
        v: [w for w in graph_b.vertices if label_homomorphism_exists(labels_a[v], labels_b[w])]
        for v in graph_a.vertices
    }
    order = sorted(graph_a.vertices, key=lambda v: (len(candidates[v]), -len(graph_a.neighbors(v))))
    assignment: Dict[str, str] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if all(graph_b.adjacent(w, assignment[u]) for u in graph_a.neighbors(v) if u in assignment):
                assignment[v] = w
                if extend(i + 1):
                    return True
                del assignment[v]
        return False

    if not extend(0):
        return None
    return {v: assignment[v] for v in graph_a.vertices}


@dataclass
class Verdict:
    """Outcome of a classification request"""

    relation: str
    label_relation: str
    witness: Optional[Dict[str, str]] = None
    label_judgments: List[dict] = field(default_factory=list)
    hypotheses_report: dict = field(default_factory=dict)
    homomorphism_witness: Optional[Dict[str, str]] = None

    @property
    def is_undetermined(self) -> bool:
        return self.relation == UNDETERMINED

    @property
    def is_positive(self) -> bool:
        return self.relation in {names[0] for names in VERDICT_NAMES.values()}

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "label_relation": self.label_relation,
            "witness": self.witness,
            "label_judgments": self.label_judgments,
            "hypotheses_report": self.hypotheses_report,
            "homomorphism_witness": self.homomorphism_witness,
        }


def classify(pres_a: Presentation, pres_b: Presentation,
             relation: Optional[LabelRelation] = None, kind: str = ORBIT_EQUIVALENT) -> Verdict:
    """
    Compare two graph products

    Args:
        pres_a: Presentation of G
        pres_b: Presentation of H
        relation: Vertex-level relation; the built-in one for `kind` if omitted
        kind: Relation used when no LabelRelation is given

    Returns:
        Verdict; positive only with a witness σ, negative only when the
        hypotheses hold on both inputs, otherwise undetermined

    Raises:
        RelationError: when the relation cannot decide a label pair met
            during the search
    """
    relation = relation or LabelRelation.built_in(check_relation_name(kind))
    positive, negative = VERDICT_NAMES[relation.relation]
    hypotheses = hypotheses_report(pres_a, pres_b, relation.relation)
    verdict = Verdict(UNDETERMINED, relation.name, hypotheses_report=hypotheses)
    verdict.homomorphism_witness = find_label_respecting_homomorphism(pres_a, pres_b)
    if not hypotheses["holds"]:
        logger.info("hypotheses failed: %s", ", ".join(hypotheses["failed"]))
        return verdict

    sigma = find_label_respecting_isomorphism(pres_a, pres_b, relation)
    if sigma is None:
        verdict.relation = negative
        return verdict
    verdict.relation = positive
    verdict.witness = sigma
    verdict.label_judgments = [
        {
            "vertex": v,
            "image": w,
            "source_label": pres_a.label(v).key,
            "target_label": pres_b.label(w).key,
            "related": relation.require(pres_a.label(v), pres_b.label(w)),
        }
        for v, w in sigma.items()
    ]
    return verdict
