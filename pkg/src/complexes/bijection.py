# src/complexes/bijection.py

"""
Bijections G → H combined from per-vertex bijections θ_v: G_v → H_v that
fix the identity, applied letter by letter to canonical words.
"""

import logging
from itertools import combinations
from typing import Dict, Mapping, Optional

import numpy as np

from ..exceptions import BijectionError
from ..groups.labels import Letter
from ..groups.parabolics import Parabolic, canonicalize
from ..groups.words import Element, Presentation, Syllable
from .building import BuildingBall, Coset
from .extension import ExtensionBall, vertex_conjugates_commute

logger = logging.getLogger(__name__)

LetterMap = Dict[Letter, Letter]


class CombinedBijection:
    """
    The bijection combined from letter bijections (θ_v)

    Conjugates of vertex groups and clique cosets are carried along:
    θ(gG_vg⁻¹) = θ(g)H_vθ(g)⁻¹ and θ(gG_Υ) = θ(g)H_Υ.
    """

    def __init__(self, source: Presentation, target: Presentation,
                 letter_maps: Mapping[str, Mapping[Letter, Letter]]):
        if source.graph != target.graph:
            raise BijectionError("Combined bijections need the same defining graph")
        self.source = source
        self.target = target
        self.letter_maps: Dict[str, LetterMap] = {}
        for v in source.graph.vertices:
            self.letter_maps[v] = self._validated(v, letter_maps.get(v, {}))

    def _validated(self, v: str, raw: Mapping[Letter, Letter]) -> LetterMap:
        src_label, dst_label = self.source.label(v), self.target.label(v)
        mapping: LetterMap = {}
        for key, value in raw.items():
            a = src_label.normalize_letter(key)
            b = dst_label.normalize_letter(value)
            if (a is None) != (b is None):
                raise BijectionError(f"θ_{v} must send the identity to the identity")
            if a is None:
                continue
            if a in mapping and mapping[a] != b:
                raise BijectionError(f"θ_{v} assigns two images to {a!r}")
            mapping[a] = b
        if len(set(mapping.values())) != len(mapping):
            raise BijectionError(f"θ_{v} is not injective")
        if src_label.is_finite or dst_label.is_finite:
            if not (src_label.is_finite and dst_label.is_finite):
                raise BijectionError(f"θ_{v} cannot match a finite and an infinite vertex group")
            if set(mapping) != set(src_label.nontrivial_elements()) or set(
                mapping.values()
            ) != set(dst_label.nontrivial_elements()):
                raise BijectionError(f"θ_{v} is not a bijection between the vertex groups")
        return mapping

    @classmethod
    def identity(cls, pres: Presentation) -> "CombinedBijection":
        maps = {}
        for v, label in pres.label_map().items():
            maps[v] = {a: a for a in label.nontrivial_elements()} if label.is_finite else {}
        return cls(pres, pres, maps)

    @classmethod
    def random(cls, source: Presentation, target: Presentation,
               rng: Optional[np.random.Generator] = None) -> "CombinedBijection":
        """Uniformly random letter bijections between equinumerous finite labels"""
        rng = rng if rng is not None else np.random.default_rng()
        maps = {}
        for v in source.graph.vertices:
            domain = source.label(v).nontrivial_elements()
            codomain = target.label(v).nontrivial_elements()
            if len(domain) != len(codomain):
                raise BijectionError(f"Vertex groups at {v} have different orders")
            shuffled = [codomain[i] for i in rng.permutation(len(codomain))]
            maps[v] = dict(zip(domain, shuffled))
        return cls(source, target, maps)

    def inverse(self) -> "CombinedBijection":
        maps = {v: {b: a for a, b in m.items()} for v, m in self.letter_maps.items()}
        return CombinedBijection(self.target, self.source, maps)

    def map_element(self, x: Element) -> Element:
        """Substitute letters in the canonical word; the vertex pattern is unchanged"""
        if x.presentation != self.source:
            raise BijectionError("Element does not belong to the source presentation")
        word = []
        for s in x.word:
            try:
                word.append(Syllable(s.vertex, self.letter_maps[s.vertex][s.letter]))
            except KeyError:
                raise BijectionError(f"θ_{s.vertex} is undefined on {s.letter!r}")
        return Element(self.target, tuple(word))

    def map_parabolic(self, p: Parabolic) -> Parabolic:
        return canonicalize(self.map_element(p.conjugator), p.type_vertices)

    def map_coset(self, c: Coset) -> Coset:
        return Coset.of(self.map_element(c.representative), c.clique)


def verify_extension_isomorphism(bijection: CombinedBijection, ball: ExtensionBall) -> dict:
    """
    Check that θ is injective, type preserving and adjacency preserving on a ball

    Adjacency of images is decided in the target presentation itself.
    """
    images = [bijection.map_parabolic(p) for p in ball.nodes]
    edges = set(ball.edges)
    mismatches = 0
    for i, j in combinations(range(len(images)), 2):
        if ((i, j) in edges) != vertex_conjugates_commute(images[i], images[j]):
            mismatches += 1
    report = {
        "nodes": len(images),
        "injective": len(set(images)) == len(images),
        "type_preserving": all(a.type_vertices == b.type_vertices for a, b in zip(ball.nodes, images)),
        "adjacency_mismatches": mismatches,
    }
    report["isomorphism"] = report["injective"] and report["type_preserving"] and mismatches == 0
    logger.debug("extension check: %s", report)
    return report


def verify_building_isomorphism(bijection: CombinedBijection, ball: BuildingBall) -> dict:
    """Check that θ preserves ranks, types and the inclusion poset of cosets on a ball"""
    images = [bijection.map_coset(c) for c in ball.vertices]
    mismatches = 0
    for i, j in combinations(range(len(images)), 2):
        a, b = ball.vertices[i], ball.vertices[j]
        if a.contains(b) != images[i].contains(images[j]) or b.contains(a) != images[j].contains(images[i]):
            mismatches += 1
    report = {
        "vertices": len(images),
        "injective": len(set(images)) == len(images),
        "rank_preserving": all(a.rank == b.rank for a, b in zip(ball.vertices, images)),
        "type_preserving": all(a.clique == b.clique for a, b in zip(ball.vertices, images)),
        "inclusion_mismatches": mismatches,
    }
    report["isomorphism"] = (
        report["injective"] and report["rank_preserving"]
        and report["type_preserving"] and mismatches == 0
    )
    logger.debug("building check: %s", report)
    return report


def combined_bijection(source: Presentation, target: Presentation,
                       letter_maps: Mapping[str, Mapping[Letter, Letter]]) -> CombinedBijection:
    return CombinedBijection(source, target, letter_maps)
