# src/evaluation/oracles.py

"""
Reference computations that do not go through the normal-form machinery

- Green closure: explore every word reachable by merging neighbouring
  letters at the same vertex and swapping neighbouring letters at adjacent
  vertices; the shortest words form the reduced class and the canonical
  word is the least one in declaration order.
- Tits representation: graph products of ℤ/2 are right-angled Coxeter
  groups, which act faithfully on ℝ^V through integer matrices.
- Parabolic ball oracle: membership in a parabolic subgroup read off the
  raw conjugated word, with element sets cut down to a finite ball.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

import numpy as np

from ..exceptions import InputError
from ..groups.labels import Letter
from ..groups.parabolics import Parabolic
from ..groups.words import Element, Presentation, Syllable, ball, normalize

RawWord = Tuple[Tuple[str, Letter], ...]


def green_closure(pres: Presentation, raw: Iterable[Tuple[str, Letter]], max_states: int = 200000) -> Set[RawWord]:
    """All words reachable from raw through merges and commuting swaps"""
    graph = pres.graph
    start = []
    for v, letter in raw:
        normal = pres.label(v).normalize_letter(letter)
        if normal is not None:
            start.append((v, normal))
    seen = {tuple(start)}
    queue = deque(seen)
    while queue:
        word = queue.popleft()
        for i in range(len(word) - 1):
            (u, a), (w, b) = word[i], word[i + 1]
            moves = []
            if u == w:
                merged = pres.label(u).multiply_letters(a, b)
                middle = () if merged is None else ((u, merged),)
                moves.append(word[:i] + middle + word[i + 2:])
            elif graph.adjacent(u, w):
                moves.append(word[:i] + ((w, b), (u, a)) + word[i + 2:])
            for nxt in moves:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if len(seen) > max_states:
            raise InputError(f"Green closure exceeds {max_states} words")
    return seen


def green_canonical(pres: Presentation, raw: Iterable[Tuple[str, Letter]]) -> Tuple[Syllable, ...]:
    """Least shortest word of the Green closure, by vertex declaration order"""
    graph = pres.graph
    closure = green_closure(pres, raw)
    shortest = min(len(word) for word in closure)
    best = min(
        (word for word in closure if len(word) == shortest),
        key=lambda word: tuple(graph.index(v) for v, _ in word),
    )
    return tuple(Syllable(v, letter) for v, letter in best)


def random_raw_word(pres: Presentation, length: int, rng: np.random.Generator) -> List[Tuple[str, Letter]]:
    """Random syllable list with cyclic letters, trivial letters included"""
    vertices = pres.graph.vertices
    raw = []
    for _ in range(length):
        v = vertices[int(rng.integers(len(vertices)))]
        label = pres.label(v)
        if label.kind == "cyclic":
            bound = label.order if label.order else 4
            raw.append((v, int(rng.integers(-bound, bound + 1))))
        else:
            size = int(rng.integers(1, 3))
            raw.append((v, tuple(int(g) for g in rng.choice(
                [i for r in range(1, label.rank + 1) for i in (r, -r)], size=size))))
    return raw


class TitsRepresentation:
    """
    Faithful integer representation of a graph product of ℤ/2

    The bilinear form is B(e_v, e_v) = 1, 0 on edges and -1 on non-edges;
    the generator at v acts as the reflection e ↦ e - 2B(e_v, e)e_v.
    """

    def __init__(self, pres: Presentation):
        if any(not (label.kind == "cyclic" and label.order == 2) for label in pres.labels):
            raise InputError("The Tits representation needs every vertex labelled ℤ/2")
        graph = pres.graph
        n = len(graph)
        form = -np.ones((n, n), dtype=np.int64)
        for i, v in enumerate(graph.vertices):
            form[i, i] = 1
            for w in graph.neighbors(v):
                form[i, graph.index(w)] = 0
        self.presentation = pres
        self.identity = np.eye(n, dtype=np.int64)
        self.reflections = {}
        for i, v in enumerate(graph.vertices):
            matrix = self.identity.copy()
            matrix[i, :] -= 2 * form[i, :]
            self.reflections[v] = matrix

    def evaluate(self, word: Sequence) -> np.ndarray:
        """Matrix of an element or of a raw syllable list"""
        if isinstance(word, Element):
            word = [(s.vertex, s.letter) for s in word.word]
        matrix = self.identity
        for item in word:
            v, letter = (item.vertex, item.letter) if isinstance(item, Syllable) else item
            if letter % 2:
                matrix = matrix @ self.reflections[v]
        return matrix

    def key(self, word: Sequence) -> bytes:
        return self.evaluate(word).tobytes()


class ParabolicBallOracle:
    """
    Parabolic subgroups decided through raw words and a finite ball

    gG_Λg⁻¹ contains x exactly when the raw word g⁻¹·x·g reduces to letters
    at Λ. Containment and normalizers are decided on conjugated vertex
    generators, which is exact; the ball gives the truncated element sets
    that intersections are compared on.

    Args:
        pres: Presentation with finite cyclic labels
        radius: Radius of the enumerated ball
    """

    def __init__(self, pres: Presentation, radius: int):
        self.presentation = pres
        self.radius = radius
        self.elements = ball(pres, radius)
        self._members: Dict[Parabolic, FrozenSet[Element]] = {}

    @staticmethod
    def _raw(x: Element) -> List[Tuple[str, Letter]]:
        return [(s.vertex, s.letter) for s in x.word]

    def _raw_inverse(self, x: Element) -> List[Tuple[str, Letter]]:
        pres = self.presentation
        return [(s.vertex, pres.label(s.vertex).invert_letter(s.letter)) for s in reversed(x.word)]

    def conjugate(self, x: Element, by: Element) -> Element:
        """by·x·by⁻¹ reduced from a single raw word"""
        return normalize(self.presentation, self._raw(by) + self._raw(x) + self._raw_inverse(by))

    def inverse(self, x: Element) -> Element:
        return normalize(self.presentation, self._raw_inverse(x))

    def inside(self, p: Parabolic, x: Element) -> bool:
        g = p.conjugator
        y = normalize(self.presentation, self._raw_inverse(g) + self._raw(x) + self._raw(g))
        return all(s.vertex in p.type_vertices for s in y.word)

    def generators(self, p: Parabolic) -> List[Element]:
        """Conjugated vertex generators of p"""
        pres = self.presentation
        return [
            self.conjugate(pres.syllable(v, letter), p.conjugator)
            for v in p.ordered_type()
            for letter in pres.label(v).generators()
        ]

    def members(self, p: Parabolic) -> FrozenSet[Element]:
        """Elements of the ball lying in p"""
        if p not in self._members:
            self._members[p] = frozenset(x for x in self.elements if self.inside(p, x))
        return self._members[p]

    def contains(self, p: Parabolic, q: Parabolic) -> bool:
        return all(self.inside(p, y) for y in self.generators(q))

    def normalizes(self, x: Element, p: Parabolic) -> bool:
        """x·p·x⁻¹ = p, checked on the generators of p in both directions"""
        x_inv = self.inverse(x)
        return all(
            self.inside(p, self.conjugate(y, x)) and self.inside(p, self.conjugate(y, x_inv))
            for y in self.generators(p)
        )
