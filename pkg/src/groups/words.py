# src/groups/words.py

"""
Elements of graph products as canonical reduced syllable words.

A word (g_1, ..., g_n) with g_i in G_{v_i} is reduced when no letter is
trivial and any two letters at the same vertex are separated by a letter
at a vertex that is neither equal nor adjacent to it. Reduced words for the
same element differ by swaps of adjacent commuting letters; the canonical
representative emits, at each step, the front-movable syllable whose vertex
comes first in declaration order.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..config import get_config
from ..exceptions import EnumerationError, InputError, PresentationMismatchError
from ..graphs import InducedSubgraph, SimpleGraph, VertexSet
from .labels import Letter, VertexLabel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """A defining graph together with one vertex label per vertex"""

    graph: SimpleGraph
    labels: Tuple[VertexLabel, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.graph.vertices):
            raise InputError(
                f"Expected {len(self.graph.vertices)} labels, got {len(self.labels)}"
            )

    @classmethod
    def build(cls, graph: SimpleGraph, labels: Dict[str, VertexLabel]) -> "Presentation":
        missing = [v for v in graph.vertices if v not in labels]
        if missing:
            raise InputError(f"Vertices without a label: {missing}")
        extra = sorted(set(labels) - set(graph.vertices))
        if extra:
            raise InputError(f"Labels for undeclared vertices: {extra}")
        return cls(graph, tuple(labels[v] for v in graph.vertices))

    @classmethod
    def uniform(cls, graph: SimpleGraph, label: VertexLabel) -> "Presentation":
        return cls(graph, tuple(label for _ in graph.vertices))

    def label(self, v: str) -> VertexLabel:
        return self.labels[self.graph.index(v)]

    def label_map(self) -> Dict[str, VertexLabel]:
        return dict(zip(self.graph.vertices, self.labels))

    @property
    def is_arithmetic(self) -> bool:
        return all(label.is_arithmetic for label in self.labels)

    @property
    def is_finite_labelled(self) -> bool:
        return all(label.is_finite for label in self.labels)

    def identity(self) -> "Element":
        return Element(self, ())

    def element(self, raw: Iterable[Union["Syllable", Tuple[str, Letter]]]) -> "Element":
        return normalize(self, raw)

    def syllable(self, v: str, letter: Letter) -> "Element":
        return normalize(self, [(v, letter)])


@dataclass(frozen=True)
class Syllable:
    """A non-trivial letter of the vertex group at a vertex"""

    vertex: str
    letter: Letter

    def __str__(self) -> str:
        return f"({self.vertex},{self.letter})"


def _sort_key(pres: Presentation, word: Sequence[Syllable]) -> tuple:
    return tuple((pres.graph.index(s.vertex), s.letter) for s in word)


@dataclass(frozen=True)
class Element:
    """
    Group element stored as its canonical reduced word

    Equality is structural: two elements are equal exactly when their
    presentations and canonical words coincide.
    """

    presentation: Presentation = field(repr=False)
    word: Tuple[Syllable, ...]

    def _check(self, other: "Element") -> None:
        if other.presentation != self.presentation:
            raise PresentationMismatchError("Elements belong to different presentations")

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __invert__(self) -> "Element":
        return invert(self)

    def __pow__(self, n: int) -> "Element":
        return power(self, n)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_element(self)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def length(self) -> int:
        return word_length(self)

    def conjugate(self, by: "Element") -> "Element":
        return conjugate(self, by)

    def sort_key(self) -> tuple:
        return (word_length(self), len(self.word), _sort_key(self.presentation, self.word))


# rewriting


def _reduce(pres: Presentation, raw: Iterable) -> List[Tuple[str, Letter]]:
    """
    Fold syllables one at a time into a reduced word

    A new letter slides left over letters at adjacent vertices; it merges
    with the first letter at its own vertex, or stops at the first letter at
    a vertex that is neither equal nor adjacent.
    """
    graph = pres.graph
    out: List[Tuple[str, Letter]] = []
    for item in raw:
        if isinstance(item, Syllable):
            v, letter = item.vertex, item.letter
        else:
            v, letter = item
        graph.check_vertex(v)
        label = pres.label(v)
        letter = label.normalize_letter(letter)
        if letter is None:
            continue
        i = len(out) - 1
        merged = False
        while i >= 0:
            u, existing = out[i]
            if u == v:
                product = label.multiply_letters(existing, letter)
                if product is None:
                    del out[i]
                else:
                    out[i] = (v, product)
                merged = True
                break
            if not graph.adjacent(u, v):
                break
            i -= 1
        if not merged:
            out.append((v, letter))
    return out


def _canonical_order(graph: SimpleGraph, word: List[Tuple[str, Letter]]) -> Tuple[Syllable, ...]:
    remaining = list(word)
    ordered: List[Syllable] = []
    while remaining:
        best = None
        for j, (v, _) in enumerate(remaining):
            if all(graph.adjacent(u, v) for u, _ in remaining[:j]):
                if best is None or graph.index(v) < graph.index(remaining[best][0]):
                    best = j
        v, letter = remaining.pop(best)
        ordered.append(Syllable(v, letter))
    return tuple(ordered)


def normalize(pres: Presentation, raw: Iterable) -> Element:
    """
    Canonical element represented by a raw syllable list

    Args:
        pres: Ambient presentation
        raw: Syllables or (vertex, letter) pairs, trivial letters allowed

    Returns:
        The element in canonical reduced form

    Raises:
        UnsupportedLabelError: for letters under higman or opaque labels
    """
    return Element(pres, _canonical_order(pres.graph, _reduce(pres, raw)))


def from_syllables(pres: Presentation, word: Iterable[Syllable]) -> Element:
    return normalize(pres, word)


def multiply(x: Element, y: Element) -> Element:
    x._check(y)
    if not y.word:
        return x
    if not x.word:
        return y
    return normalize(x.presentation, x.word + y.word)


def invert(x: Element) -> Element:
    pres = x.presentation
    return normalize(
        pres, [(s.vertex, pres.label(s.vertex).invert_letter(s.letter)) for s in reversed(x.word)]
    )


def conjugate(x: Element, by: Element) -> Element:
    """by · x · by⁻¹"""
    x._check(by)
    return multiply(multiply(by, x), invert(by))


def power(x: Element, n: int) -> Element:
    """x^n by repeated squaring; negative n inverts first"""
    if n < 0:
        return power(invert(x), -n)
    result = x.presentation.identity()
    base = x
    while n:
        if n & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        n >>= 1
    return result


def word_length(x: Element) -> int:
    pres = x.presentation
    return sum(pres.label(s.vertex).letter_length(s.letter) for s in x.word)


def head(x: Element) -> frozenset:
    """Syllables that some reduced representative puts first"""
    graph = x.presentation.graph
    return frozenset(
        s
        for i, s in enumerate(x.word)
        if all(graph.adjacent(t.vertex, s.vertex) for t in x.word[:i])
    )


def tail(x: Element) -> frozenset:
    """Syllables that some reduced representative puts last"""
    graph = x.presentation.graph
    return frozenset(
        s
        for i, s in enumerate(x.word)
        if all(graph.adjacent(t.vertex, s.vertex) for t in x.word[i + 1:])
    )


def syllables(x: Element) -> Counter:
    return Counter(x.word)


def support(x: Element) -> VertexSet:
    return frozenset(s.vertex for s in x.word)


def retract(x: Element, lam: Iterable[str]) -> Element:
    """Image under the retraction G → G_Λ that kills vertex groups outside Λ"""
    vertices = lam.vertices if isinstance(lam, InducedSubgraph) else x.presentation.graph.check_subset(lam)
    return normalize(x.presentation, [s for s in x.word if s.vertex in vertices])


def generators(pres: Presentation) -> List[Element]:
    """Symmetric generating set S: letters of length one at every vertex"""
    gens = []
    for v, label in zip(pres.graph.vertices, pres.labels):
        for letter in label.generators():
            gens.append(pres.syllable(v, letter))
    return gens


def ball(pres: Presentation, radius: int, allow_infinite: bool = False,
         max_size: Optional[int] = None) -> List[Element]:
    """
    All elements of word length at most radius, in deterministic order

    Args:
        pres: Presentation with arithmetic labels
        radius: Non-negative radius
        allow_infinite: Permit infinite labels (the radius bounds the result)
        max_size: Abort beyond this many elements (defaults to configuration)

    Raises:
        EnumerationError: for infinite labels without allow_infinite, or when
            the ball outgrows max_size
    """
    if radius < 0:
        raise InputError(f"Radius must be non-negative, got {radius}")
    for label in pres.labels:
        if not label.is_arithmetic:
            raise EnumerationError(f"Cannot enumerate elements under label {label.display_name}")
        if not label.is_finite and not allow_infinite:
            raise EnumerationError(
                f"Label {label.display_name} is infinite; request a radius-bounded enumeration"
            )
    cap = max_size if max_size is not None else get_config().max_ball_size
    gens = generators(pres)
    identity = pres.identity()
    seen = {identity}
    frontier = [identity]
    for step in range(radius):
        fresh = []
        for g in frontier:
            for s in gens:
                h = multiply(g, s)
                if h not in seen:
                    seen.add(h)
                    fresh.append(h)
        if len(seen) > cap:
            raise EnumerationError(f"Ball of radius {radius} exceeds {cap} elements")
        logger.debug("ball layer %d: %d new elements", step + 1, len(fresh))
        if not fresh:
            break
        frontier = fresh
    return sorted(seen, key=Element.sort_key)


# text syntax


def format_letter(label: VertexLabel, letter: Letter) -> str:
    if label.kind == "cyclic":
        return f"^{letter}"
    return "[" + "".join(
        label.generator_name(abs(g)) if g > 0 else label.generator_name(abs(g)).upper()
        for g in letter
    ) + "]"


def format_element(x: Element) -> str:
    """Dot-separated syllable syntax, 'e' for the identity"""
    if not x.word:
        return "e"
    pres = x.presentation
    return ".".join(f"{s.vertex}{format_letter(pres.label(s.vertex), s.letter)}" for s in x.word)
