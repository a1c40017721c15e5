# src/evaluation/suite_runner.py

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from ..complexes import (
    CombinedBijection,
    building_ball,
    extension_ball,
    verify_building_isomorphism,
    verify_extension_isomorphism,
)
from ..config import get_config
from ..exceptions import InputError
from ..graphs import (
    SimpleGraph,
    cliques,
    has_partial_conjugation,
    is_join,
    is_strongly_reduced,
    is_transvection_free,
    iter_graphs,
    join_factors,
    untransvectable_vertices,
)
from ..groups.labels import VertexLabel
from ..groups.parabolics import (
    Parabolic,
    canonicalize,
    conjugate_parabolic,
    contains,
    intersect,
    member,
    normalizer,
    parabolic_support,
    standard,
)
from ..groups.words import (
    Element,
    Presentation,
    Syllable,
    ball,
    head,
    invert,
    multiply,
    normalize,
    syllables,
    word_length,
)
from ..recognition import PLAIN, THICK, untransvectable_via_chains
from .oracles import ParabolicBallOracle, TitsRepresentation, green_canonical, random_raw_word

logger = logging.getLogger(__name__)

MIN_VERTICES = 3
MAX_VERTICES = 8

EXHAUSTIVE_PAIR_VERTICES = 4
CONJUGATOR_RADIUS = 3
MEMBERSHIP_RADIUS = 2


@dataclass
class SuiteResult:
    """Outcome of one suite: checked cases, failures and a few failing examples"""

    suite: str
    cases: int = 0
    failures: int = 0
    seconds: float = 0.0
    examples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, description: str = "") -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(description)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "examples": list(self.examples),
        }


def _uniform(graph: SimpleGraph, label: VertexLabel) -> Presentation:
    return Presentation.uniform(graph, label)


def _describe(graph: SimpleGraph) -> str:
    edges = ",".join("-".join(graph.ordered(e)) for e in sorted(graph.edges, key=sorted))
    return f"V={len(graph)} E=[{edges}]"


def _random_element(pres: Presentation, length: int, rng: np.random.Generator) -> Element:
    return normalize(pres, random_raw_word(pres, length, rng))


def _parabolic_order(p: Parabolic) -> tuple:
    return len(p.type_vertices), p.conjugator.sort_key(), p.ordered_type()


def _random_shuffle(x: Element, rng: np.random.Generator, swaps: int) -> List[Syllable]:
    """Apply random swaps of neighbouring syllables at adjacent vertices"""
    graph = x.presentation.graph
    word = list(x.word)
    for _ in range(swaps):
        spots = [i for i in range(len(word) - 1) if graph.adjacent(word[i].vertex, word[i + 1].vertex)]
        if not spots:
            break
        i = spots[int(rng.integers(len(spots)))]
        word[i], word[i + 1] = word[i + 1], word[i]
    return word


class SuiteRunner:
    """
    Exhaustive and randomized invariant suites behind the selftest command

    Args:
        max_vertices: Largest graph size in the exhaustive suites (3 to 8)
        seed: Seed of the random suites (configuration default if omitted)
        samples: Random cases per sampled suite
        workers: Threads used to run the suites
    """

    def __init__(self, max_vertices: int, seed: Optional[int] = None,
                 samples: Optional[int] = None, workers: Optional[int] = None):
        if not MIN_VERTICES <= max_vertices <= MAX_VERTICES:
            raise InputError(
                f"maxVertices must lie between {MIN_VERTICES} and {MAX_VERTICES}, got {max_vertices}"
            )
        config = get_config()
        self.max_vertices = max_vertices
        self.seed = config.random_seed if seed is None else seed
        self.samples = config.selftest_samples if samples is None else samples
        self.workers = config.selftest_workers if workers is None else workers
        self.results: List[SuiteResult] = []
        self.suites: Dict[str, Callable[[SuiteResult, np.random.Generator], None]] = {
            "dichotomy": self.check_dichotomy,
            "zoom-plain": self.check_zoom_plain,
            "zoom-thick": self.check_zoom_thick,
            "normal-form": self.check_normal_form,
            "syllable-length": self.check_syllable_length,
            "parabolic-oracle": self.check_parabolic_oracle,
            "building-counts": self.check_building_counts,
            "combined-bijection": self.check_combined_bijection,
        }

    # exhaustive suites

    def check_dichotomy(self, result: SuiteResult, rng: np.random.Generator) -> None:
        """Transvection-free graphs without partial conjugation are strongly reduced or joins of such"""
        for graph in iter_graphs(MIN_VERTICES, self.max_vertices):
            if not is_transvection_free(graph) or has_partial_conjugation(graph):
                continue
            ok = is_strongly_reduced(graph)
            if not ok and is_join(graph):
                ok = True
                for part in join_factors(graph):
                    factor = graph.subgraph(part)
                    if len(part) < 2 or not is_strongly_reduced(factor) or not is_transvection_free(factor):
                        ok = False
            result.record(ok, _describe(graph))

    def check_zoom_plain(self, result: SuiteResult, rng: np.random.Generator) -> None:
        for graph in iter_graphs(MIN_VERTICES, self.max_vertices):
            pres = _uniform(graph, VertexLabel.integers())
            found = untransvectable_via_chains(pres, PLAIN)
            result.record(found == untransvectable_vertices(graph), _describe(graph))

    def check_zoom_thick(self, result: SuiteResult, rng: np.random.Generator) -> None:
        for graph in iter_graphs(MIN_VERTICES, self.max_vertices):
            if not is_strongly_reduced(graph):
                continue
            pres = _uniform(graph, VertexLabel.integers())
            found = untransvectable_via_chains(pres, THICK)
            result.record(found == untransvectable_vertices(graph), _describe(graph))

    # randomized suites

    def _small_graphs(self, limit: int) -> List[SimpleGraph]:
        return list(iter_graphs(1, min(self.max_vertices, limit)))

    def check_normal_form(self, result: SuiteResult, rng: np.random.Generator) -> None:
        """Canonical words against the Green closure, the Tits matrices and random shuffles"""
        per_presentation = max(5, self.samples // 25)
        for graph in self._small_graphs(5):
            for order in (2, 3):
                pres = _uniform(graph, VertexLabel.cyclic(order))
                tits = TitsRepresentation(pres) if order == 2 else None
                for _ in range(per_presentation):
                    raw = random_raw_word(pres, 5, rng)
                    x = normalize(pres, raw)
                    result.record(x.word == green_canonical(pres, raw), f"{_describe(graph)} Z/{order} {raw}")
                    shuffled = _random_shuffle(x, rng, 6)
                    result.record(normalize(pres, shuffled) == x, f"shuffle {x}")
                    if tits is not None:
                        y = _random_element(pres, 4, rng)
                        product = tits.evaluate(x) @ tits.evaluate(y)
                        result.record(
                            np.array_equal(tits.evaluate(multiply(x, y)), product),
                            f"{_describe(graph)} product {x} * {y}",
                        )
                        result.record(
                            x.is_identity == np.array_equal(tits.evaluate(raw), tits.identity),
                            f"{_describe(graph)} identity test {raw}",
                        )

    def check_syllable_length(self, result: SuiteResult, rng: np.random.Generator) -> None:
        """A syllable z survives in g⁻¹zh when no head of g or h lies at its vertex"""
        presentations = [
            _uniform(SimpleGraph(["a", "b"]), VertexLabel.integers()),
            _uniform(SimpleGraph.cycle(5), VertexLabel.integers()),
        ]
        for pres in presentations:
            vertices = pres.graph.vertices
            checked = 0
            while checked < self.samples:
                v = vertices[int(rng.integers(len(vertices)))]
                z = pres.syllable(v, int(rng.choice([-3, -2, -1, 1, 2, 3])))
                g = _random_element(pres, int(rng.integers(0, 5)), rng)
                h = _random_element(pres, int(rng.integers(0, 5)), rng)
                if any(s.vertex == v for s in head(g) | head(h)):
                    continue
                checked += 1
                w = multiply(multiply(invert(g), z), h)
                ok = syllables(w)[z.word[0]] > 0 and word_length(w) >= word_length(z)
                result.record(ok, f"g={g} z={z} h={h}")

    def check_parabolic_oracle(self, result: SuiteResult, rng: np.random.Generator) -> None:
        """
        Parabolic calculus against raw-word membership on ℤ/2 and ℤ/3 labels

        Every type is used. On graphs up to EXHAUSTIVE_PAIR_VERTICES each
        standard parabolic meets every parabolic with a conjugator of length
        at most one; random pairs with conjugators up to length
        CONJUGATOR_RADIUS cover the larger graphs. Intersections are compared
        on the ball of radius MEMBERSHIP_RADIUS.
        """
        per_presentation = max(5, self.samples // 20)
        for graph in self._small_graphs(5):
            types = [frozenset(c) for size in range(len(graph) + 1) for c in combinations(graph.vertices, size)]
            for order in (2, 3):
                pres = _uniform(graph, VertexLabel.cyclic(order))
                oracle = ParabolicBallOracle(pres, MEMBERSHIP_RADIUS)
                elements = ball(pres, CONJUGATOR_RADIUS)
                tag = f"{_describe(graph)} Z/{order}"

                def pick() -> Parabolic:
                    g = elements[int(rng.integers(len(elements)))]
                    return canonicalize(g, types[int(rng.integers(len(types)))])

                standards = [standard(pres, lam) for lam in types]
                pairs = []
                if len(graph) <= EXHAUSTIVE_PAIR_VERTICES:
                    short = {canonicalize(g, lam) for g in ball(pres, 1) for lam in types}
                    pairs = [(p, q) for p in standards for q in sorted(short, key=_parabolic_order)]
                pairs += [(pick(), pick()) for _ in range(per_presentation)]
                for p, q in pairs:
                    self._check_pair(result, oracle, p, q, tag)

                candidates = sorted(set(standards) | {q for pair in pairs for q in pair}, key=_parabolic_order)
                xs = [elements[int(rng.integers(len(elements)))] for _ in range(per_presentation)]
                for x in xs:
                    self._check_support(result, oracle, x, candidates, tag)
                shifts = ball(pres, 1) + xs[:5]
                for _ in range(per_presentation):
                    p = candidates[int(rng.integers(len(candidates)))]
                    self._check_normalizer(result, oracle, p, shifts, tag)

    @staticmethod
    def _check_pair(result: SuiteResult, oracle: ParabolicBallOracle, p: Parabolic, q: Parabolic,
                    tag: str) -> None:
        label = f"{tag} p={p} q={q}"
        result.record(contains(p, q) == oracle.contains(p, q), "contains " + label)
        meet = intersect(p, q)
        ok = oracle.contains(p, meet) and oracle.contains(q, meet)
        result.record(ok and oracle.members(meet) == oracle.members(p) & oracle.members(q), "intersect " + label)
        g = q.conjugator
        shifted = conjugate_parabolic(p, g)
        g_inv = oracle.inverse(g)
        ok = all(oracle.inside(shifted, oracle.conjugate(y, g)) for y in oracle.generators(p))
        ok = ok and all(oracle.inside(p, oracle.conjugate(y, g_inv)) for y in oracle.generators(shifted))
        result.record(ok, "conjugate " + label)
        if oracle.contains(p, shifted):
            result.record(shifted == p, "conjugate into itself " + label)

    @staticmethod
    def _check_support(result: SuiteResult, oracle: ParabolicBallOracle, x: Element,
                       candidates: List[Parabolic], tag: str) -> None:
        holders = []
        for q in candidates:
            inside = oracle.inside(q, x)
            result.record(member(q, x) == inside, f"member {tag} q={q} x={x}")
            if inside:
                holders.append(q)
        support = parabolic_support(x)
        ok = oracle.inside(support, x) and all(oracle.contains(q, support) for q in holders)
        result.record(ok, f"support {tag} x={x} support={support}")

    @staticmethod
    def _check_normalizer(result: SuiteResult, oracle: ParabolicBallOracle, p: Parabolic,
                          shifts: List[Element], tag: str) -> None:
        n = normalizer(p)
        ok = all(oracle.normalizes(y, p) for y in oracle.generators(n))
        ok = ok and all(member(n, x) == oracle.normalizes(x, p) for x in shifts)
        result.record(ok, f"normalizer {tag} p={p}")

    def check_building_counts(self, result: SuiteResult, rng: np.random.Generator) -> None:
        edge = _uniform(SimpleGraph.path(["a", "b"]), VertexLabel.cyclic(2))
        counts = building_ball(edge, 2)
        got = (len(counts.vertices), len(counts.edges), counts.square_count)
        result.record(got == (9, 12, 4), f"edge Z/2 radius 2 gave {got}")
        for graph in self._small_graphs(5):
            pres = _uniform(graph, VertexLabel.cyclic(2))
            domain = building_ball(pres, 1).fundamental_domain()
            result.record(len(domain) == len(cliques(graph)), f"fundamental domain {_describe(graph)}")

    def check_combined_bijection(self, result: SuiteResult, rng: np.random.Generator) -> None:
        graphs = [g for g in self._small_graphs(4) if len(g) >= 2][:10]
        for graph in graphs:
            pres = _uniform(graph, VertexLabel.cyclic(3))
            bijection = CombinedBijection.random(pres, pres, rng)
            radius = 2 if len(graph) <= 3 else 1
            ext = verify_extension_isomorphism(bijection, extension_ball(pres, radius))
            result.record(ext["isomorphism"], f"extension {_describe(graph)} {ext}")
            build = verify_building_isomorphism(bijection, building_ball(pres, radius))
            result.record(build["isomorphism"], f"building {_describe(graph)} {build}")

    # running and reporting

    def _run_one(self, index: int, name: str) -> SuiteResult:
        result = SuiteResult(name)
        rng = np.random.default_rng(self.seed + index)
        start = time.perf_counter()
        self.suites[name](result, rng)
        result.seconds = time.perf_counter() - start
        logger.info("suite %s: %d cases, %d failures", name, result.cases, result.failures)
        return result

    def run(self, names: Optional[List[str]] = None) -> List[SuiteResult]:
        """
        Run the selected suites (all by default) across worker threads

        Returns:
            Results in suite declaration order
        """
        selected = names or list(self.suites)
        unknown = [n for n in selected if n not in self.suites]
        if unknown:
            raise InputError(f"Unknown suites {unknown}; expected some of {list(self.suites)}")
        indices = {name: i for i, name in enumerate(self.suites)}
        print(f"🔄 Running {len(selected)} suites on graphs up to {self.max_vertices} vertices...")
        with ThreadPoolExecutor(max_workers=max(1, self.workers)) as pool:
            futures = [pool.submit(self._run_one, indices[name], name) for name in selected]
            self.results = [f.result() for f in futures]
        for r in self.results:
            mark = "✅" if r.passed else "❌"
            print(f"{mark} {r.suite}: {r.cases} cases, {r.failures} failures ({r.seconds:.2f}s)")
        return self.results

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def summary_frame(self) -> pd.DataFrame:
        columns = ["suite", "cases", "failures", "passed", "seconds"]
        rows = [{k: r.to_dict()[k] for k in columns} for r in self.results]
        return pd.DataFrame(rows, columns=columns)

    def generate_report(self) -> str:
        """Formatted pass/fail report of the last run"""
        frame = self.summary_frame()
        report = f"\n📊 SELFTEST REPORT - graphs up to {self.max_vertices} vertices\n"
        report += "=" * 50 + "\n\n"
        for r in self.results:
            mark = "✅" if r.passed else "❌"
            report += f"  {mark} {r.suite}: {r.cases} cases, {r.failures} failures, {r.seconds:.2f}s\n"
            for example in r.examples:
                report += f"      • {example}\n"
        report += f"\n⏱️  Total runtime: {frame['seconds'].sum():.2f}s\n"
        verdict = "PASS" if self.all_passed else "FAIL"
        report += f"🏆 Overall: {verdict} ({int(frame['failures'].sum())} failures in {int(frame['cases'].sum())} cases)\n"
        return report
