# graphprod_cli.py - Command-line surface of the graph-product toolkit

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

import pandas as pd

from src.classification import RELATIONS, UNDETERMINED, LabelRelation, classify
from src.complexes import building_ball, extension_ball, untransvectable_extension_ball
from src.config import get_config
from src.documents import load_presentation, load_relation_table, parse_word, presentation_to_dict
from src.evaluation import SuiteRunner
from src.exceptions import GraphProductError, InputError
from src.graphs import (
    clique_reduction,
    has_partial_conjugation,
    is_clique_reduced,
    is_connected,
    is_join,
    is_strongly_reduced,
    is_transvection_free,
    join_decompose,
    untransvectable_vertices,
    within_exhaustive_limit,
)
from src.groups.parabolics import maximal_product_parabolics, parabolic_support
from src.groups.words import Presentation, head, normalize, syllables, tail, word_length
from src.recognition import PLAIN, THICK, find_zoom_chain, untransvectable_via_chains
from src.visualization import (
    ComplexPlotter,
    building_ball_to_dot,
    extension_ball_to_dot,
    plot_presentation,
    presentation_to_dot,
)

logger = logging.getLogger("graphprod")

COMPLEX_KINDS = ("extension", "untransvectable-extension", "building")


def _status(message: str) -> None:
    print(message, file=sys.stderr)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        _status(f"💾 Saved {out}")
    else:
        sys.stdout.write(text)


def _default_path(name: str) -> str:
    return os.path.join(get_config().output_dir, name)


# analyze


def _exhaustive_part(pres: Presentation) -> dict:
    """Entries that scan vertex subsets; None above the configured size limit"""
    graph = pres.graph
    if not within_exhaustive_limit(graph.vertices):
        return {"strongly_reduced": None, "plain": None, "thick": None, "chains": None, "maximal_products": None}
    strongly_reduced = is_strongly_reduced(graph)
    plain = untransvectable_via_chains(pres, PLAIN)
    thick = untransvectable_via_chains(pres, THICK) if len(graph) >= 2 and strongly_reduced else None
    chains = {}
    for v in graph.vertices:
        chain = find_zoom_chain(pres, v, PLAIN)
        chains[v] = chain.to_dict() if chain else None
    return {
        "strongly_reduced": strongly_reduced,
        "plain": graph.ordered(plain),
        "thick": graph.ordered(thick) if thick is not None else None,
        "chains": chains,
        "maximal_products": [m.to_dict() for m in maximal_product_parabolics(pres)],
    }


def analysis_report(pres: Presentation) -> dict:
    """
    Predicates, decompositions and recognized vertices of a presentation

    Above GRAPHPROD_MAX_EXHAUSTIVE_VERTICES the subset scans (strong
    reduction, zoom chains, maximal products) are reported as null and
    "exhaustive" is false; the remaining entries are always computed.
    """
    graph = pres.graph
    direct = untransvectable_vertices(graph)
    exhaustive = _exhaustive_part(pres)
    quotient, classes = clique_reduction(graph)
    base = graph.subgraph(direct)
    return {
        "presentation": presentation_to_dict(pres),
        "exhaustive": exhaustive["chains"] is not None,
        "predicates": {
            "transvection_free": is_transvection_free(graph),
            "partial_conjugation": has_partial_conjugation(graph),
            "strongly_reduced": exhaustive["strongly_reduced"],
            "clique_reduced": is_clique_reduced(graph),
            "connected": is_connected(graph),
            "join": len(graph) >= 2 and is_join(graph),
        },
        "reduced_to_one_vertex": len(graph) == 1,
        "join_decomposition": [part.to_list() for part in join_decompose(graph)] if len(graph) else [],
        "untransvectable": graph.ordered(direct),
        "untransvectable_via_chains": {
            "plain": exhaustive["plain"],
            "thick": exhaustive["thick"],
        },
        "zoom_chains": exhaustive["chains"],
        "maximal_products": exhaustive["maximal_products"],
        "untransvectable_profile": {
            "count": len(direct),
            "base_graph_has_edge": bool(base.edges),
        },
        "clique_reduction": {
            "vertices": list(quotient.vertices),
            "classes": {v: list(members) for v, members in classes.items()},
        },
    }


def analysis_frame(pres: Presentation, report: dict) -> pd.DataFrame:
    """One row per vertex for the csv format"""
    graph = pres.graph
    plain = report["untransvectable_via_chains"]["plain"]
    thick = report["untransvectable_via_chains"]["thick"]
    chains = report["zoom_chains"] or {}
    rows = []
    for v in graph.vertices:
        chain = chains.get(v)
        rows.append({
            "vertex": v,
            "label": pres.label(v).key,
            "degree": len(graph.neighbors(v)),
            "untransvectable": v in report["untransvectable"],
            "plain_chain": None if plain is None else v in plain,
            "thick_chain": None if thick is None else v in thick,
            "chain_length": chain["length"] if chain else None,
        })
    return pd.DataFrame(rows)


def cmd_analyze(args) -> int:
    pres = load_presentation(args.input)
    fmt = args.format or "json"
    if fmt == "png":
        plot_presentation(pres, args.out or _default_path("graph.png"))
        return 0
    if fmt == "dot":
        _emit(presentation_to_dot(pres), args.out)
        return 0
    if fmt not in ("json", "csv"):
        raise InputError(f"analyze supports json, csv, dot and png, not {fmt}")
    report = analysis_report(pres)
    if fmt == "csv":
        _emit(analysis_frame(pres, report).to_csv(index=False), args.out)
    else:
        _emit(_dump(report), args.out)
    predicates = report["predicates"]
    _status(f"📊 {len(pres.graph)} vertices, {len(report['untransvectable'])} untransvectable")
    if not report["exhaustive"]:
        _status("⚠️  Graph above GRAPHPROD_MAX_EXHAUSTIVE_VERTICES: subset scans skipped")
    if report["reduced_to_one_vertex"]:
        _status("⚠️  Reduced to one vertex: classification hypotheses fail")
    elif predicates["transvection_free"] and not predicates["partial_conjugation"]:
        _status("✅ Transvection-free without partial conjugations")
    return 0


# classify


def _relation(value: str) -> LabelRelation:
    if value in RELATIONS:
        return LabelRelation.built_in(value)
    return load_relation_table(value)


def cmd_classify(args) -> int:
    if not args.input_b:
        raise InputError("classify needs --input-b")
    pres_a = load_presentation(args.input)
    pres_b = load_presentation(args.input_b)
    verdict = classify(pres_a, pres_b, _relation(args.relation))
    _emit(_dump(verdict.to_dict()), args.out)
    if verdict.relation == UNDETERMINED:
        failed = ", ".join(verdict.hypotheses_report["failed"])
        _status(f"❌ Undetermined: hypotheses failed ({failed})")
        return 1
    _status(f"✅ Verdict: {verdict.relation}")
    return 0


# word


def cmd_word(args) -> int:
    pres = load_presentation(args.input)
    x = parse_word(pres, args.expression)

    def show(items) -> List[str]:
        words = [normalize(pres, [s]) for s in items]
        return sorted(str(w) for w in words)

    counts = syllables(x)
    support = parabolic_support(x)
    payload = {
        "normal_form": str(x),
        "length": word_length(x),
        "syllable_count": len(x),
        "head": show(head(x)),
        "tail": show(tail(x)),
        "syllables": {str(normalize(pres, [s])): n for s, n in sorted(counts.items(), key=lambda kv: str(kv[0]))},
        "parabolic_support": support.to_dict(),
    }
    _emit(_dump(payload), args.out)
    return 0


# complex


def cmd_complex(args) -> int:
    pres = load_presentation(args.input)
    radius = get_config().default_radius if args.radius is None else args.radius
    kind = args.kind
    fmt = args.format or "json"
    if fmt not in ("json", "dot", "html"):
        raise InputError(f"complex supports json, dot and html, not {fmt}")
    if kind == "building":
        ball = building_ball(pres, radius)
        summary = f"{len(ball.vertices)} vertices, {len(ball.edges)} edges, {ball.square_count} squares"
        dot = building_ball_to_dot
    else:
        builder = extension_ball if kind == "extension" else untransvectable_extension_ball
        ball = builder(pres, radius)
        summary = f"{ball.node_count} nodes, {ball.edge_count} edges"
        dot = extension_ball_to_dot
    out = args.out or _default_path(f"{kind}_R{radius}.{fmt}")
    if fmt == "html":
        ComplexPlotter(seed=args.seed or 0).plot_ball(ball, f"{kind} ball, radius {radius}", out)
    elif fmt == "dot":
        _emit(dot(ball), out)
    else:
        _emit(_dump(ball.to_dict()), out)
    print(summary)
    return 0


# selftest


def cmd_selftest(args) -> int:
    runner = SuiteRunner(args.max_vertices, seed=args.seed)
    runner.run()
    _status(runner.generate_report())
    if args.format == "csv":
        _emit(runner.summary_frame().to_csv(index=False), args.out)
    elif args.format == "html":
        ComplexPlotter().plot_selftest_summary(runner.summary_frame(), args.out or _default_path("selftest.html"))
    elif args.format == "json":
        _emit(_dump([r.to_dict() for r in runner.results]), args.out)
    return 0 if runner.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphprod",
        description="Normal forms, parabolic subgroups, complexes and classification verdicts for graph products",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    parser.add_argument("--seed", type=int, default=None, help="Seed for random suites and layouts")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Predicates and recognized vertices of a presentation")
    analyze.add_argument("--input", required=True)
    analyze.add_argument("--format", choices=("json", "csv", "dot", "png"), default="json")
    analyze.add_argument("--out")
    analyze.set_defaults(handler=cmd_analyze)

    classify_cmd = sub.add_parser("classify", help="Compare two presentations")
    classify_cmd.add_argument("--input", required=True)
    classify_cmd.add_argument("--input-b", required=True)
    classify_cmd.add_argument("--relation", default="iso",
                              help=f"One of {', '.join(RELATIONS)} or a relation table file")
    classify_cmd.add_argument("--out")
    classify_cmd.set_defaults(handler=cmd_classify)

    word = sub.add_parser("word", help="Normal form of a syllable expression")
    word.add_argument("--input", required=True)
    word.add_argument("expression")
    word.add_argument("--out")
    word.set_defaults(handler=cmd_word)

    complex_cmd = sub.add_parser("complex", help="Emit a ball of the extension graph or the building")
    complex_cmd.add_argument("--input", required=True)
    complex_cmd.add_argument("--kind", choices=COMPLEX_KINDS, default="building")
    complex_cmd.add_argument("--radius", type=int)
    complex_cmd.add_argument("--format", choices=("json", "dot", "html"), default="json")
    complex_cmd.add_argument("--out")
    complex_cmd.set_defaults(handler=cmd_complex)

    selftest = sub.add_parser("selftest", help="Run the invariant suites")
    selftest.add_argument("--max-vertices", type=int, default=5)
    selftest.add_argument("--format", choices=("text", "json", "csv", "html"), default="text")
    selftest.add_argument("--out")
    selftest.set_defaults(handler=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = "DEBUG" if args.verbose else get_config().log_level
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        return args.handler(args)
    except GraphProductError as exc:
        _status(f"❌ {exc}")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
