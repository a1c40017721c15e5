# src/documents.py

"""
Text formats read by the command line: presentation documents, the
dot-separated syllable syntax for elements, and label relation tables.

A presentation document looks like

    {"graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]},
     "labels": {"a": {"kind": "cyclic", "order": 0}, "b": "Z/2"}}

Labels are either objects with a "kind" or short keys: "Z", "Z/n", "Fr",
"Higk", "opaque:<tag>".
"""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .classification import LabelRelation, check_relation_name
from .exceptions import InputError, RelationError
from .graphs import SimpleGraph
from .groups.labels import GENERATOR_ALPHABET, Letter, VertexLabel
from .groups.words import Element, Presentation, normalize

logger = logging.getLogger(__name__)

IDENTITY_TOKENS = ("", "e", "1")

_TOKEN = re.compile(r"^(?P<vertex>[^\^\[\]]+?)(?:\^(?P<exponent>[+-]?\d+)|\[(?P<generators>[A-Za-z]*)\])?$")
_KEY_PATTERNS = (
    (re.compile(r"^Z$"), lambda m: VertexLabel.integers()),
    (re.compile(r"^Z/(\d+)$"), lambda m: VertexLabel.cyclic(int(m.group(1)))),
    (re.compile(r"^F(\d+)$"), lambda m: VertexLabel.free(int(m.group(1)))),
    (re.compile(r"^Hig(\d+)$"), lambda m: VertexLabel.higman(int(m.group(1)))),
    (re.compile(r"^opaque:(.+)$"), lambda m: VertexLabel.opaque(m.group(1))),
)


def _load_json(source: Union[str, Path, dict]) -> Any:
    if isinstance(source, dict):
        return source
    path = Path(source)
    try:
        with path.open(encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"Cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


# labels


def parse_label_key(key: str) -> VertexLabel:
    """Short label key such as "Z", "Z/3", "F2" or "Hig5" """
    for pattern, build in _KEY_PATTERNS:
        match = pattern.match(key.strip())
        if match:
            return build(match)
    raise InputError(f"Unknown label key {key!r}")


def parse_label(spec: Union[str, Dict[str, Any]]) -> VertexLabel:
    if isinstance(spec, str):
        return parse_label_key(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InputError(f"Label spec must be a key or an object with a kind, got {spec!r}")
    kind = spec["kind"]
    name = str(spec.get("name", ""))
    try:
        if kind == "cyclic":
            return VertexLabel.cyclic(int(spec.get("order", 0)), name=name)
        if kind == "free":
            return VertexLabel.free(int(spec["rank"]), name=name)
        if kind == "higman":
            return VertexLabel.higman(int(spec["k"]), name=name)
        if kind == "opaque":
            return VertexLabel.opaque(str(spec["tag"]), bool(spec.get("infinite", True)), name=name)
    except InputError:
        raise
    except KeyError as exc:
        raise InputError(f"Label of kind {kind!r} is missing {exc.args[0]!r}")
    except (TypeError, ValueError) as exc:
        raise InputError(f"Malformed {kind} label {spec!r}: {exc}")
    raise InputError(f"Unknown label kind {kind!r}")


# presentation documents


def parse_presentation(doc: Dict[str, Any]) -> Presentation:
    """
    Build a presentation from a decoded document

    Raises:
        InputError: for missing sections, undeclared vertices, unlabelled
            vertices or malformed labels
    """
    if not isinstance(doc, dict):
        raise InputError("Presentation document must be a JSON object")
    graph_spec = doc.get("graph")
    labels_spec = doc.get("labels")
    if not isinstance(graph_spec, dict) or not isinstance(labels_spec, dict):
        raise InputError("Presentation document needs 'graph' and 'labels' objects")
    vertices = graph_spec.get("vertices")
    if not isinstance(vertices, list):
        raise InputError("'graph.vertices' must be a list")
    edges = graph_spec.get("edges", [])
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges
    ):
        raise InputError("'graph.edges' must be a list of vertex pairs")
    graph = SimpleGraph(vertices, [tuple(e) for e in edges])
    labels = {str(v): parse_label(spec) for v, spec in labels_spec.items()}
    return Presentation.build(graph, labels)


def load_presentation(source: Union[str, Path, dict]) -> Presentation:
    pres = parse_presentation(_load_json(source))
    logger.debug("loaded presentation with %d vertices", len(pres.graph))
    return pres


def presentation_to_dict(pres: Presentation) -> dict:
    graph = pres.graph
    edges = sorted(graph.ordered(e) for e in graph.edges)
    return {
        "graph": {"vertices": list(graph.vertices), "edges": edges},
        "labels": {v: label.to_dict() for v, label in pres.label_map().items()},
    }


# syllable syntax


def _free_letter(label: VertexLabel, names: str) -> Letter:
    letter: List[int] = []
    for ch in names:
        index = GENERATOR_ALPHABET.find(ch.lower())
        if index < 0 or index >= label.rank:
            raise InputError(f"Generator {ch!r} is not among the {label.rank} generators of {label.key}")
        letter.append(-(index + 1) if ch.isupper() else index + 1)
    return tuple(letter)


def parse_word(pres: Presentation, expression: str) -> Element:
    """
    Parse a dot-separated syllable expression into its canonical element

    Tokens are `v^e`, `v` (exponent 1) or `v[xY]` for free labels, where an
    uppercase generator stands for its inverse. `e`, `1` and the empty string
    denote the identity.

    Raises:
        InputError: for malformed tokens or unknown vertices
        UnsupportedLabelError: for syllables under higman or opaque labels
    """
    text = expression.strip()
    if text in IDENTITY_TOKENS:
        return pres.identity()
    raw = []
    for token in text.split("."):
        match = _TOKEN.match(token.strip())
        if not match:
            raise InputError(f"Malformed syllable {token!r}")
        vertex = match.group("vertex")
        pres.graph.check_vertex(vertex)
        label = pres.label(vertex)
        generators = match.group("generators")
        if generators is not None:
            if label.kind != "free":
                raise InputError(f"Bracket letters need a free label, {vertex} is {label.key}")
            letter: Letter = _free_letter(label, generators)
        else:
            exponent = match.group("exponent")
            letter = int(exponent) if exponent is not None else 1
        raw.append((vertex, letter))
    return normalize(pres, raw)


# relation tables


def parse_relation_table(doc: Dict[str, Any], relation: Optional[str] = None) -> LabelRelation:
    """
    Relation table {"relation": ..., "related": [[k1, k2], ...], "unrelated": [...]}

    Args:
        doc: Decoded table
        relation: Relation requested on the command line; must agree with
            the table when both are given

    Raises:
        RelationError: for malformed or conflicting tables
    """
    if not isinstance(doc, dict):
        raise RelationError("Relation table must be a JSON object")
    declared = doc.get("relation", relation)
    if declared is None:
        raise RelationError("Relation table does not name its relation")
    if relation is not None and declared != relation:
        raise RelationError(f"Table is for {declared!r} but {relation!r} was requested")
    try:
        check_relation_name(declared)
    except InputError as exc:
        raise RelationError(str(exc))
    pairs = {}
    for section in ("related", "unrelated"):
        entries = doc.get(section, [])
        if not isinstance(entries, list) or any(
            not isinstance(p, (list, tuple)) or len(p) != 2 for p in entries
        ):
            raise RelationError(f"'{section}' must be a list of label-key pairs")
        pairs[section] = [(str(a), str(b)) for a, b in entries]
    return LabelRelation(declared, pairs["related"], pairs["unrelated"], name=str(doc.get("name", "")))


def load_relation_table(source: Union[str, Path, dict], relation: Optional[str] = None) -> LabelRelation:
    try:
        doc = _load_json(source)
    except InputError as exc:
        raise RelationError(str(exc))
    return parse_relation_table(doc, relation)
