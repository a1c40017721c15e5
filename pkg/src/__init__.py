"""
Graph-Product Toolkit - Core Package

Normal forms, parabolic subgroups, extension graphs, right-angled buildings,
zoom-in recognition of untransvectable vertices and classification verdicts
for graph products of groups.

Version: 1.0.0
"""

__version__ = "1.0.0"

from .classification import LabelRelation, Verdict, classify
from .documents import load_presentation, parse_word
from .graphs import SimpleGraph
from .groups import Element, Parabolic, Presentation, VertexLabel
from .recognition import ZoomChain, find_zoom_chain, untransvectable_via_chains

__all__ = [
    "SimpleGraph",
    "VertexLabel",
    "Presentation",
    "Element",
    "Parabolic",
    "ZoomChain",
    "find_zoom_chain",
    "untransvectable_via_chains",
    "LabelRelation",
    "Verdict",
    "classify",
    "load_presentation",
    "parse_word",
]
