# src/visualization/dot_emitter.py

"""DOT output for defining graphs and complex balls"""

from typing import Dict, List, Optional

from ..complexes.building import BuildingBall
from ..complexes.extension import ExtensionBall
from ..groups.words import Presentation

RANK_COLORS = ["#2E86AB", "#F24236", "#3BB273", "#E1BC29", "#7768AE"]


def _quote(value: object) -> str:
    return '"' + str(value).replace("\\", "\\\\").replace('"', '\\"') + '"'


class DotGraph:
    """Undirected DOT graph with sorted, reproducible output"""

    def __init__(self, name: str = "G", options: Optional[List[str]] = None):
        self.name = name
        self.options = options if options is not None else [
            "overlap=false",
            "splines=true",
            "node [fontname=Helvetica, shape=circle]",
        ]
        self.nodes: List[str] = []
        self.edges: List[str] = []

    def _unpack(self, attrs: Dict[str, object]) -> str:
        return ",".join(f"{k}={_quote(v)}" for k, v in sorted(attrs.items()))

    def node(self, identifier: object, **attrs) -> None:
        self.nodes.append(f"{_quote(identifier)} [{self._unpack(attrs)}]")

    def edge(self, a: object, b: object, **attrs) -> None:
        suffix = f" [{self._unpack(attrs)}]" if attrs else ""
        self.edges.append(f"{_quote(a)} -- {_quote(b)}{suffix}")

    def render(self) -> str:
        lines = [f"graph {self.name} {{"]
        for line in self.options + [""] + sorted(self.nodes) + [""] + sorted(self.edges):
            lines.append(f"  {line}" if line else "")
        lines.append("}")
        return "\n".join(lines) + "\n"


def presentation_to_dot(pres: Presentation) -> str:
    dot = DotGraph("Gamma")
    for v, label in pres.label_map().items():
        dot.node(v, label=f"{v}\n{label.display_name}")
    for e in pres.graph.edges:
        a, b = pres.graph.ordered(e)
        dot.edge(a, b)
    return dot.render()


def extension_ball_to_dot(ball: ExtensionBall) -> str:
    dot = DotGraph("Extension")
    for i, node in enumerate(ball.nodes):
        dot.node(i, label=f"{node.conjugator}·{ball.node_vertex(i)}", vertex=ball.node_vertex(i))
    for i, j in ball.edges:
        dot.edge(i, j)
    return dot.render()


def building_ball_to_dot(ball: BuildingBall) -> str:
    """Cosets coloured by rank; cubes of dimension ≥ 2 are listed as comments"""
    dot = DotGraph("Building", options=[
        "overlap=false",
        "node [fontname=Helvetica, shape=box, style=filled, fontcolor=white]",
    ])
    for i, coset in enumerate(ball.vertices):
        dot.node(i, label=str(coset), fillcolor=RANK_COLORS[coset.rank % len(RANK_COLORS)], rank=coset.rank)
    for i, j in ball.edges:
        dot.edge(i, j)
    text = dot.render()
    if ball.cubes:
        comments = "".join(f"// cube {b} .. {t} dim {d}\n" for b, t, d in ball.cubes)
        text += comments
    return text
