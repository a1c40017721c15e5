# src/visualization/graph_plot.py

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from ..graphs import untransvectable_vertices  # noqa: E402
from ..groups.words import Presentation  # noqa: E402


def plot_presentation(pres: Presentation, out_path: str, title: str = "Defining graph") -> str:
    """
    Save a PNG of the defining graph.

    Untransvectable vertices are filled, the others drawn hollow; every
    vertex carries its name and label.
    """
    graph = pres.graph.nx_graph
    positions = nx.circular_layout(graph) if len(pres.graph) else {}
    marked = untransvectable_vertices(pres.graph)

    plt.figure(figsize=(8, 8))
    nx.draw_networkx_edges(graph, positions, edge_color='#2C3E50', width=2.0, alpha=0.6)
    nx.draw_networkx_nodes(graph, positions, nodelist=[v for v in pres.graph.vertices if v in marked],
                           node_color='#2E86AB', node_size=900, label='untransvectable')
    nx.draw_networkx_nodes(graph, positions, nodelist=[v for v in pres.graph.vertices if v not in marked],
                           node_color='white', edgecolors='#F24236', linewidths=2.5, node_size=900,
                           label='transvectable')
    labels = {v: f"{v}\n{pres.label(v).display_name}" for v in pres.graph.vertices}
    nx.draw_networkx_labels(graph, positions, labels=labels, font_size=9)

    plt.title(title, fontsize=16, fontweight='bold', pad=20)
    if len(pres.graph):
        plt.legend(fontsize=10, loc='upper left')
    plt.axis('off')
    plt.tight_layout()
    plt.savefig(out_path, dpi=150)
    plt.close()
    print(f"💾 Graph drawing saved as {out_path}")
    return out_path
