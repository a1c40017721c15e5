"""
Renderings of defining graphs and complex balls: DOT, plotly HTML, matplotlib PNG
"""

from .complex_plotter import ComplexPlotter
from .dot_emitter import DotGraph, building_ball_to_dot, extension_ball_to_dot, presentation_to_dot
from .graph_plot import plot_presentation

__all__ = [
    'ComplexPlotter', 'DotGraph', 'building_ball_to_dot', 'extension_ball_to_dot',
    'presentation_to_dot', 'plot_presentation',
]
