# src/visualization/complex_plotter.py

from typing import Dict, List, Optional, Union

import networkx as nx
import pandas as pd
import plotly.graph_objects as go
from plotly.subplots import make_subplots

from ..complexes.building import BuildingBall
from ..complexes.extension import ExtensionBall

Ball = Union[ExtensionBall, BuildingBall]


class ComplexPlotter:
    """
    Interactive HTML rendering of extension-graph and building balls
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.colors = {
            'edge': 'rgba(44, 62, 80, 0.45)',
            'palette': ['#2E86AB', '#F24236', '#3BB273', '#E1BC29', '#7768AE', '#F18F01'],
            'grid': 'rgba(128, 128, 128, 0.2)',
            'background': 'white'
        }

    def plot_ball(self, ball: Ball, title: str, out_path: Optional[str] = None) -> go.Figure:
        """
        Draw a ball next to a bar chart of its vertex counts

        Args:
            ball: Extension or building ball
            title: Figure title
            out_path: Write the figure as HTML here when given

        Returns:
            Plotly Figure object
        """
        graph = ball.to_networkx()
        if isinstance(ball, BuildingBall):
            groups = {i: f"rank {c.rank}" for i, c in enumerate(ball.vertices)}
            hover = {i: str(c) for i, c in enumerate(ball.vertices)}
        else:
            groups = {i: f"vertex {ball.node_vertex(i)}" for i in range(ball.node_count)}
            hover = {i: f"{p.conjugator}·G_{ball.node_vertex(i)}" for i, p in enumerate(ball.nodes)}

        fig = make_subplots(
            rows=1, cols=2,
            column_widths=[0.72, 0.28],
            subplot_titles=(title, 'Vertex counts'),
        )
        self._add_ball_traces(fig, graph, groups, hover)
        self._add_count_bars(fig, groups)
        self._update_layout(fig, title)

        if out_path:
            fig.write_html(out_path)
            print(f"💾 Interactive complex saved as {out_path}")
        return fig

    def _add_ball_traces(self, fig: go.Figure, graph: nx.Graph,
                         groups: Dict[int, str], hover: Dict[int, str]):
        """Edges as one line trace, vertices as one marker trace per group"""
        positions = nx.spring_layout(graph, seed=self.seed) if graph.number_of_nodes() else {}
        xs: List[Optional[float]] = []
        ys: List[Optional[float]] = []
        for a, b in graph.edges():
            xs += [positions[a][0], positions[b][0], None]
            ys += [positions[a][1], positions[b][1], None]
        fig.add_trace(go.Scatter(
            x=xs, y=ys, mode='lines',
            line=dict(color=self.colors['edge'], width=1.2),
            hoverinfo='skip', showlegend=False
        ), row=1, col=1)

        palette = self.colors['palette']
        for k, group in enumerate(sorted(set(groups.values()))):
            members = [i for i in graph.nodes() if groups[i] == group]
            fig.add_trace(go.Scatter(
                x=[positions[i][0] for i in members],
                y=[positions[i][1] for i in members],
                mode='markers',
                name=group,
                marker=dict(size=11, color=palette[k % len(palette)], line=dict(width=1, color='white')),
                text=[hover[i] for i in members],
                hovertemplate='%{text}<extra></extra>'
            ), row=1, col=1)

    def _add_count_bars(self, fig: go.Figure, groups: Dict[int, str]):
        counts = pd.Series(list(groups.values()), dtype=object).value_counts().sort_index()
        fig.add_trace(go.Bar(
            x=list(counts.index), y=list(counts.values),
            marker_color=self.colors['palette'][0],
            text=[str(v) for v in counts.values], textposition='auto',
            showlegend=False
        ), row=1, col=2)

    def _update_layout(self, fig: go.Figure, title: str):
        fig.update_layout(
            title=dict(text=f"<b>{title}</b>", x=0.5, font=dict(size=18, color='#2C3E50')),
            plot_bgcolor=self.colors['background'],
            paper_bgcolor=self.colors['background'],
            font=dict(family="Arial, sans-serif", size=12, color='#2C3E50'),
            legend=dict(orientation="h", yanchor="bottom", y=1.02, xanchor="right", x=1),
            height=650
        )
        fig.update_xaxes(showgrid=False, zeroline=False, showticklabels=False, row=1, col=1)
        fig.update_yaxes(showgrid=False, zeroline=False, showticklabels=False, row=1, col=1)
        fig.update_yaxes(showgrid=True, gridcolor=self.colors['grid'], row=1, col=2)

    def plot_selftest_summary(self, frame: pd.DataFrame, out_path: Optional[str] = None) -> go.Figure:
        """Cases and failures per suite"""
        colors = ['green' if ok else 'red' for ok in frame['passed']]
        fig = go.Figure(go.Bar(
            x=frame['suite'], y=frame['cases'],
            marker_color=colors,
            text=[f"{c} cases / {f} failures" for c, f in zip(frame['cases'], frame['failures'])],
            textposition='auto'
        ))
        fig.update_layout(title="<b>Selftest Suites</b>", height=450, showlegend=False)
        if out_path:
            fig.write_html(out_path)
            print(f"💾 Selftest summary saved as {out_path}")
        return fig
