from src.complexes import building_ball, extension_ball
from src.groups.labels import VertexLabel
from src.groups.words import Presentation
from src.visualization import (
    ComplexPlotter,
    DotGraph,
    building_ball_to_dot,
    extension_ball_to_dot,
    plot_presentation,
    presentation_to_dot,
)


def test_dot_output_is_sorted():
    dot = DotGraph("T")
    dot.node("b", label="B")
    dot.node("a", label='say "a"')
    dot.edge("b", "a")
    text = dot.render()
    assert text.index('"a" [label="say \\"a\\""]') < text.index('"b" [label="B"]')
    assert '"b" -- "a"' in text


def test_presentation_dot(p4):
    text = presentation_to_dot(Presentation.uniform(p4, VertexLabel.cyclic(3)))
    assert text.count(" -- ") == 3
    assert "Z/3" in text


def test_complex_dots(klein):
    assert "// cube" in building_ball_to_dot(building_ball(klein, 2))
    assert extension_ball_to_dot(extension_ball(klein, 1)).count(" -- ") == 1


def test_plotly_rendering(klein, tmp_path):
    out = tmp_path / "ball.html"
    fig = ComplexPlotter(seed=3).plot_ball(building_ball(klein, 2), "building", str(out))
    assert out.exists()
    assert len(fig.data) >= 2


def test_png_rendering(p4, tmp_path):
    out = tmp_path / "graph.png"
    plot_presentation(Presentation.uniform(p4, VertexLabel.integers()), str(out))
    assert out.stat().st_size > 0
