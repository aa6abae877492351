import xml.etree.ElementTree as ET

import pytest

from otgraphs import Graph, PointSet, annotate, exit_graph, make_convex, render_svg
from otgraphs.samples import ORDER_TYPE_1874

NS = "{http://www.w3.org/2000/svg}"


def parse(svg):
    return ET.fromstring(svg)


def lines(root, cls):
    return [e for e in root.iter(NS + "line") if e.get("class") == cls]


def test_empty_graph_three_points():
    s = PointSet([(0, 0), (4, 1), (1, 3)])
    root = parse(render_svg(Graph(3), s))
    assert len(list(root.iter(NS + "circle"))) == 3
    assert [t.text for t in root.iter(NS + "text")] == ["0", "1", "2"]
    assert lines(root, "edge") == []


def test_chosen_lines_are_dashed_and_clipped():
    s = PointSet(ORDER_TYPE_1874)
    g = Graph(9, [(0, 1), (0, 5), (2, 5), (2, 6), (3, 5), (3, 7), (4, 6), (4, 7), (5, 7)])
    root = parse(render_svg(annotate(g, s), s, draw_lines=[(0, 5), (3, 7)]))
    dashed = lines(root, "support")
    assert len(dashed) == 2 and all(e.get("stroke-dasharray") for e in dashed)
    assert len(lines(root, "edge")) == 9
    size = float(root.get("width"))
    for e in dashed:
        for k in ("x1", "y1", "x2", "y2"):
            assert 0 <= float(e.get(k)) <= size


def test_convex_exit_graph_drawing():
    inst = make_convex(9)
    g = exit_graph(inst.points)
    root = parse(render_svg(g, inst.points, draw_hourglasses=True))
    assert len(lines(root, "edge")) == 9
    # one double wedge at each end of every edge, per witness
    assert len([p for p in root.iter(NS + "polygon")]) == 9 * 4


def test_y_axis_points_down_on_canvas():
    s = PointSet([(0, 0), (10, 0), (0, 10)])
    circles = list(parse(render_svg(Graph(3), s)).iter(NS + "circle"))
    assert float(circles[2].get("cy")) < float(circles[0].get("cy"))
    assert float(circles[1].get("cx")) > float(circles[0].get("cx"))


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        render_svg(Graph(4), PointSet([(0, 0), (1, 0), (0, 1)]))


def test_title_is_escaped():
    root = parse(render_svg(Graph(3), PointSet([(0, 0), (1, 0), (0, 1)]), title="a < b & c"))
    assert root.find(NS + "title").text == "a < b & c"
