import math
import random

import numpy as np
import pytest

from graphtopo.cubical import (
    CellSet,
    Shape,
    ShapeError,
    ball,
    circle,
    disk,
    intersection_graph,
    parse_shape,
    rasterize,
    run_experiment,
    solid_torus,
    torus_surface,
    twisted_curve,
)
from graphtopo.graph import cycle, is_isomorphic
from oracles import boxes_meet


def box_point_min(cell, L, c):
    d2 = 0.0
    for x, cc in zip(cell, c):
        lo, hi = x * L, (x + 1) * L
        d = max(lo - cc, 0.0, cc - hi)
        d2 += d * d
    return d2


def test_point_hits_corner_cells():
    assert rasterize(Shape("point", {"center": (0, 0)}), 1.0).cells == [(-1, -1), (-1, 0), (0, -1), (0, 0)]
    assert len(rasterize(Shape("point", {"center": (0, 0, 0)}), 1.0)) == 8


def test_disk_matches_scalar_distance_formula():
    cs = rasterize(disk(1.0), 1.0)
    want = sorted(
        (x, y) for x in range(-4, 4) for y in range(-4, 4) if box_point_min((x, y), 1.0, (0.0, 0.0)) <= 1.0
    )
    assert cs.cells == want
    assert len(cs) == 12


def box_point_max(cell, L, c):
    return sum(max(abs(x * L - cc), abs((x + 1) * L - cc)) ** 2 for x, cc in zip(cell, c))


def test_circle_band():
    L = 0.125
    cs = rasterize(circle(1.0), L)
    want = sorted(
        (x, y)
        for x in range(-12, 12)
        for y in range(-12, 12)
        if box_point_min((x, y), L, (0, 0)) <= 1.0 <= box_point_max((x, y), L, (0, 0))
    )
    assert cs.cells == want
    assert intersection_graph(cs).is_connected()
    # one to a few cells thick: no cell of the band is farther than 2L from the circle
    assert all(abs(math.hypot((x + 0.5) * L, (y + 0.5) * L) - 1.0) < 2 * L for x, y in cs.cells)


def test_sampled_torus_is_within_exact():
    exact = set(rasterize(torus_surface(), 0.25).cells)
    sampled = set(rasterize(torus_surface(samples=4), 0.25).cells)
    assert sampled <= exact
    assert len(sampled) > 0.8 * len(exact)


def test_polyline_covers_its_points():
    shape = twisted_curve()
    L = 0.2
    cs = set(rasterize(shape, L).cells)
    pts = shape.params["points"]
    for a, b in zip(pts, pts[1:]):
        for t in np.linspace(0, 1, 7):
            p = np.array(a) + t * (np.array(b) - np.array(a))
            assert tuple(int(v) for v in np.floor(p / L)) in cs


def test_segment_exact():
    seg = Shape("segment", {"a": (0.5, 0.5), "b": (2.5, 0.5)})
    assert rasterize(seg, 1.0).cells == [(0, 0), (1, 0), (2, 0)]
    diag = Shape("segment", {"a": (0.0, 0.0), "b": (1.0, 1.0)})
    cells = rasterize(diag, 1.0).cells
    assert (0, 0) in cells and (1, 1) in cells and (-1, -1) in cells and (1, 0) in cells


def test_intersection_graph_examples():
    g = intersection_graph(CellSet(2, 1.0, [(0, 0), (1, 0)]))
    assert g.order == 2 and g.size == 1
    g = intersection_graph(CellSet(2, 1.0, [(0, 0), (1, 1)]))
    assert g.size == 1
    g = intersection_graph(CellSet(2, 1.0, [(0, 0), (2, 0)]))
    assert g.size == 0


def test_chebyshev_rule_matches_box_arithmetic():
    rng = random.Random(7)
    for _ in range(500):
        dim = rng.choice((2, 3))
        a = tuple(rng.randint(-3, 3) for _ in range(dim))
        b = tuple(rng.randint(-3, 3) for _ in range(dim))
        if a == b:
            continue
        g = intersection_graph(CellSet(dim, 0.3, [a, b]))
        assert (g.size == 1) == boxes_meet(a, b, 0.3)


def test_vertex_order_is_lexicographic():
    cs = CellSet(2, 1.0, [(1, 0), (0, 5), (0, -1)])
    assert cs.cells == [(0, -1), (0, 5), (1, 0)]


def test_determinism():
    a = rasterize(solid_torus(), 0.3)
    b = rasterize(solid_torus(), 0.3)
    assert a.to_text() == b.to_text()
    assert intersection_graph(a) == intersection_graph(b)


@pytest.mark.parametrize(
    "kind,params",
    [
        ("disk", {"radius": -1}),
        ("torus-surface", {"R": 0.5, "r": 1.0}),
        ("annulus", {"inner": 2, "outer": 1}),
        ("hexagon", {}),
        ("circle", {"center": (0, 0, 0)}),
        ("polyline", {"points": [(0, 0)]}),
    ],
)
def test_bad_shapes(kind, params):
    with pytest.raises(ShapeError):
        Shape(kind, params)


def test_bad_cell_size_and_bbox():
    with pytest.raises(ShapeError):
        rasterize(disk(), 0)
    with pytest.raises(ShapeError):
        rasterize(disk(), 0.5, bbox=((-1, -1), (1, 1)))


def test_parse_shape():
    shape, extras = parse_shape("shape torus-surface\nparam R 2\nparam r 0.5\nparam L 0.2\n")
    assert shape.kind == "torus-surface" and shape.params["R"] == 2.0
    assert extras == {"L": 0.2}
    shape, _ = parse_shape("shape polyline\nparam point 0,0\nparam point 1,0.5\n")
    assert shape.params["points"] == ((0.0, 0.0), (1.0, 0.5))
    with pytest.raises(ShapeError):
        parse_shape("param R 2\n")
    with pytest.raises(ShapeError):
        parse_shape("shape disk\nbogus\n")


def test_small_experiments():
    r = run_experiment(circle(), 0.25, expected=cycle(4))
    assert r.matches_expected and r.profile.betti == (1, 1)
    r = run_experiment(ball(), 0.5)
    assert r.compressed.order == 1
    assert "basic=" in r.to_text()
    r = run_experiment(Shape("annulus", {"inner": 0.5, "outer": 1.0}), 0.125)
    assert is_isomorphic(r.compressed, cycle(4))
