from itertools import combinations

import pytest

from conftest import random_graph
from graphtopo.graph import Graph, GraphError, complete, cross_polytope, cycle, empty, octahedron, path, wheel
from graphtopo.invariants import (
    NO,
    YES,
    InvariantProfile,
    contractible_hull,
    enumerate_curves,
    euler_characteristic,
    homology,
    hull_conditions,
    is_simple_closed_curve,
    is_simply_connected,
)
from oracles import rational_betti

RP2_FACETS = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def barycentric_graph(facets) -> Graph:
    faces = sorted({tuple(sorted(s)) for f in facets for k in (1, 2, 3) for s in combinations(f, k)})
    index = {f: i for i, f in enumerate(faces)}
    edges = [(index[a], index[b]) for a in faces for b in faces if len(a) < len(b) and set(a) <= set(b)]
    return Graph.from_edges(len(faces), edges)


@pytest.mark.parametrize(
    "g,chi,betti",
    [
        (cycle(4), 0, (1, 1)),
        (complete(4), 1, (1, 0, 0, 0)),
        (octahedron(), 2, (1, 0, 1)),
        (cross_polytope(3), 0, (1, 0, 0, 1)),
        (empty(3), 3, (3,)),
        (wheel(5), 1, (1, 0, 0)),
    ],
    ids=["C4", "K4", "octahedron", "S3", "three-points", "wheel"],
)
def test_homology_goldens(g, chi, betti):
    p = homology(g)
    assert p.euler == chi
    assert p.betti == betti
    assert all(t == () for t in p.torsion)


def test_projective_plane_has_two_torsion():
    g = barycentric_graph(RP2_FACETS)
    assert g.order == 31
    p = homology(g)
    assert p.betti == (1, 0, 0)
    assert p.torsion == ((), (2,), ())
    assert p.euler == 1


def test_euler_poincare_and_rational_betti(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 9))
        p = homology(g)
        assert p.euler == euler_characteristic(g)
        assert p.euler == sum((-1) ** k * b for k, b in enumerate(p.betti))
        assert list(p.betti) == rational_betti(g)


def test_profile_text_roundtrip():
    p = homology(octahedron())
    assert p.to_text() == "chi=2 betti=[1,0,1] torsion=[[],[],[]]"
    assert InvariantProfile.from_text(p.to_text()) == p
    q = InvariantProfile(1, (1, 0, 0), ((), (2,), ()))
    assert InvariantProfile.from_text(q.to_text()) == q
    with pytest.raises(ValueError):
        InvariantProfile.from_text("chi=x")


def test_truncated_homology():
    p = homology(complete(5), max_dim=1)
    assert p.betti == (1, 0)


def test_curves():
    assert is_simple_closed_curve(cycle(5), [0, 1, 2, 3, 4])
    assert not is_simple_closed_curve(wheel(5), [1, 0, 3, 4])
    curves, complete_flag = enumerate_curves(octahedron())
    assert complete_flag and len(curves) == 3
    assert all(len(c) == 4 for c in curves)
    assert enumerate_curves(complete(5))[0] == []
    _, flag = enumerate_curves(cycle(20), max_len=10)
    assert not flag


def test_simple_connectivity():
    assert is_simply_connected(cycle(4)) == NO
    assert is_simply_connected(octahedron()) == YES
    assert is_simply_connected(wheel(6)) == YES
    assert is_simply_connected(path(3)) == YES
    with pytest.raises(GraphError):
        is_simply_connected(empty(2))


def test_hulls():
    o = octahedron()
    equator = [0, 2, 1, 3]
    h = contractible_hull(o, equator)
    assert h is not None and h.ok
    assert len(h.vertices) == 5
    w = wheel(5)
    h = contractible_hull(w, [1, 2, 3, 4, 5])
    assert h.ok and h.graph.order == 6
    assert contractible_hull(cycle(4), [0, 1, 2, 3]) is None
    cond = hull_conditions(o, equator, range(6))
    assert not cond["contractible"]
