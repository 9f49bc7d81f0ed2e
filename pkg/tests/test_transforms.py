import itertools

import pytest

from conftest import random_connected, random_graph
from graphtopo.contractibility import is_contractible
from graphtopo.graph import Graph, canonical_form, complete, cycle, is_isomorphic, octahedron, path, point, wheel
from graphtopo.transforms import (
    Trace,
    TransformError,
    Transformation,
    _connected_subsets,
    apply,
    attach_edge,
    attach_point,
    compress,
    contract_subgraph,
    contracted,
    delete_edge,
    delete_point,
    expand_contraction,
    is_compressed,
    replay,
    replay_graphs,
    reverse_steps,
    unwind_from_complete,
    validate,
)


def test_single_moves():
    assert is_isomorphic(delete_point(path(3), 0), path(2))
    with pytest.raises(TransformError):
        delete_point(path(3), 1)
    assert is_isomorphic(attach_point(complete(2), [0, 1]), complete(3))
    c5 = attach_point(cycle(4), [0])
    assert c5.order == 5 and c5.degree(4) == 1
    with pytest.raises(TransformError):
        attach_point(cycle(4), [0, 2])
    diamond = delete_edge(complete(4), 0, 1)
    assert diamond.size == 5
    with pytest.raises(TransformError):
        attach_edge(cycle(4), 0, 2)
    with pytest.raises(TransformError):
        delete_edge(cycle(4), 0, 1)


def test_contraction_examples():
    c5 = contract_subgraph(cycle(6), [0, 1])
    assert is_isomorphic(c5, cycle(5))
    assert c5.neighbors(0) == [1, 4]
    assert is_isomorphic(contract_subgraph(cycle(5), [0, 1]), cycle(4))
    assert contract_subgraph(wheel(5), range(6)).order == 1
    with pytest.raises(TransformError):
        contract_subgraph(cycle(4), [0, 1])


def test_edge_deletion_chain_on_k4():
    # K4 on points a,b,c,d = 0,1,2,3; remove bc, ac, bd
    steps = [Transformation.delete_edge(1, 2), Transformation.delete_edge(0, 2), Transformation.delete_edge(1, 3)]
    t = Trace(complete(4), steps)
    assert validate(t) == (True, None)
    assert is_isomorphic(replay(t), path(4))
    t2 = Trace(complete(4), [Transformation.delete_edge(0, 1), Transformation.delete_edge(1, 3)])
    assert validate(t2) == (True, None)


def test_validate_reports_first_failure():
    t = Trace(cycle(4), [Transformation.delete_point(0)])
    assert validate(t) == (False, 0)
    assert replay(Trace(cycle(4), [])) == cycle(4)


def test_trace_text_roundtrip():
    steps = [
        Transformation.attach_point(4, [0, 1]),
        Transformation.delete_point(2),
        Transformation.delete_edge(0, 1),
        Transformation.attach_edge(0, 2),
        Transformation.contract([0, 1]),
    ]
    text = Trace(cycle(4), steps).to_text()
    assert text.splitlines() == ["AP 4 : 0 1", "DP 2", "DE 0 1", "AE 0 2", "CS 0,1 -> 0"]
    assert Trace.from_text(cycle(4), text).steps == steps


@pytest.mark.parametrize(
    "g,order,size",
    [(complete(4), 1, 0), (cycle(6), 4, 4), (cycle(5), 4, 4), (cycle(30), 4, 4), (octahedron(), 6, 12), (cycle(4), 4, 4)],
    ids=["K4", "C6", "C5", "C30", "octahedron", "C4"],
)
def test_compress_goldens(g, order, size):
    h, t = compress(g)
    assert (h.order, h.size) == (order, size)
    assert validate(t) == (True, None)
    assert replay(t) == h


def test_compress_c6_trace():
    _, t = compress(cycle(6))
    assert t.to_text() == "CS 0,1 -> 0\nCS 0,1 -> 0\n"


def test_compress_is_idempotent_and_deterministic(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 10))
        h, t = compress(g)
        assert is_compressed(h) or h.order == 0 or not h.is_connected()
        h2, t2 = compress(h)
        assert canonical_form(h2) == canonical_form(h)
        assert compress(g)[1].to_text() == t.to_text()


def test_contractible_graphs_compress_to_a_point(rng):
    for _ in range(80):
        g = random_connected(rng, rng.randint(1, 8))
        if is_contractible(g):
            assert compress(g)[0].order == 1


def test_reverse_steps_undo_compression(rng):
    for _ in range(60):
        g = random_connected(rng, rng.randint(2, 9))
        h, t = compress(g)
        graphs = replay_graphs(t)
        back, final, phi = reverse_steps(graphs, t.steps, h, list(range(h.order)))
        rt = Trace(h, back)
        assert validate(rt) == (True, None)
        assert is_isomorphic(replay(rt), g)
        assert all(final.adjacent(phi[u], phi[v]) for u, v in g.edges())


def test_expand_contraction_matches_contracted():
    g = cycle(7)
    steps, phi = expand_contraction(g, [2, 3])
    h = g
    for s in steps:
        h = apply(h, s)
    target = contracted(g, [2, 3])
    assert all(target.adjacent(phi[u], phi[v]) for u, v in h.edges())
    assert h.size == target.size


def test_connected_subsets_match_brute_force(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9), 0.35)
        adj = [set(g.neighbors(v)) for v in range(g.order)]
        cap = rng.randint(2, 5)
        got = list(_connected_subsets(range(g.order), adj, cap))
        want = sorted(
            c
            for k in range(2, cap + 1)
            for c in itertools.combinations(range(g.order), k)
            if g.induced(c)[0].is_connected()
        )
        assert got == want


def test_unwind_from_complete():
    t = unwind_from_complete(path(4))
    assert t is not None and validate(t) == (True, None)
    assert is_isomorphic(replay(t), path(4))
    assert unwind_from_complete(cycle(4)) is None


def test_large_graph_uses_capped_search():
    g = cycle(40)
    h, t = compress(g)
    assert is_isomorphic(h, cycle(4))
    assert validate(t) == (True, None)
    assert not is_compressed(Graph.from_edges(20, [(i, i + 1) for i in range(19)]))
