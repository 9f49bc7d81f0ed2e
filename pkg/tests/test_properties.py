"""Property-based checks on random labeled graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from graphtopo.contractibility import is_contractible
from graphtopo.graph import Graph, canonical_form
from graphtopo.invariants import homology


@st.composite
def graphs_with_perm(draw, max_order=9):
    n = draw(st.integers(1, max_order))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, edges), perm


@settings(max_examples=150, deadline=None)
@given(graphs_with_perm())
def test_canonical_form_ignores_labels(case):
    g, perm = case
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@settings(max_examples=80, deadline=None)
@given(graphs_with_perm(max_order=8))
def test_relabeling_keeps_invariants(case):
    g, perm = case
    h = g.relabel(perm)
    assert is_contractible(g) == is_contractible(h)
    assert homology(g) == homology(h)
