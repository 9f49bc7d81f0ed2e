"""Semi-decision of homotopy equivalence between graphs.

Invariants refute, compression and a bounded bidirectional search over
contractible transformations confirm; anything else is reported unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .contractibility import ContractibilityCache, mask_contractible
from .graph import CanonicalForm, Graph, canonical_form, isomorphism
from .invariants import InvariantProfile, homology
from .transforms import (
    Trace,
    Transformation,
    compress,
    replay_graphs,
    reverse_steps,
)

EQUIVALENT, DISTINCT, UNKNOWN = "equivalent", "distinct", "unknown"

DEFAULT_BUDGET = 10**6
DEFAULT_DEPTH = 8
DEFAULT_ATTACH_BOUND = 4


@dataclass(frozen=True)
class Mismatch:
    invariant: str
    a: object
    b: object

    @staticmethod
    def _fmt(v) -> str:
        if isinstance(v, tuple):
            return "[" + ",".join(map(str, v)) + "]"
        return str(v)

    def to_text(self) -> str:
        return f"{self.invariant} {self._fmt(self.a)} {self._fmt(self.b)}"

    def __str__(self) -> str:
        return f"{self.invariant} {self._fmt(self.a)} ≠ {self._fmt(self.b)}"


@dataclass
class EquivalenceVerdict:
    outcome: str
    trace: Trace | None = None
    mismatch: Mismatch | None = None
    spent: int = 0

    def to_text(self) -> str:
        if self.outcome == EQUIVALENT:
            return "EQUIVALENT\n" + self.trace.to_text()
        if self.outcome == DISTINCT:
            return f"DISTINCT {self.mismatch.to_text()}\n"
        return f"UNKNOWN budget={self.spent}\n"


def compare_profiles(pa: InvariantProfile, pb: InvariantProfile) -> Mismatch | None:
    """First differing invariant: euler, then Betti numbers, then torsion, by dimension."""
    if pa.euler != pb.euler:
        return Mismatch("euler", pa.euler, pb.euler)
    dims = max(len(pa.betti), len(pb.betti))
    for k in range(dims):
        ba = pa.betti[k] if k < len(pa.betti) else 0
        bb = pb.betti[k] if k < len(pb.betti) else 0
        if ba != bb:
            return Mismatch(f"betti[{k}]", ba, bb)
    for k in range(dims):
        ta = pa.torsion[k] if k < len(pa.torsion) else ()
        tb = pb.torsion[k] if k < len(pb.torsion) else ()
        if ta != tb:
            return Mismatch(f"torsion[{k}]", tuple(ta), tuple(tb))
    return None


def distinguish(a: Graph, b: Graph) -> Mismatch | None:
    return compare_profiles(homology(a), homology(b))


# -- search --------------------------------------------------------------------

def moves(
    g: Graph,
    attach_bound: int = DEFAULT_ATTACH_BOUND,
    cache: ContractibilityCache | None = None,
    subgraph_cap: int | None = None,
):
    """Every single contractible transformation of ``g``, plus one compression macro.

    Yields ``(steps, result)`` in a fixed order: point deletions, edge
    deletions, edge attachments, point attachments by rim size, compression.
    """
    rows = g.rows
    n = g.order
    for v in range(n):
        if mask_contractible(rows, rows[v], cache):
            yield [Transformation.delete_point(v)], g.delete_vertices([v])
    for u, v in g.edges():
        if mask_contractible(rows, rows[u] & rows[v], cache):
            yield [Transformation.delete_edge(u, v)], g.with_edge(u, v, present=False)
    for u, v in g.non_edges():
        if mask_contractible(rows, rows[u] & rows[v], cache):
            yield [Transformation.attach_edge(u, v)], g.with_edge(u, v, present=True)
    for k in range(1, min(attach_bound, n) + 1):
        for rim in combinations(range(n), k):
            m = 0
            for x in rim:
                m |= 1 << x
            if mask_contractible(rows, m, cache):
                yield [Transformation.attach_point(n, rim)], g.add_vertex(rim)
    h, t = compress(g, subgraph_cap, cache)
    if t.steps:
        yield list(t.steps), h


class _Side:
    def __init__(self, root: Graph, key: CanonicalForm):
        self.seen: dict[CanonicalForm, tuple[CanonicalForm | None, list[Transformation], Graph]] = {
            key: (None, [], root)
        }
        self.frontier = [key]
        self.depth = 0

    def path(self, key: CanonicalForm) -> tuple[list[Transformation], Graph]:
        chunks = []
        node = self.seen[key]
        graph = node[2]
        while node[0] is not None:
            chunks.append(node[1])
            node = self.seen[node[0]]
        steps: list[Transformation] = []
        for c in reversed(chunks):
            steps.extend(c)
        return steps, graph


def _witness(
    a_steps: list[Transformation],
    x: Graph,
    b: Graph,
    b_steps: list[Transformation],
    y: Graph,
    cache,
) -> list[Transformation]:
    """Steps on ``a`` that reach ``x``, then undo ``b -> y`` from ``x`` (``x`` isomorphic to ``y``)."""
    phi = isomorphism(y, x)
    if phi is None:  # pragma: no cover - callers match canonical forms
        raise ValueError("meeting graphs are not isomorphic")
    graphs = replay_graphs(Trace(b, b_steps), cache)
    back, _, _ = reverse_steps(graphs, b_steps, x, phi)
    return list(a_steps) + back


def homotopy_equivalent(
    a: Graph,
    b: Graph,
    budget: int = DEFAULT_BUDGET,
    depth: int = DEFAULT_DEPTH,
    attach_bound: int = DEFAULT_ATTACH_BOUND,
    subgraph_cap: int | None = None,
    cache: ContractibilityCache | None = None,
) -> EquivalenceVerdict:
    """Invariants, then compression, then bounded bidirectional search."""
    if canonical_form(a) == canonical_form(b):
        return EquivalenceVerdict(EQUIVALENT, Trace(a, []), spent=0)
    mismatch = distinguish(a, b)
    if mismatch is not None:
        return EquivalenceVerdict(DISTINCT, mismatch=mismatch)

    ca, ta = compress(a, subgraph_cap, cache)
    cb, tb = compress(b, subgraph_cap, cache)
    ka, kb = canonical_form(ca), canonical_form(cb)
    if ka == kb:
        steps = _witness(ta.steps, ca, b, tb.steps, cb, cache)
        return EquivalenceVerdict(EQUIVALENT, Trace(a, steps), spent=2)

    fwd, bwd = _Side(ca, ka), _Side(cb, kb)
    spent = 2
    while fwd.depth + bwd.depth < depth and (fwd.frontier or bwd.frontier):
        if not bwd.frontier or (fwd.frontier and len(fwd.frontier) <= len(bwd.frontier)):
            side, other = fwd, bwd
        else:
            side, other = bwd, fwd
        nxt = []
        for key in sorted(side.frontier):
            g = side.seen[key][2]
            for steps, h in moves(g, attach_bound, cache, subgraph_cap):
                k = canonical_form(h)
                if k in side.seen:
                    continue
                side.seen[k] = (key, steps, h)
                spent += 1
                if k in other.seen:
                    fs, x = fwd.path(k)
                    bs, y = bwd.path(k)
                    steps_all = _witness(list(ta.steps) + fs, x, b, list(tb.steps) + bs, y, cache)
                    return EquivalenceVerdict(EQUIVALENT, Trace(a, steps_all), spent=spent)
                if spent >= budget:
                    return EquivalenceVerdict(UNKNOWN, spent=spent)
                nxt.append(k)
        side.frontier = nxt
        side.depth += 1
    return EquivalenceVerdict(UNKNOWN, spent=spent)
