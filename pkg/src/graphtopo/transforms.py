"""Contractible transformations, traces and compression.

Trace text format, one step per line, ids in the labeling current at that
step::

    DP <v>                  delete simple point v
    AP <v> : <u1> <u2> ...  attach new point v (always the next free id)
    DE <u> <v>              delete simple edge
    AE <u> <v>              attach edge whose common rim is contractible
    CS <v1>,<v2>,... -> <z> contract simple subgraph; z = min(S)

Deleting points and contracting subgraphs re-index the survivors densely,
preserving their relative order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .contractibility import ContractibilityCache, mask_contractible
from .graph import Graph, GraphError, ball_union_mask, complete
from .kernels import iter_bits

KINDS = ("DP", "AP", "DE", "AE", "CS")

EXHAUSTIVE_SUBGRAPH_ORDER = 16
DEFAULT_SUBGRAPH_CAP = 4


class TransformError(GraphError):
    """A transformation whose simplicity precondition does not hold."""


@dataclass(frozen=True)
class Transformation:
    kind: str
    vertices: tuple[int, ...] = ()
    rim: tuple[int, ...] = ()
    new: int | None = None

    @classmethod
    def delete_point(cls, v: int) -> "Transformation":
        return cls("DP", (v,))

    @classmethod
    def attach_point(cls, new: int, rim: Iterable[int]) -> "Transformation":
        return cls("AP", (), tuple(sorted(rim)), new)

    @classmethod
    def delete_edge(cls, u: int, v: int) -> "Transformation":
        return cls("DE", (min(u, v), max(u, v)))

    @classmethod
    def attach_edge(cls, u: int, v: int) -> "Transformation":
        return cls("AE", (min(u, v), max(u, v)))

    @classmethod
    def contract(cls, vertices: Iterable[int]) -> "Transformation":
        s = tuple(sorted(set(vertices)))
        return cls("CS", s, (), s[0] if s else None)

    def to_text(self) -> str:
        if self.kind == "DP":
            return f"DP {self.vertices[0]}"
        if self.kind == "AP":
            return f"AP {self.new} : " + " ".join(map(str, self.rim))
        if self.kind in ("DE", "AE"):
            return f"{self.kind} {self.vertices[0]} {self.vertices[1]}"
        return "CS " + ",".join(map(str, self.vertices)) + f" -> {self.new}"

    @classmethod
    def from_text(cls, line: str) -> "Transformation":
        line = line.strip()
        kind, _, rest = line.partition(" ")
        try:
            if kind == "DP":
                return cls.delete_point(int(rest))
            if kind == "AP":
                head, sep, tail = rest.partition(":")
                if not sep:
                    raise ValueError
                return cls.attach_point(int(head), [int(x) for x in tail.split()])
            if kind in ("DE", "AE"):
                u, v = (int(x) for x in rest.split())
                return cls(kind, (min(u, v), max(u, v)))
            if kind == "CS":
                lhs, sep, rhs = rest.partition("->")
                if not sep:
                    raise ValueError
                step = cls.contract(int(x) for x in lhs.split(","))
                if int(rhs) != step.new:
                    raise ValueError
                return step
        except ValueError:
            pass
        raise ValueError(f"malformed transformation {line!r}")


@dataclass
class Trace:
    source: Graph
    steps: list[Transformation] = field(default_factory=list)

    def to_text(self) -> str:
        return "".join(s.to_text() + "\n" for s in self.steps)

    @classmethod
    def from_text(cls, source: Graph, text: str) -> "Trace":
        steps = [
            Transformation.from_text(line)
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        return cls(source, steps)

    def __len__(self) -> int:
        return len(self.steps)


# -- single transformations --------------------------------------------------

def delete_point(g: Graph, v: int, cache: ContractibilityCache | None = None) -> Graph:
    g.check_vertex(v)
    if not mask_contractible(g.rows, g.rows[v], cache):
        raise TransformError(f"point {v} is not simple")
    return g.delete_vertices([v])


def attach_point(g: Graph, rim: Iterable[int], cache: ContractibilityCache | None = None) -> Graph:
    rim = list(rim)
    if not mask_contractible(g.rows, g.mask_of(rim), cache):
        raise TransformError(f"rim {sorted(rim)} does not induce a contractible subgraph")
    return g.add_vertex(rim)


def delete_edge(g: Graph, u: int, v: int, cache: ContractibilityCache | None = None) -> Graph:
    g.check_edge(u, v)
    if not mask_contractible(g.rows, g.rows[u] & g.rows[v], cache):
        raise TransformError(f"edge ({u},{v}) is not simple")
    return g.with_edge(u, v, present=False)


def attach_edge(g: Graph, u: int, v: int, cache: ContractibilityCache | None = None) -> Graph:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise TransformError(f"self-loop at {u}")
    if g.adjacent(u, v):
        raise TransformError(f"({u},{v}) is already an edge")
    if not mask_contractible(g.rows, g.rows[u] & g.rows[v], cache):
        raise TransformError(f"common rim of ({u},{v}) is not contractible")
    return g.with_edge(u, v, present=True)


def contracted(g: Graph, vertices: Iterable[int]) -> Graph:
    """Replace ``vertices`` by one point adjacent to all their outside neighbors.

    No simplicity check.  The new point takes the smallest id of the set.
    """
    s = sorted(set(vertices))
    if not s:
        raise GraphError("cannot contract an empty set")
    smask = g.mask_of(s)
    z = s[0]
    outside = 0
    for v in s:
        outside |= g.rows[v]
    outside &= ~smask
    rows = list(g.rows)
    for u in range(g.order):
        if (smask >> u) & 1:
            continue
        rows[u] &= ~smask
        if (outside >> u) & 1:
            rows[u] |= 1 << z
    rows[z] = outside
    h = Graph(g.order, rows, check=False)
    return h.delete_vertices(s[1:])


def contract_subgraph(g: Graph, vertices: Iterable[int], cache: ContractibilityCache | None = None) -> Graph:
    s = sorted(set(vertices))
    if not s:
        raise GraphError("cannot contract an empty set")
    if not mask_contractible(g.rows, ball_union_mask(g, s), cache):
        raise TransformError(f"subgraph {s} is not simple")
    return contracted(g, s)


def apply(g: Graph, step: Transformation, cache: ContractibilityCache | None = None) -> Graph:
    k = step.kind
    if k == "DP":
        return delete_point(g, step.vertices[0], cache)
    if k == "AP":
        if step.new != g.order:
            raise TransformError(f"attached point must take id {g.order}, not {step.new}")
        return attach_point(g, step.rim, cache)
    if k == "DE":
        return delete_edge(g, *step.vertices, cache=cache)
    if k == "AE":
        return attach_edge(g, *step.vertices, cache=cache)
    if k == "CS":
        if step.new != min(step.vertices):
            raise TransformError("contraction target must be the smallest id of the set")
        return contract_subgraph(g, step.vertices, cache)
    raise TransformError(f"unknown transformation kind {k!r}")


def replay(trace: Trace, cache: ContractibilityCache | None = None) -> Graph:
    """Apply every step, raising :class:`TransformError` on the first illegal one."""
    g = trace.source
    for i, step in enumerate(trace.steps):
        try:
            g = apply(g, step, cache)
        except GraphError as exc:
            raise TransformError(f"step {i} ({step.to_text()}): {exc}") from exc
    return g


def validate(trace: Trace, cache: ContractibilityCache | None = None) -> tuple[bool, int | None]:
    """``(True, None)`` if the trace replays, else ``(False, index of first bad step)``."""
    g = trace.source
    for i, step in enumerate(trace.steps):
        try:
            g = apply(g, step, cache)
        except GraphError:
            return False, i
    return True, None


def replay_graphs(trace: Trace, cache: ContractibilityCache | None = None) -> list[Graph]:
    """The graphs before the first step and after each step."""
    out = [trace.source]
    for step in trace.steps:
        out.append(apply(out[-1], step, cache))
    return out


# -- reversal ----------------------------------------------------------------

def expand_contraction(g: Graph, vertices: Sequence[int]) -> tuple[list[Transformation], list[int]]:
    """Primitive steps equivalent to contracting ``vertices``.

    Attach ``x`` with rim ``B(S)``, then delete the points of ``S`` from the
    highest id down.  Returns the steps and a map from the vertices of the
    resulting graph onto those of :func:`contracted`.
    """
    s = sorted(set(vertices))
    n = g.order
    bmask = ball_union_mask(g, s)
    steps = [Transformation.attach_point(n, iter_bits(bmask))]
    for v in reversed(s):
        steps.append(Transformation.delete_point(v))
    # survivors keep relative order; x is last in the primitive result,
    # sits at min(S) in the contracted graph
    survivors = [u for u in range(n) if u not in s]
    z = s[0]
    target_ids = [u for u in range(n) if u not in s[1:]]
    pos = {u: i for i, u in enumerate(target_ids)}
    phi = [pos[u] for u in survivors] + [pos[z]]
    return steps, phi


def reverse_steps(
    graphs: Sequence[Graph],
    steps: Sequence[Transformation],
    start: Graph,
    phi: Sequence[int],
) -> tuple[list[Transformation], Graph, list[int]]:
    """Undo ``steps`` starting from ``start``, a relabeled copy of ``graphs[-1]``.

    ``graphs[i+1] = apply(graphs[i], steps[i])`` and ``phi`` maps vertices of
    ``graphs[-1]`` to ``start``.  Returns the inverse steps (legal on
    ``start``), the final graph and the map from ``graphs[0]`` onto it.
    """
    out: list[Transformation] = []
    h = start
    phi = list(phi)
    for i in range(len(steps) - 1, -1, -1):
        prev, step = graphs[i], steps[i]
        k = step.kind
        if k == "DP":
            v = step.vertices[0]
            m = h.order
            rim = [phi[u - (u > v)] for u in iter_bits(prev.rows[v])]
            inv = Transformation.attach_point(m, rim)
            h = h.add_vertex(rim)
            phi = [m if u == v else phi[u - (u > v)] for u in range(prev.order)]
            out.append(inv)
        elif k == "AP":
            x = phi[step.new]
            inv = Transformation.delete_point(x)
            h = h.delete_vertices([x])
            phi = [phi[u] - (phi[u] > x) for u in range(prev.order)]
            out.append(inv)
        elif k in ("DE", "AE"):
            u, v = step.vertices
            a, b = phi[u], phi[v]
            inv = Transformation("AE" if k == "DE" else "DE", (min(a, b), max(a, b)))
            h = h.with_edge(a, b, present=(k == "DE"))
            out.append(inv)
        elif k == "CS":
            prim, psi = expand_contraction(prev, step.vertices)
            sub = [prev]
            for p in prim:
                sub.append(apply_unchecked(sub[-1], p))
            composed = [phi[psi[u]] for u in range(sub[-1].order)]
            inv, h, phi = reverse_steps(sub, prim, h, composed)
            out.extend(inv)
        else:
            raise TransformError(f"unknown transformation kind {k!r}")
    return out, h, phi


def apply_unchecked(g: Graph, step: Transformation) -> Graph:
    k = step.kind
    if k == "DP":
        return g.delete_vertices(step.vertices)
    if k == "AP":
        return g.add_vertex(step.rim)
    if k == "DE":
        return g.with_edge(*step.vertices, present=False)
    if k == "AE":
        return g.with_edge(*step.vertices, present=True)
    if k == "CS":
        return contracted(g, step.vertices)
    raise TransformError(f"unknown transformation kind {k!r}")


# -- compression ---------------------------------------------------------------

class _Fenwick:
    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)
        for i in range(1, n + 1):
            self.tree[i] += 1
            j = i + (i & -i)
            if j <= n:
                self.tree[j] += self.tree[i]

    def remove(self, i: int) -> None:
        i += 1
        while i <= self.n:
            self.tree[i] -= 1
            i += i & -i

    def rank(self, i: int) -> int:
        """Number of alive ids strictly below ``i``."""
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s


def _local_rows(adj: list[set[int]], vs: Sequence[int]) -> list[int]:
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        r = 0
        for u in adj[v]:
            j = index.get(u)
            if j is not None:
                r |= 1 << j
        rows.append(r)
    return rows


class _Work:
    """Mutable graph keyed by source ids, used by :func:`compress`."""

    def __init__(self, g: Graph, cache: ContractibilityCache | None):
        self.adj = [set(iter_bits(r)) for r in g.rows]
        self.alive = set(range(g.order))
        self.ranks = _Fenwick(g.order)
        self.cache = cache
        self.steps: list[Transformation] = []
        # change tracking for the incremental subgraph search
        self.clock = 0
        self.stamp = [0] * g.order
        self.touched: set[int] = set()
        self.pair_heap: list | None = None
        self.pair_version: dict[tuple[int, int], int] = {}
        self.verdicts: dict[frozenset, tuple[int, bool]] = {}

    def touch(self, vs) -> None:
        self.clock += 1
        for v in vs:
            self.stamp[v] = self.clock
            self.touched.add(v)

    def contractible(self, vs) -> bool:
        vs = sorted(vs)
        if not vs:
            return False
        rows = _local_rows(self.adj, vs)
        return mask_contractible(rows, (1 << len(vs)) - 1, self.cache)

    def edge_simple(self, u: int, v: int) -> bool:
        return self.contractible(self.adj[u] & self.adj[v])

    def point_simple(self, v: int) -> bool:
        return self.contractible(self.adj[v])

    def label(self, v: int) -> int:
        return self.ranks.rank(v)

    def delete_edge(self, u: int, v: int) -> None:
        self.steps.append(Transformation.delete_edge(self.label(u), self.label(v)))
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.touch((u, v))

    def delete_point(self, v: int) -> None:
        self.steps.append(Transformation.delete_point(self.label(v)))
        for u in self.adj[v]:
            self.adj[u].discard(v)
        self.touch(self.adj[v] | {v})
        self.adj[v] = set()
        self.alive.discard(v)
        self.ranks.remove(v)

    def contract(self, s: Sequence[int]) -> None:
        s = sorted(s)
        self.steps.append(Transformation.contract([self.label(v) for v in s]))
        sset = set(s)
        outside = set()
        for v in s:
            outside |= self.adj[v]
        outside -= sset
        z = s[0]
        for v in s:
            for u in self.adj[v]:
                self.adj[u].discard(v)
            self.adj[v] = set()
        for v in s[1:]:
            self.alive.discard(v)
            self.ranks.remove(v)
        self.adj[z] = outside
        for u in outside:
            self.adj[u].add(z)
        self.touch(outside | sset)

    def graph(self) -> Graph:
        ids = sorted(self.alive)
        rows = _local_rows(self.adj, ids)
        return Graph(len(ids), rows, check=False)


def _edge_pass(w: _Work, dirty_edges: set, dirty_points: set) -> bool:
    heap = list(dirty_edges)
    heapq.heapify(heap)
    dirty_edges.clear()
    queued = set(heap)
    changed = False
    while heap:
        e = heapq.heappop(heap)
        queued.discard(e)
        u, v = e
        if v not in w.adj[u] or not w.edge_simple(u, v):
            continue
        common = w.adj[u] & w.adj[v]
        w.delete_edge(u, v)
        changed = True
        dirty_points.update((u, v))
        dirty_points.update(common)
        touched = []
        for x in w.adj[u]:
            touched.append((min(u, x), max(u, x)))
        for x in w.adj[v]:
            touched.append((min(v, x), max(v, x)))
        for a in common:
            for b in w.adj[a] & common:
                if a < b:
                    touched.append((a, b))
        for t in touched:
            if t not in queued:
                queued.add(t)
                heapq.heappush(heap, t)
    return changed


def _point_pass(w: _Work, dirty_points: set, dirty_edges: set) -> bool:
    heap = [v for v in dirty_points if v in w.alive]
    heapq.heapify(heap)
    dirty_points.clear()
    queued = set(heap)
    changed = False
    while heap:
        v = heapq.heappop(heap)
        queued.discard(v)
        if v not in w.alive or len(w.alive) <= 1 or not w.point_simple(v):
            continue
        nbrs = set(w.adj[v])
        w.delete_point(v)
        changed = True
        for a in nbrs:
            for b in w.adj[a] & nbrs:
                if a < b:
                    dirty_edges.add((a, b))
            if a not in queued:
                queued.add(a)
                heapq.heappush(heap, a)
    return changed


def _connected_subsets(alive: Sequence[int], adj: list[set[int]], cap: int) -> Iterator[tuple[int, ...]]:
    """Connected vertex sets of size 2..cap in lexicographic order of sorted tuples, lazily.

    A sorted prefix is extended only while some connected completion of size
    at most ``cap`` using larger vertices exists.
    """

    def completable(q: list[int], qset: set[int], room: int, floor: int) -> bool:
        # can q be joined up by adding at most `room` vertices > floor?
        seen = {q[0]}
        stack = [q[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in qset and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) == len(qset):
            return True
        if room == 0:
            return False
        border = set()
        for x in qset:
            border |= adj[x]
        for y in sorted(border - qset):
            if y > floor and completable(q + [y], qset | {y}, room - 1, floor):
                return True
        return False

    def connected(q: list[int], qset: set[int]) -> bool:
        return completable(q, qset, 0, 0)

    for a in alive:
        # every member of a qualifying set lies within cap-1 steps of a through vertices > a
        region = {a}
        layer = [a]
        for _ in range(cap - 1):
            nxt = []
            for x in layer:
                for y in adj[x]:
                    if y > a and y not in region:
                        region.add(y)
                        nxt.append(y)
            layer = nxt
        loc = sorted(region - {a})

        def dfs(q: list[int], qset: set[int], start: int):
            for i in range(start, len(loc)):
                x = loc[i]
                r = q + [x]
                rset = qset | {x}
                if not completable(r, rset, cap - len(r), x):
                    continue
                if connected(r, rset):
                    yield tuple(r)
                if len(r) < cap:
                    yield from dfs(r, rset, i + 1)

        yield from dfs([a], {a}, 0)


def _ball(w: _Work, s) -> frozenset:
    b = set(s)
    for v in s:
        b |= w.adj[v]
    return frozenset(b)


def _cached_simple(w: _Work, s: tuple[int, ...], b: frozenset) -> bool:
    """Verdict for ball ``b`` of ``s``, reused while no point of the ball has changed."""
    hit = w.verdicts.get(s)
    if hit is not None and hit[0] >= max(w.stamp[x] for x in b):
        return hit[1]
    verdict = w.contractible(b)
    w.verdicts[s] = (w.clock, verdict)
    return verdict


def _simple_pair(w: _Work) -> list[int] | None:
    """Smallest simple adjacent pair by (ball size, ids), maintained across calls.

    The heap holds pairs whose verdict is unknown.  Pairs popped as
    non-simple return to it only when a point of their ball changes.
    """
    adj = w.adj
    if w.pair_heap is None:
        dirty = {(u, v) for u in w.alive for v in adj[u] if u < v}
        w.pair_heap = []
    else:
        dirty = set()
        for x in w.touched:
            if x not in w.alive:
                continue
            for y in adj[x] | {x}:
                for t in adj[y]:
                    dirty.add((y, t) if y < t else (t, y))
    w.touched.clear()
    heap = w.pair_heap
    for e in dirty:
        ver = w.pair_version.get(e, 0) + 1
        w.pair_version[e] = ver
        heapq.heappush(heap, (len(adj[e[0]] | adj[e[1]]), e, ver))
    while heap:
        _, e, ver = heap[0]
        u, v = e
        if ver != w.pair_version.get(e) or v not in adj[u]:
            heapq.heappop(heap)
            continue
        if _cached_simple(w, e, _ball(w, e)):
            return [u, v]  # left in the heap; contraction invalidates it
        heapq.heappop(heap)
    return None


def find_simple_subgraph(
    w: _Work, cap: int | None = None
) -> list[int] | None:
    """A simple set of at least two points, or None.

    Up to ``EXHAUSTIVE_SUBGRAPH_ORDER`` points every subset is tried and the
    lexicographically first simple one is returned.  Beyond that only
    connected sets of at most ``cap`` points are tried, smallest sets first,
    then smallest balls, then lexicographically.
    """
    alive = sorted(w.alive)
    n = len(alive)
    if n < 2:
        return None
    verdicts: dict[frozenset, bool] = {}
    full = frozenset(alive)

    def simple(b: frozenset) -> bool:
        hit = verdicts.get(b)
        if hit is None:
            hit = w.contractible(b)
            verdicts[b] = hit
        return hit

    if n <= EXHAUSTIVE_SUBGRAPH_ORDER and (cap is None or cap >= n):
        whole_ok = simple(full)

        def dfs(prefix: list[int], start: int):
            for i in range(start, n):
                s = prefix + [alive[i]]
                b = _ball(w, s)
                if b == full and not whole_ok:
                    continue  # supersets share this ball
                if len(s) >= 2 and simple(b):
                    return s
                got = dfs(s, i + 1)
                if got is not None:
                    return got
            return None

        return dfs([], 0)

    limit = DEFAULT_SUBGRAPH_CAP if cap is None else cap
    if n <= EXHAUSTIVE_SUBGRAPH_ORDER:
        for c in sorted(c for k in range(2, min(limit, n) + 1) for c in combinations(alive, k)):
            if simple(_ball(w, c)):
                return list(c)
        return None
    if limit < 2:
        return None
    got = _simple_pair(w)
    if got is not None or limit == 2:
        return got
    for k in range(3, limit + 1):
        ranked = []
        for c in _connected_subsets(alive, w.adj, k):
            if len(c) == k:
                b = _ball(w, c)
                ranked.append((len(b), c, b))
        ranked.sort(key=lambda t: (t[0], t[1]))
        for _, c, b in ranked:
            if _cached_simple(w, c, b):
                return list(c)
    return None


def compress(
    g: Graph,
    subgraph_cap: int | None = None,
    cache: ContractibilityCache | None = None,
) -> tuple[Graph, Trace]:
    """Reduce ``g`` to a compressed graph, returning it with a replayable trace.

    Each round deletes simple edges, then simple points (always the
    lexicographically smallest candidate first), then contracts one simple
    subgraph of at least two points.  Rounds repeat until nothing applies.
    """
    w = _Work(g, cache)
    dirty_edges = set(g.edges())
    dirty_points = set(range(g.order))
    while True:
        _edge_pass(w, dirty_edges, dirty_points)
        _point_pass(w, dirty_points, dirty_edges)
        if dirty_edges:
            continue
        s = find_simple_subgraph(w, subgraph_cap)
        if s is None:
            break
        w.contract(s)
        z = min(s)
        near = {z} | w.adj[z]
        dirty_points.update(near)
        for a in near:
            for b in w.adj[a]:
                dirty_edges.add((min(a, b), max(a, b)))
    return w.graph(), Trace(g, w.steps)


def is_compressed(g: Graph, cache: ContractibilityCache | None = None) -> bool:
    """No simple point, no simple edge and no simple set of two or more points.

    Above 16 points only sets up to ``DEFAULT_SUBGRAPH_CAP`` points are tried.
    """
    rows = g.rows
    for v in range(g.order):
        if mask_contractible(rows, rows[v], cache):
            return False
    for u, v in g.edges():
        if mask_contractible(rows, rows[u] & rows[v], cache):
            return False
    w = _Work(g, cache)
    cap = g.order if g.order <= EXHAUSTIVE_SUBGRAPH_ORDER else DEFAULT_SUBGRAPH_CAP
    return find_simple_subgraph(w, cap) is None


# -- unwinding a clique ---------------------------------------------------------

def unwind_from_complete(g: Graph, cache: ContractibilityCache | None = None) -> Trace | None:
    """Simple-edge deletions turning the clique on ``g``'s points into ``g``.

    Depth-first search over edge sets; None if no such sequence exists.
    """
    n = g.order
    target = set(g.edges())
    start = complete(n)
    failed: set[frozenset] = set()

    def dfs(h: Graph, edges: frozenset, steps: list[Transformation]):
        extra = sorted(edges - target)
        if not extra:
            return steps
        if edges in failed:
            return None
        for u, v in extra:
            if mask_contractible(h.rows, h.rows[u] & h.rows[v], cache):
                got = dfs(h.with_edge(u, v, present=False), edges - {(u, v)},
                          steps + [Transformation.delete_edge(u, v)])
                if got is not None:
                    return got
        failed.add(edges)
        return None

    steps = dfs(start, frozenset(start.edges()), [])
    return None if steps is None else Trace(start, steps)
