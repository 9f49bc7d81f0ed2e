"""Finite simple graphs over dense vertex ids, stored as integer bit rows."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .kernels import iter_bits


class GraphError(ValueError):
    """Invalid graph, vertex id or edge."""


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class encoding; byte order is a total order on classes."""

    data: bytes

    @property
    def order(self) -> int:
        return int.from_bytes(self.data[:4], "big")

    def hex(self) -> str:
        return self.data.hex()

    def __str__(self) -> str:
        return self.hex()


class Graph:
    """Immutable simple undirected graph on points ``0..order-1``.

    ``rows[v]`` is an integer whose bit ``u`` is set iff ``u`` and ``v`` are
    adjacent.  Rows are Python ints, so graphs above 64 points simply use
    wider rows.
    """

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int], check: bool = True):
        rows = tuple(rows)
        if len(rows) != order:
            raise GraphError(f"expected {order} rows, got {len(rows)}")
        if check:
            full = (1 << order) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"row {v} references a vertex >= {order}")
                if (r >> v) & 1:
                    raise GraphError(f"self-loop at {v}")
                for u in iter_bits(r):
                    if not (rows[u] >> v) & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.order, self.rows, False))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u},{v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows, check=False)

    @classmethod
    def from_neighbors(cls, adjacency: Sequence[Iterable[int]], check: bool = True) -> "Graph":
        rows = []
        for nbrs in adjacency:
            r = 0
            for u in nbrs:
                r |= 1 << u
            rows.append(r)
        return cls(len(rows), rows, check=check)

    # -- basic queries -----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def __len__(self) -> int:
        return self.order

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.order:
            raise GraphError(f"vertex {v!r} out of range for order {self.order}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def check_edge(self, u: int, v: int) -> None:
        self.check_vertex(u)
        self.check_vertex(v)
        if not self.adjacent(u, v):
            raise GraphError(f"({u},{v}) is not an edge")

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, r in enumerate(self.rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            for v in range(u + 1, self.order):
                if not (self.rows[u] >> v) & 1:
                    out.append((u, v))
        return out

    def mask_of(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def is_connected(self) -> bool:
        return kernels.is_connected_mask(self.rows, self.full_mask)

    def components(self) -> list[list[int]]:
        left = self.full_mask
        out = []
        while left:
            seen = left & -left
            frontier = seen
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.rows[v]
                nxt &= left & ~seen
                seen |= nxt
                frontier = nxt
            out.append(list(iter_bits(seen)))
            left &= ~seen
        return out

    # -- derived graphs ----------------------------------------------------

    def induced_mask(self, mask: int) -> tuple["Graph", list[int]]:
        """Subgraph induced by ``mask``; returns it with the index map new -> old."""
        vs = list(iter_bits(mask))
        return Graph(len(vs), kernels.subrows(self.rows, mask), check=False), vs

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        return self.induced_mask(self.mask_of(vertices))

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        return self.induced(vertices)[0]

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        return self.induced_mask(self.full_mask & ~self.mask_of(vertices))[0]

    def with_edge(self, u: int, v: int, present: bool = True) -> "Graph":
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows = list(self.rows)
        if present:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        else:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.order, rows, check=False)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """Append a new point ``order`` adjacent exactly to ``neighbors``."""
        m = self.mask_of(neighbors)
        n = self.order
        rows = [r | ((m >> v) & 1) << n for v, r in enumerate(self.rows)]
        rows.append(m)
        return Graph(n + 1, rows, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise GraphError("relabeling is not a permutation")
        rows = [0] * n
        for v, r in enumerate(self.rows):
            nr = 0
            for u in iter_bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(n, rows, check=False)

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.order, [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)], check=False)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.order, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


# -- neighborhoods and joins -------------------------------------------------

def rim(g: Graph, v: int) -> Graph:
    """Subgraph induced by the neighbors of ``v``."""
    g.check_vertex(v)
    return g.induced_mask(g.rows[v])[0]


def ball(g: Graph, v: int) -> Graph:
    g.check_vertex(v)
    return g.induced_mask(g.rows[v] | (1 << v))[0]


def edge_rim(g: Graph, u: int, v: int) -> Graph:
    """Subgraph induced by the common neighbors of the edge ``(u, v)``."""
    g.check_edge(u, v)
    return g.induced_mask(g.rows[u] & g.rows[v])[0]


def ball_union_mask(g: Graph, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        g.check_vertex(v)
        m |= g.rows[v] | (1 << v)
    return m


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Vertices of ``h`` are shifted to ``len(g)..len(g)+len(h)-1``.
    """
    n, m = g.order, h.order
    gmask = (1 << n) - 1
    hmask = ((1 << m) - 1) << n
    rows = [r | hmask for r in g.rows] + [(r << n) | gmask for r in h.rows]
    return Graph(n + m, rows, check=False)


def clique_census(g: Graph) -> list[int]:
    """Counts ``c_k`` of complete subgraphs with ``k`` points, ``k = 1..ω(g)``."""
    return kernels.clique_counts_mask(g.rows, g.full_mask)


def cliques(g: Graph, max_size: int | None = None) -> list[list[tuple[int, ...]]]:
    """All cliques grouped by size: ``out[k-1]`` lists the k-cliques as sorted tuples."""
    rows = g.rows
    out: list[list[tuple[int, ...]]] = []

    def grow(clique: tuple[int, ...], cand: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            c = clique + (v,)
            if len(out) < len(c):
                out.append([])
            out[len(c) - 1].append(c)
            if max_size is None or len(c) < max_size:
                nxt = cand & rows[v]
                if nxt:
                    grow(c, nxt)

    grow((), g.full_mask)
    for level in out:
        level.sort()
    return out


# -- canonical forms -----------------------------------------------------------

def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus ``order``: ``order[i]`` is the vertex at canonical position ``i``."""
    code, order = kernels.canonical_labeling(g.rows, g.order)
    return CanonicalForm(kernels.form_bytes(code, g.order)), list(order)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(kernels.canonical_key(g.rows, g.order))


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    perm = [0] * g.order
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A map ``phi`` with ``phi[v]`` in ``h`` for each ``v`` in ``g``, or None."""
    if g.order != h.order:
        return None
    fg, og = canonical_labeling(g)
    fh, oh = canonical_labeling(h)
    if fg != fh:
        return None
    phi = [0] * g.order
    for i in range(g.order):
        phi[og[i]] = oh[i]
    return phi


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.size == h.size and canonical_form(g) == canonical_form(h)


# -- named graphs ----------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def point() -> Graph:
    return empty(1)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 points")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(rim_points: int) -> Graph:
    """Cone over a cycle: hub 0 joined to the cycle ``1..rim_points``."""
    return join(point(), cycle(rim_points))


def octahedron() -> Graph:
    """K(2,2,2); antipodal pairs are (0,1), (2,3), (4,5)."""
    return Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if u // 2 != v // 2])


def cross_polytope(dim: int) -> Graph:
    """Minimal digital ``dim``-sphere on ``2*dim + 2`` points."""
    n = 2 * dim + 2
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if u // 2 != v // 2])


# -- text format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the line format ``p <n>`` followed by ``e <u> <v>`` lines."""
    order = None
    rows: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if order is None:
            if parts[0] != "p" or len(parts) != 2:
                raise ParseError(f"expected 'p <n>', got {line!r}", lineno)
            try:
                order = int(parts[1])
            except ValueError:
                raise ParseError(f"bad order {parts[1]!r}", lineno) from None
            if order < 0:
                raise ParseError("negative order", lineno)
            rows = [0] * order
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError(f"bad vertex id in {line!r}", lineno) from None
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError(f"vertex id out of range 0..{order - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        if (rows[u] >> v) & 1:
            warnings.warn(f"line {lineno}: duplicate edge ({u},{v})", stacklevel=2)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if order is None:
        raise ParseError("missing 'p <n>' line")
    return Graph(order, rows, check=False)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.order}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_graph(g))
