"""Contractible graphs, simple points, simple edges and simple subgraphs.

A one-point graph is contractible; a graph with at least two points is
contractible when some point has a contractible rim and deleting it leaves a
contractible graph.  The decision explores every choice of simple point
(there is no proof that a greedy choice always works), memoized by canonical
form.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .graph import Graph, GraphError, ball_union_mask
from .kernels import iter_bits


class ContractibilityCache:
    """Verdicts keyed by canonical form bytes.

    Plain dict writes are atomic under the GIL and every writer stores the
    same verdict for a given key, so concurrent use needs no locking.
    ``use_euler`` enables rejecting subgraphs whose Euler characteristic is
    not 1 before searching.
    """

    def __init__(self, use_euler: bool = True):
        self.table: dict[bytes, bool] = {}
        self.use_euler = use_euler

    def __len__(self) -> int:
        return len(self.table)

    def __contains__(self, key: bytes) -> bool:
        return key in self.table

    def clear(self) -> None:
        self.table.clear()


_default_lock = threading.Lock()
_default_cache: ContractibilityCache | None = None


def default_cache() -> ContractibilityCache:
    global _default_cache
    if _default_cache is None:
        with _default_lock:
            if _default_cache is None:
                _default_cache = ContractibilityCache()
    return _default_cache


def _resolve(cache: ContractibilityCache | None) -> ContractibilityCache:
    return default_cache() if cache is None else cache


def mask_contractible(rows, mask: int, cache: ContractibilityCache | None = None) -> bool:
    """Contractibility of the subgraph induced by ``mask`` in the graph given by ``rows``."""
    c = _resolve(cache)
    return kernels.contractible_mask(rows, mask, c.table, c.use_euler)


@dataclass
class ReductionTrace:
    """Simple-point deletions, in the source graph's labeling, ending at one point."""

    steps: list[int] = field(default_factory=list)

    def to_text(self) -> str:
        return "".join(f"DP {v}\n" for v in self.steps)

    @classmethod
    def from_text(cls, text: str) -> "ReductionTrace":
        steps = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            kind, _, arg = line.partition(" ")
            if kind != "DP":
                raise ValueError(f"unexpected reduction step {line!r}")
            steps.append(int(arg))
        return cls(steps)

    def replay(self, g: Graph, cache: ContractibilityCache | None = None) -> bool:
        """True iff every deletion is of a simple point and one point remains."""
        mask = g.full_mask
        for v in self.steps:
            if not (mask >> v) & 1:
                return False
            if not mask_contractible(g.rows, g.rows[v] & mask, cache):
                return False
            mask ^= 1 << v
        return mask.bit_count() == 1


def is_contractible(g: Graph, cache: ContractibilityCache | None = None, *, with_trace: bool = False):
    """Decide contractibility; with ``with_trace`` return ``(verdict, trace or None)``."""
    verdict = mask_contractible(g.rows, g.full_mask, cache)
    if not with_trace:
        return verdict
    return verdict, (reduction_trace(g, cache) if verdict else None)


def reduction_trace(g: Graph, cache: ContractibilityCache | None = None) -> ReductionTrace | None:
    """Deletions of simple points reaching one point, lowest admissible id first."""
    rows = g.rows
    mask = g.full_mask
    if not mask_contractible(rows, mask, cache):
        return None
    steps = []
    while mask.bit_count() > 1:
        for v in iter_bits(mask):
            rest = mask ^ (1 << v)
            if mask_contractible(rows, rows[v] & mask, cache) and mask_contractible(rows, rest, cache):
                steps.append(v)
                mask = rest
                break
        else:  # pragma: no cover - contradicts the verdict above
            raise RuntimeError("contractible graph without a contractible deletion")
    return ReductionTrace(steps)


def is_simple_point(g: Graph, v: int, cache: ContractibilityCache | None = None) -> bool:
    g.check_vertex(v)
    return mask_contractible(g.rows, g.rows[v], cache)


def is_simple_edge(g: Graph, u: int, v: int, cache: ContractibilityCache | None = None) -> bool:
    g.check_edge(u, v)
    return mask_contractible(g.rows, g.rows[u] & g.rows[v], cache)


def is_simple_subgraph(g: Graph, vertices: Iterable[int], cache: ContractibilityCache | None = None) -> bool:
    """True iff the union of the balls of ``vertices`` induces a contractible graph."""
    vertices = list(vertices)
    if not vertices:
        raise GraphError("a simple subgraph needs at least one point")
    return mask_contractible(g.rows, ball_union_mask(g, vertices), cache)


def attachable(g: Graph, vertices: Iterable[int], cache: ContractibilityCache | None = None) -> bool:
    """True iff ``vertices`` induce a contractible subgraph (a legal rim for a new point)."""
    return mask_contractible(g.rows, g.mask_of(vertices), cache)


def simple_points(g: Graph, cache: ContractibilityCache | None = None) -> list[int]:
    return [v for v in range(g.order) if mask_contractible(g.rows, g.rows[v], cache)]


def simple_edges(g: Graph, cache: ContractibilityCache | None = None) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if mask_contractible(g.rows, g.rows[u] & g.rows[v], cache)]


def greedy_reduces(g: Graph, cache: ContractibilityCache | None = None) -> bool:
    """Whether repeatedly deleting the lowest-id simple point reaches one point."""
    rows = g.rows
    mask = g.full_mask
    while mask.bit_count() > 1:
        for v in iter_bits(mask):
            if mask_contractible(rows, rows[v] & mask, cache):
                mask ^= 1 << v
                break
        else:
            return False
    return mask.bit_count() == 1
