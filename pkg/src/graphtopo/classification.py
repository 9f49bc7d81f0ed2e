"""Enumeration of compressed graphs and their grouping into homotopy classes.

Every class is represented by its basic graph: the member with the fewest
points, then the fewest edges, then the smallest canonical form.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .contractibility import ContractibilityCache
from .equivalence import (
    DEFAULT_ATTACH_BOUND,
    DEFAULT_DEPTH,
    EQUIVALENT,
    UNKNOWN,
    compare_profiles,
    homotopy_equivalent,
)
from .graph import CanonicalForm, Graph, GraphError, canonical_form, canonical_graph, is_isomorphic
from .invariants import InvariantProfile, homology
from .transforms import Trace, compress, is_compressed, replay, validate

MAX_ENUMERATION_ORDER = 8
BRUTE_FORCE_ORDER = 6
CLASSIFY_BUDGET = 20_000

# published census of basic graphs by number of points, for comparison
REFERENCE_CLASS_COUNTS = {1: 1, 2: 0, 3: 0, 4: 1, 5: 1, 6: 3}


def _graph_from_bits(n: int, pairs, bits: int) -> Graph:
    rows = [0] * n
    for i, (u, v) in enumerate(pairs):
        if (bits >> i) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def _brute_force(n: int) -> list[Graph]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen: dict[CanonicalForm, Graph] = {}
    for bits in range(1 << len(pairs)):
        g = _graph_from_bits(n, pairs, bits)
        if not g.is_connected():
            continue
        k = canonical_form(g)
        if k not in seen:
            seen[k] = canonical_graph(g)
    return [seen[k] for k in sorted(seen)]


def _augment(smaller: list[Graph], n: int) -> list[Graph]:
    # every connected graph has a non-cut point; deleting it gives a connected graph
    seen: dict[CanonicalForm, Graph] = {}
    for h in smaller:
        for nbrs in range(1, 1 << (n - 1)):
            g = Graph(n, list(_extend_rows(h.rows, nbrs, n - 1)), check=False)
            k = canonical_form(g)
            if k not in seen:
                seen[k] = canonical_graph(g)
    return [seen[k] for k in sorted(seen)]


def _extend_rows(rows, nbrs: int, m: int):
    for v in range(m):
        yield rows[v] | (((nbrs >> v) & 1) << m)
    yield nbrs


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    if n <= BRUTE_FORCE_ORDER:
        return tuple(_brute_force(n))
    return tuple(_augment(list(_connected(n - 1)), n))


def enumerate_connected(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of connected graphs."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration supports 1..{MAX_ENUMERATION_ORDER} points, got {n}")
    return list(_connected(n))


def _compressed_flag(g: Graph) -> bool:
    return is_compressed(g)


def enumerate_compressed(n: int, threads: int = 1, cache: ContractibilityCache | None = None) -> list[Graph]:
    """Connected compressed graphs with ``n`` points, in canonical-form order."""
    graphs = enumerate_connected(n)
    if threads > 1 and len(graphs) > 256:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            flags = list(ex.map(_compressed_flag, graphs, chunksize=64))
    else:
        flags = [is_compressed(g, cache) for g in graphs]
    return [g for g, f in zip(graphs, flags) if f]


# -- classes -------------------------------------------------------------------

@dataclass
class ClassEntry:
    index: int
    basic: Graph
    profile: InvariantProfile
    members: list[Graph] = field(default_factory=list)
    witnesses: list[Trace] = field(default_factory=list)  # basic -> member

    @property
    def complexity(self) -> int:
        return self.basic.order

    @property
    def weight(self) -> int:
        return self.basic.size


@dataclass
class ClassTable:
    max_order: int
    classes: list[ClassEntry]
    compressed_counts: dict[int, int]
    unresolved: list[tuple[Graph, Graph]] = field(default_factory=list)

    def counts_by_order(self) -> dict[int, int]:
        out = {k: 0 for k in range(1, self.max_order + 1)}
        for c in self.classes:
            out[c.complexity] += 1
        return out

    def summary_lines(self) -> list[str]:
        return [f"N={k}: {c} classes" for k, c in self.counts_by_order().items()]

    def class_of(self, g: Graph) -> ClassEntry | None:
        key = canonical_form(g)
        for c in self.classes:
            if any(canonical_form(m) == key for m in c.members):
                return c
        return None

    def to_text(self) -> str:
        lines = self.summary_lines()
        lines += [f"compressed N={k}: {c} graphs" for k, c in sorted(self.compressed_counts.items())]
        lines.append("")
        lines.append("class complexity weight members profile edges")
        for c in self.classes:
            edges = " ".join(f"{u}-{v}" for u, v in c.basic.edges())
            lines.append(
                f"{c.index} {c.complexity} {c.weight} {len(c.members)} {c.profile.to_text()} {edges}"
            )
        if self.unresolved:
            lines.append("")
            lines.append(f"unresolved pairs: {len(self.unresolved)}")
            for g, h in self.unresolved:
                ge = " ".join(f"{u}-{v}" for u, v in g.edges())
                he = " ".join(f"{u}-{v}" for u, v in h.edges())
                lines.append(f"  [{g.order}] {ge}  ?  [{h.order}] {he}")
        return "\n".join(lines) + "\n"

    def compare_reference(self) -> list[str]:
        """Differences between the computed class counts and the published census."""
        mine = self.counts_by_order()
        out = []
        for k, ref in sorted(REFERENCE_CLASS_COUNTS.items()):
            if k > self.max_order:
                continue
            if mine[k] != ref:
                out.append(f"N={k}: computed {mine[k]} classes, reference lists {ref}")
        return out


def classify(
    max_order: int,
    budget: int = CLASSIFY_BUDGET,
    depth: int = DEFAULT_DEPTH,
    attach_bound: int = DEFAULT_ATTACH_BOUND,
    threads: int = 1,
    cache: ContractibilityCache | None = None,
) -> ClassTable:
    """Group all compressed graphs with at most ``max_order`` points into classes.

    Candidates are visited by (points, edges, canonical form), so the first
    member of a class is its basic graph.  A candidate joins the first class
    whose basic graph it is proved equivalent to; pairs the search could not
    settle are kept in ``unresolved``.  Output does not depend on ``threads``.
    """
    if threads <= 0:
        threads = os.cpu_count() or 1
    candidates: list[Graph] = []
    counts = {}
    for n in range(1, max_order + 1):
        found = enumerate_compressed(n, threads, cache)
        counts[n] = len(found)
        candidates.extend(found)
    candidates.sort(key=lambda g: (g.order, g.size, canonical_form(g)))
    classes: list[ClassEntry] = []
    unresolved = []
    for g in candidates:
        prof = homology(g)
        placed = False
        for c in classes:
            if compare_profiles(prof, c.profile) is not None:
                continue
            v = homotopy_equivalent(c.basic, g, budget, depth, attach_bound, cache=cache)
            if v.outcome == EQUIVALENT:
                ok, _ = validate(v.trace, cache)
                if not ok or not is_isomorphic(replay(v.trace, cache), g):  # pragma: no cover
                    raise RuntimeError("equivalence witness failed validation")
                c.members.append(g)
                c.witnesses.append(v.trace)
                placed = True
                break
            if v.outcome == UNKNOWN:
                unresolved.append((c.basic, g))
        if not placed:
            classes.append(ClassEntry(len(classes), g, prof, [g], [Trace(g, [])]))
    return ClassTable(max_order, classes, counts, unresolved)


@lru_cache(maxsize=8)
def _table(max_order: int) -> ClassTable:
    return classify(max_order)


@dataclass
class BasicResult:
    basic: Graph
    complexity: int
    weight: int
    compressed: Graph


def basic_graph_of(h: Graph, table: ClassTable | None = None, budget: int = CLASSIFY_BUDGET, cache=None):
    """Basic graph of the class of a connected graph, or None when undetermined.

    None means the compressed form is larger than the table covers or no class
    could be proved equivalent within the budget.
    """
    if h.order == 0 or not h.is_connected():
        raise GraphError("basic graphs are defined for connected graphs")
    c, _ = compress(h, cache=cache)
    if table is None:
        if c.order > BRUTE_FORCE_ORDER + 2:
            return None
        table = _table(max(c.order, 1))
    entry = table.class_of(c) if c.order <= table.max_order else None
    if entry is None:
        prof = homology(c)
        for cand in table.classes:
            if compare_profiles(prof, cand.profile) is not None:
                continue
            if homotopy_equivalent(c, cand.basic, budget, cache=cache).outcome == EQUIVALENT:
                entry = cand
                break
    if entry is None:
        return None
    return BasicResult(entry.basic, entry.complexity, entry.weight, c)
