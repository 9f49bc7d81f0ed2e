"""Homotopy invariants of graphs and the structure of simple closed curves.

Euler characteristic and integer homology are those of the clique complex:
every k-clique of the graph is a (k-1)-simplex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .contractibility import ContractibilityCache, mask_contractible
from .graph import Graph, GraphError, clique_census, cliques
from .homology import chain_homology
from .kernels import iter_bits

DEFAULT_MAX_LEN = 12
DEFAULT_MAX_COUNT = 10**5
DEFAULT_BUDGET = 10**5


@dataclass(frozen=True)
class InvariantProfile:
    euler: int
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def normalized(self) -> "InvariantProfile":
        """Drop trailing dimensions with zero Betti number and no torsion."""
        b, t = list(self.betti), list(self.torsion)
        while len(b) > 1 and b[-1] == 0 and not t[-1]:
            b.pop()
            t.pop()
        return InvariantProfile(self.euler, tuple(b), tuple(t))

    def equivalent_to(self, other: "InvariantProfile") -> bool:
        return self.normalized() == other.normalized()

    def to_text(self) -> str:
        betti = ",".join(map(str, self.betti))
        torsion = ",".join("[" + ",".join(map(str, t)) + "]" for t in self.torsion)
        return f"chi={self.euler} betti=[{betti}] torsion=[{torsion}]"

    @classmethod
    def from_text(cls, text: str) -> "InvariantProfile":
        m = re.fullmatch(r"\s*chi=(-?\d+) betti=\[([\d,]*)\] torsion=\[((?:\[[\d,]*\],?)*)\]\s*", text)
        if not m:
            raise ValueError(f"malformed invariant profile {text!r}")
        betti = tuple(int(x) for x in m.group(2).split(",") if x)
        torsion = tuple(
            tuple(int(x) for x in part.split(",") if x) for part in re.findall(r"\[([\d,]*)\]", m.group(3))
        )
        return cls(int(m.group(1)), betti, torsion)

    def __str__(self) -> str:
        return self.to_text()


def euler_characteristic(g: Graph) -> int:
    return sum(c if k % 2 == 0 else -c for k, c in enumerate(clique_census(g)))


def homology(g: Graph, max_dim: int | None = None) -> InvariantProfile:
    """Integer homology of the clique complex up to ``max_dim`` (default: all)."""
    limit = None if max_dim is None else max_dim + 2
    simplices = cliques(g, limit)
    betti, torsion = chain_homology(simplices, max_dim)
    if not betti:
        return InvariantProfile(0, (), ())
    if max_dim is None:
        chi = sum(len(level) if k % 2 == 0 else -len(level) for k, level in enumerate(simplices))
    else:
        chi = euler_characteristic(g)
    return InvariantProfile(chi, tuple(betti), tuple(tuple(t) for t in torsion))


invariant_profile = homology


# -- simple closed curves ------------------------------------------------------

@dataclass(frozen=True)
class SimpleClosedCurve:
    """Induced cycle of length at least 4, starting at its smallest point."""

    points: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.points)

    def mask(self) -> int:
        m = 0
        for v in self.points:
            m |= 1 << v
        return m


def is_simple_closed_curve(g: Graph, points: Sequence[int]) -> bool:
    n = len(points)
    if n < 4 or len(set(points)) != n:
        return False
    for i, v in enumerate(points):
        if not 0 <= v < g.order:
            return False
        for j in range(i + 1, n):
            consecutive = j == i + 1 or (i == 0 and j == n - 1)
            if g.adjacent(v, points[j]) != consecutive:
                return False
    return True


def enumerate_curves(
    g: Graph, max_len: int = DEFAULT_MAX_LEN, max_count: int = DEFAULT_MAX_COUNT
) -> tuple[list[SimpleClosedCurve], bool]:
    """Induced cycles of length 4..max_len, each once up to rotation and reflection.

    The flag is False when the enumeration was cut short by either bound, so
    absent curves cannot be ruled out.
    """
    rows = g.rows
    found: list[SimpleClosedCurve] = []
    complete = True

    class _Full(Exception):
        pass

    def extend(path: list[int], inner: int) -> None:
        # inner: mask of path[1:-1]
        nonlocal complete
        s, last = path[0], path[-1]
        cand = rows[last] & ~((1 << (s + 1)) - 1)
        for w in iter_bits(cand):
            if w in path or rows[w] & inner:
                continue
            if (rows[w] >> s) & 1:
                if len(path) >= 3 and path[1] < w:
                    if len(found) >= max_count:
                        complete = False
                        raise _Full
                    found.append(SimpleClosedCurve(tuple(path + [w])))
                continue
            if len(path) + 1 >= max_len:
                complete = False
                continue
            extend(path + [w], inner | (1 << last))

    try:
        for s in range(g.order):
            for w in iter_bits(rows[s] >> (s + 1)):
                extend([s, s + 1 + w], 0)
    except _Full:
        pass
    found.sort(key=lambda c: (len(c), c.points))
    return found, complete


def simple_closed_curves(
    g: Graph, max_len: int = DEFAULT_MAX_LEN, max_count: int = DEFAULT_MAX_COUNT
) -> list[SimpleClosedCurve]:
    return enumerate_curves(g, max_len, max_count)[0]


# -- simple connectivity -------------------------------------------------------

YES, NO, UNKNOWN = "yes", "no", "unknown"


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.spent = 0

    def take(self) -> bool:
        if self.spent >= self.limit:
            return False
        self.spent += 1
        return True


def _contractible_superset(g: Graph, base: int, budget: _Budget, cache) -> tuple[str, int | None]:
    """Smallest-first search for a contractible induced subgraph containing ``base``."""
    others = [v for v in range(g.order) if not (base >> v) & 1]
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            if not budget.take():
                return UNKNOWN, None
            m = base
            for v in extra:
                m |= 1 << v
            if mask_contractible(g.rows, m, cache):
                return YES, m
    return NO, None


def is_simply_connected(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    max_len: int = DEFAULT_MAX_LEN,
    max_count: int = DEFAULT_MAX_COUNT,
    cache: ContractibilityCache | None = None,
) -> str:
    """``"yes"``, ``"no"`` or ``"unknown"`` (a bound or the budget ran out)."""
    if g.order == 0 or not g.is_connected():
        raise GraphError("simple connectivity is defined for connected graphs")
    curves, complete = enumerate_curves(g, max_len, max_count)
    b = _Budget(budget)
    for curve in curves:
        verdict, _ = _contractible_superset(g, curve.mask(), b, cache)
        if verdict != YES:
            return verdict
    return YES if complete else UNKNOWN


@dataclass
class Hull:
    curve: tuple[int, ...]
    vertices: list[int]
    graph: Graph
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())


def hull_conditions(g: Graph, curve: Sequence[int], vertices: Iterable[int], cache=None) -> dict[str, bool]:
    """The four structural conditions on a contractible hull of ``curve``."""
    hmask = g.mask_of(vertices)
    lmask = g.mask_of(curve)
    rows = g.rows
    outside = hmask & ~lmask
    return {
        "contractible": mask_contractible(rows, hmask, cache),
        "contains_curve": lmask & ~hmask == 0,
        "curve_points_simple": all(mask_contractible(rows, rows[v] & hmask, cache) for v in iter_bits(lmask)),
        "other_points_not_simple": not any(
            mask_contractible(rows, rows[u] & hmask, cache) for u in iter_bits(outside)
        ),
    }


def contractible_hull(
    g: Graph,
    curve: Sequence[int],
    budget: int = DEFAULT_BUDGET,
    cache: ContractibilityCache | None = None,
) -> Hull | None:
    """Contractible subgraph around ``curve`` with every removable outside point removed.

    Finds the smallest contractible induced subgraph containing the curve,
    then deletes simple points off the curve (lowest id first, only while the
    remainder stays contractible).  None when no contractible superset exists
    or the budget runs out.
    """
    curve = tuple(curve)
    if not is_simple_closed_curve(g, curve):
        raise GraphError(f"{list(curve)} is not a simple closed curve")
    lmask = g.mask_of(curve)
    verdict, mask = _contractible_superset(g, lmask, _Budget(budget), cache)
    if verdict != YES:
        return None
    rows = g.rows
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask & ~lmask):
            rest = mask ^ (1 << v)
            if mask_contractible(rows, rows[v] & mask, cache) and mask_contractible(rows, rest, cache):
                mask = rest
                changed = True
                break
    vertices = list(iter_bits(mask))
    return Hull(curve, vertices, g.induced_mask(mask)[0], hull_conditions(g, curve, vertices, cache))
