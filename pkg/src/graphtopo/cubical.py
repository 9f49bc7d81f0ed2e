"""Digital models of continuous shapes: grid cubes meeting a shape and their intersection graph."""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .contractibility import ContractibilityCache
from .graph import CanonicalForm, Graph, GraphError, canonical_form, is_isomorphic
from .invariants import InvariantProfile, homology
from .transforms import compress

KINDS = (
    "point",
    "segment",
    "polyline",
    "circle",
    "disk",
    "annulus",
    "sphere",
    "ball",
    "torus-surface",
    "solid-torus",
)


class ShapeError(GraphError):
    pass


def _vec(v, name: str) -> tuple[float, ...]:
    out = tuple(float(x) for x in v)
    if len(out) not in (2, 3):
        raise ShapeError(f"{name} must have 2 or 3 coordinates, got {len(out)}")
    return out


@dataclass(frozen=True)
class Shape:
    kind: str
    params: dict = field(default_factory=dict, hash=False, compare=True)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ShapeError(f"unknown shape kind {self.kind!r}")
        p = dict(self.params)
        k = self.kind
        if k in ("circle", "disk"):
            p.setdefault("center", (0.0, 0.0))
        elif k in ("sphere", "ball", "torus-surface", "solid-torus"):
            p.setdefault("center", (0.0, 0.0, 0.0))
        elif k == "annulus":
            p.setdefault("center", (0.0, 0.0))
        elif k == "point":
            p.setdefault("center", (0.0, 0.0))
        if "center" in p:
            p["center"] = _vec(p["center"], "center")
        if k in ("circle", "disk") and len(p["center"]) != 2:
            raise ShapeError(f"{k} is planar")
        if k in ("torus-surface", "solid-torus") and len(p["center"]) != 3:
            raise ShapeError(f"{k} lives in 3 dimensions")
        if k in ("circle", "disk", "sphere", "ball"):
            r = float(p.get("radius", 1.0))
            if not r > 0:
                raise ShapeError("radius must be positive")
            p["radius"] = r
        if k == "annulus":
            a, b = float(p.get("inner", 0.5)), float(p.get("outer", 1.0))
            if not 0 < a < b:
                raise ShapeError("annulus needs 0 < inner < outer")
            p["inner"], p["outer"] = a, b
        if k in ("torus-surface", "solid-torus"):
            big, small = float(p.get("R", 2.0)), float(p.get("r", 0.5))
            if not big > small > 0:
                raise ShapeError("torus needs R > r > 0")
            p["R"], p["r"] = big, small
            s = int(p.get("samples", 0))
            if s < 0 or s == 1:
                raise ShapeError("samples must be 0 (exact) or at least 2")
            p["samples"] = s
        if k == "segment":
            a, b = _vec(p["a"], "a"), _vec(p["b"], "b")
            if len(a) != len(b):
                raise ShapeError("segment endpoints differ in dimension")
            p["a"], p["b"] = a, b
        if k == "polyline":
            pts = [_vec(q, "point") for q in p.get("points", ())]
            if len(pts) < 2 or len({len(q) for q in pts}) != 1:
                raise ShapeError("polyline needs at least two points of equal dimension")
            p["points"] = tuple(pts)
        object.__setattr__(self, "params", p)

    @property
    def dim(self) -> int:
        p = self.params
        if self.kind == "segment":
            return len(p["a"])
        if self.kind == "polyline":
            return len(p["points"][0])
        return len(p["center"])

    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        p, k = self.params, self.kind
        if k in ("segment", "polyline"):
            pts = np.array([p["a"], p["b"]] if k == "segment" else p["points"])
            return pts.min(axis=0), pts.max(axis=0)
        c = np.array(p["center"])
        if k == "point":
            return c, c
        if k in ("circle", "disk", "sphere", "ball"):
            return c - p["radius"], c + p["radius"]
        if k == "annulus":
            return c - p["outer"], c + p["outer"]
        ext = np.array([p["R"] + p["r"], p["R"] + p["r"], p["r"]])
        return c - ext, c + ext

    def __repr__(self) -> str:
        return f"Shape({self.kind!r}, {self.params!r})"


def circle(radius=1.0, center=(0.0, 0.0)) -> Shape:
    return Shape("circle", {"radius": radius, "center": center})


def disk(radius=1.0, center=(0.0, 0.0)) -> Shape:
    return Shape("disk", {"radius": radius, "center": center})


def sphere(radius=1.0, center=(0.0, 0.0, 0.0)) -> Shape:
    return Shape("sphere", {"radius": radius, "center": center})


def ball(radius=1.0, center=(0.0, 0.0, 0.0)) -> Shape:
    return Shape("ball", {"radius": radius, "center": center})


def torus_surface(R=2.0, r=0.5, center=(0.0, 0.0, 0.0), samples=0) -> Shape:
    return Shape("torus-surface", {"R": R, "r": r, "center": center, "samples": samples})


def solid_torus(R=2.0, r=0.5, center=(0.0, 0.0, 0.0), samples=0) -> Shape:
    return Shape("solid-torus", {"R": R, "r": r, "center": center, "samples": samples})


def twisted_curve(turns: float = 1.5, radius: float = 1.0, pitch: float = 0.6, pieces: int = 48) -> Shape:
    """An open helical arc, as a polyline."""
    pts = []
    for i in range(pieces + 1):
        t = 2 * math.pi * turns * i / pieces
        pts.append((radius * math.cos(t), radius * math.sin(t), pitch * t / (2 * math.pi)))
    return Shape("polyline", {"points": pts})


# -- cell sets -------------------------------------------------------------------

@dataclass
class CellSet:
    dim: int
    cell_size: float
    cells: list[tuple[int, ...]]  # sorted lexicographically

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ShapeError("cell size must be positive")
        for c in self.cells:
            if len(c) != self.dim:
                raise ShapeError(f"cell {c} does not have {self.dim} coordinates")
        self.cells = sorted(set(map(tuple, self.cells)))

    def __len__(self) -> int:
        return len(self.cells)

    def to_text(self) -> str:
        return "".join(" ".join(map(str, c)) + "\n" for c in self.cells)


def _box_point_dist2(lo, hi, c):
    """Squared min and max distance from each box to point ``c`` (boxes along axis 0)."""
    near = np.maximum(np.maximum(lo - c, 0.0), c - hi)
    far = np.maximum(np.abs(lo - c), np.abs(hi - c))
    return (near**2).sum(axis=1), (far**2).sum(axis=1)


def _torus_range(lo, hi, c, big):
    """Range of (rho - R)^2 + z^2 over each box, rho the distance to the z axis."""
    lo2, hi2 = lo[:, :2] - c[:2], hi[:, :2] - c[:2]
    near = np.maximum(np.maximum(lo2, 0.0), -hi2)
    far = np.maximum(np.abs(lo2), np.abs(hi2))
    rmin = np.sqrt((near**2).sum(axis=1))
    rmax = np.sqrt((far**2).sum(axis=1))
    inside = (rmin <= big) & (big <= rmax)
    dmin = np.where(inside, 0.0, np.minimum((rmin - big) ** 2, (rmax - big) ** 2))
    dmax = np.maximum((rmin - big) ** 2, (rmax - big) ** 2)
    zl, zh = lo[:, 2] - c[2], hi[:, 2] - c[2]
    zmin = np.where((zl <= 0) & (0 <= zh), 0.0, np.minimum(zl**2, zh**2))
    zmax = np.maximum(zl**2, zh**2)
    return dmin + zmin, dmax + zmax


def _torus_samples(lo, hi, c, big, small, k):
    # values of f - r^2 on a k-per-axis lattice in each box
    t = np.linspace(0.0, 1.0, k)
    grids = np.meshgrid(t, t, t, indexing="ij")
    frac = np.stack([g.ravel() for g in grids], axis=1)  # k^3 x 3
    pts = lo[:, None, :] + (hi - lo)[:, None, :] * frac[None, :, :] - c
    rho = np.sqrt(pts[..., 0] ** 2 + pts[..., 1] ** 2)
    f = (rho - big) ** 2 + pts[..., 2] ** 2 - small**2
    return f.min(axis=1), f.max(axis=1)


def _segment_hits(lo, hi, a, b):
    """Liang-Barsky: does the closed segment a-b meet each closed box."""
    a, b = np.asarray(a), np.asarray(b)
    d = b - a
    t0 = np.zeros(len(lo))
    t1 = np.ones(len(lo))
    ok = np.ones(len(lo), dtype=bool)
    for i in range(len(a)):
        if d[i] == 0:
            ok &= (lo[:, i] <= a[i]) & (a[i] <= hi[:, i])
            continue
        u = (lo[:, i] - a[i]) / d[i]
        v = (hi[:, i] - a[i]) / d[i]
        t0 = np.maximum(t0, np.minimum(u, v))
        t1 = np.minimum(t1, np.maximum(u, v))
    return ok & (t0 <= t1)


def cell_hits(shape: Shape, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Boolean mask of boxes ``[lo[i], hi[i]]`` whose closed box meets ``shape``."""
    p, k = shape.params, shape.kind
    if k == "segment":
        return _segment_hits(lo, hi, p["a"], p["b"])
    if k == "polyline":
        pts = p["points"]
        hit = np.zeros(len(lo), dtype=bool)
        for a, b in zip(pts, pts[1:]):
            hit |= _segment_hits(lo, hi, a, b)
        return hit
    c = np.array(p["center"])
    if k == "point":
        return _box_point_dist2(lo, hi, c)[0] == 0
    if k in ("torus-surface", "solid-torus"):
        big, small, s = p["R"], p["r"], p["samples"]
        if s:
            fmin, fmax = _torus_samples(lo, hi, c, big, small, s)
            if k == "solid-torus":
                return fmin <= 0
            return (fmin <= 0) & (fmax >= 0)
        fmin, fmax = _torus_range(lo, hi, c, big)
        r2 = small * small
        if k == "solid-torus":
            return fmin <= r2
        return (fmin <= r2) & (r2 <= fmax)
    dmin, dmax = _box_point_dist2(lo, hi, c)
    if k in ("circle", "sphere"):
        r2 = p["radius"] ** 2
        return (dmin <= r2) & (r2 <= dmax)
    if k in ("disk", "ball"):
        return dmin <= p["radius"] ** 2
    if k == "annulus":
        a2, b2 = p["inner"] ** 2, p["outer"] ** 2
        return (dmin <= b2) & (dmax >= a2)
    raise ShapeError(f"unknown shape kind {k!r}")  # pragma: no cover


def default_bbox(shape: Shape, L: float) -> tuple[tuple[float, ...], tuple[float, ...]]:
    lo, hi = shape.bounds()
    return tuple(lo - 2 * L), tuple(hi + 2 * L)


def rasterize(shape: Shape, L: float, bbox=None, threads: int = 1, chunk: int = 1 << 16) -> CellSet:
    """All grid cubes of side ``L`` within ``bbox`` meeting ``shape``.

    Cube ``(x_1..x_d)`` is ``[L*x_i, L*(x_i+1)]`` on each axis.  ``bbox``
    defaults to the shape's bounds grown by ``2L`` on every side.  Chunks of
    cells are tested on ``threads`` workers; the result does not depend on it.
    """
    if not L > 0:
        raise ShapeError("cell size must be positive")
    if bbox is None:
        bbox = default_bbox(shape, L)
    blo, bhi = np.asarray(bbox[0], float), np.asarray(bbox[1], float)
    if len(blo) != shape.dim or len(bhi) != shape.dim:
        raise ShapeError("bounding box dimension does not match the shape")
    slo, shi = shape.bounds()
    if np.any(blo > slo - L) or np.any(bhi < shi + L):
        raise ShapeError("bounding box must enclose the shape with margin at least L")
    first = np.floor(blo / L).astype(np.int64)
    last = np.ceil(bhi / L).astype(np.int64) - 1
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(first, last)]
    grids = np.meshgrid(*axes, indexing="ij")
    idx = np.stack([g.ravel() for g in grids], axis=1)  # lexicographic order
    keep = np.zeros(len(idx), dtype=bool)

    def work(s: int) -> None:
        lo = idx[s : s + chunk] * L
        keep[s : s + chunk] = cell_hits(shape, lo, lo + L)

    starts = range(0, len(idx), chunk)
    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            list(ex.map(work, starts))
    else:
        for s in starts:
            work(s)
    cells = [tuple(int(x) for x in row) for row in idx[keep]]
    return CellSet(shape.dim, float(L), cells)


def intersection_graph(cs: CellSet) -> Graph:
    """Closed cubes meet iff every coordinate differs by at most one."""
    index = {c: i for i, c in enumerate(cs.cells)}
    offsets = [o for o in product((-1, 0, 1), repeat=cs.dim) if any(o)]
    adj = []
    for c in cs.cells:
        nb = []
        for o in offsets:
            j = index.get(tuple(x + d for x, d in zip(c, o)))
            if j is not None:
                nb.append(j)
        adj.append(nb)
    return Graph.from_neighbors(adj, check=False)


def cells_intersect(a: Sequence[int], b: Sequence[int], L: float = 1.0) -> bool:
    """Direct closed-box intersection test, independent of the index rule."""
    return all(max(x * L, y * L) <= min((x + 1) * L, (y + 1) * L) for x, y in zip(a, b))


# -- experiments -------------------------------------------------------------------

@dataclass
class ExperimentReport:
    shape: Shape
    cell_size: float
    cells: int
    graph_order: int
    graph_size: int
    compressed: Graph
    profile: InvariantProfile
    basic: CanonicalForm
    matches_expected: bool | None
    timings: dict[str, float]

    def to_text(self) -> str:
        lines = [
            self.profile.to_text(),
            f"basic={self.basic.hex()}",
            f"cells={self.cells} points={self.graph_order} edges={self.graph_size} "
            f"compressed_points={self.compressed.order} compressed_edges={self.compressed.size}",
        ]
        if self.matches_expected is not None:
            lines.append(f"expected={'yes' if self.matches_expected else 'no'}")
        return "\n".join(lines) + "\n"


def run_experiment(
    shape: Shape,
    L: float,
    bbox=None,
    expected: Graph | None = None,
    subgraph_cap: int | None = None,
    cache: ContractibilityCache | None = None,
    threads: int = 1,
) -> ExperimentReport:
    """Rasterize, build the intersection graph, compress, and compute invariants."""
    t = {}
    t0 = time.perf_counter()
    cs = rasterize(shape, L, bbox, threads=threads)
    t["rasterize"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    g = intersection_graph(cs)
    t["graph"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    h, _ = compress(g, subgraph_cap, cache)
    t["compress"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    prof = homology(h)
    t["invariants"] = time.perf_counter() - t0
    match = None if expected is None else is_isomorphic(h, expected)
    return ExperimentReport(shape, L, len(cs), g.order, g.size, h, prof, canonical_form(h), match, t)


# -- shape spec files ------------------------------------------------------------

def _parse_value(text: str):
    parts = [x for x in text.replace(",", " ").split()]
    vals = [float(x) for x in parts]
    return vals[0] if len(vals) == 1 else tuple(vals)


def parse_shape(text: str) -> tuple[Shape, dict]:
    """Parse ``shape <kind>`` and ``param <name> <value>`` lines.

    Vector values are comma separated.  Repeated ``param point`` lines build a
    polyline.  ``param L`` is returned among the extras rather than the shape.
    """
    kind = None
    params: dict = {}
    extras: dict = {}
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "shape":
            if kind is not None:
                raise ShapeError(f"line {lineno}: second shape line")
            kind = rest.strip()
        elif head == "param":
            name, _, value = rest.strip().partition(" ")
            if not value:
                raise ShapeError(f"line {lineno}: param {name!r} has no value")
            try:
                v = _parse_value(value)
            except ValueError:
                raise ShapeError(f"line {lineno}: bad value {value!r}") from None
            if name == "point":
                points.append(v)
            elif name in ("L", "cell_size"):
                extras["L"] = float(v)
            elif name == "samples":
                params["samples"] = int(v)
            else:
                params[name] = v
        else:
            raise ShapeError(f"line {lineno}: expected 'shape' or 'param', got {head!r}")
    if kind is None:
        raise ShapeError("missing shape line")
    if points:
        params["points"] = points
    return Shape(kind, params), extras


def read_shape(path) -> tuple[Shape, dict]:
    with open(path) as fh:
        return parse_shape(fh.read())
