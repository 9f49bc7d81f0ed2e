"""Integer homology of clique complexes by sparse elimination."""

from __future__ import annotations

from collections import defaultdict
from math import gcd
from typing import Sequence


def boundary_columns(faces: Sequence[tuple[int, ...]], simplices: Sequence[tuple[int, ...]]) -> list[dict[int, int]]:
    """Sparse columns of the boundary map from ``simplices`` to ``faces``.

    Simplices are sorted vertex tuples; dropping the ``i``-th vertex carries
    sign ``(-1)**i``.
    """
    index = {f: i for i, f in enumerate(faces)}
    cols = []
    for s in simplices:
        col = {}
        for i in range(len(s)):
            col[index[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols


def diagonalize(columns: Sequence[dict[int, int]]) -> list[int]:
    """Nonzero diagonal entries (absolute values) of an integer diagonal form.

    Row and column operations over the integers, pivoting on the entry of
    least absolute value.  The multiset of entries determines rank and, after
    :func:`invariant_factors`, the torsion.
    """
    cols: dict[int, dict[int, int]] = {j: dict(c) for j, c in enumerate(columns) if c}
    rows: dict[int, set[int]] = defaultdict(set)
    for j, c in cols.items():
        for i in c:
            rows[i].add(j)

    def set_entry(i: int, j: int, v: int) -> None:
        if v:
            cols[j][i] = v
            rows[i].add(j)
        else:
            cols[j].pop(i, None)
            rows[i].discard(j)

    def pick() -> tuple[int, int, int]:
        best = None
        for j in sorted(cols):
            for i, v in cols[j].items():
                a = abs(v)
                if best is None or a < best[2] or (a == best[2] and (j, i) < (best[1], best[0])):
                    best = (i, j, a)
            if best is not None and best[2] == 1:
                break
        i, j, _ = best
        return i, j, cols[j][i]

    diag = []
    while cols:
        i, j, p = pick()
        while True:
            moved = False
            for r in sorted(cols[j]):
                if r == i:
                    continue
                q = cols[j][r] // p
                for c in list(rows[i]):
                    set_entry(r, c, cols[c].get(r, 0) - q * cols[c][i])
                rem = cols[j].get(r, 0)
                if rem:
                    i, p = r, rem
                    moved = True
                    break
            if moved:
                continue
            for c in sorted(rows[i]):
                if c == j:
                    continue
                q = cols[c][i] // p
                set_entry(i, c, cols[c][i] - q * p)
                rem = cols[c].get(i, 0)
                if rem:
                    j, p = c, rem
                    moved = True
                    break
            if not moved:
                break
        diag.append(abs(p))
        for c in list(rows[i]):
            cols[c].pop(i, None)
        del rows[i]
        del cols[j]
        for c in [c for c, col in cols.items() if not col]:
            del cols[c]
    return diag


def invariant_factors(diag: Sequence[int]) -> list[int]:
    """Normalize diagonal entries into a divisibility chain ``d1 | d2 | ...``."""
    a = sorted(diag)
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(a[i], a[j])
            if g != a[i]:
                a[i], a[j] = g, a[i] * a[j] // g
    return a


def chain_homology(simplices: Sequence[Sequence[tuple[int, ...]]], max_dim: int | None = None):
    """Betti numbers and torsion of ``simplices[k]`` (the k-dimensional simplices).

    Returns ``(betti, torsion)`` for dimensions ``0..top`` where ``top`` is the
    complex dimension, clipped to ``max_dim``.
    """
    top = len(simplices) - 1
    if max_dim is not None:
        top = min(top, max_dim)
    if top < 0:
        return [], []
    ranks = [0] * (top + 2)
    tors: list[list[int]] = [[] for _ in range(top + 2)]
    for k in range(1, top + 2):
        if k >= len(simplices) or not simplices[k]:
            continue
        diag = diagonalize(boundary_columns(simplices[k - 1], simplices[k]))
        ranks[k] = len(diag)
        tors[k - 1] = [d for d in invariant_factors(diag) if d > 1]
    betti = [len(simplices[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    return betti, tors[: top + 1]
