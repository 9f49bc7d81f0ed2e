"""Pure-Python graph kernels over integer bit rows.

A graph on ``n`` points is a sequence ``rows`` where bit ``j`` of ``rows[i]``
is set iff ``i`` and ``j`` are adjacent.  Vertex subsets are integer masks.

The compiled module ``graphtopo._kernels`` implements exactly the same
algorithms (same refinement, same search order, same automorphism cap) for
graphs of at most 64 points, so both backends return identical results.
"""

from __future__ import annotations

AUTOMORPHISM_CAP = 128


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def subrows(rows, mask: int) -> list[int]:
    """Rows of the subgraph induced by ``mask``, re-indexed densely."""
    vs = bits(mask)
    out = []
    for v in vs:
        r = rows[v] & mask
        row = 0
        for j, u in enumerate(vs):
            if (r >> u) & 1:
                row |= 1 << j
        out.append(row)
    return out


def is_connected_mask(rows, mask: int) -> bool:
    if not mask:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def cone_vertex(rows, mask: int) -> int:
    """A point of ``mask`` adjacent to every other point of ``mask``, or -1."""
    for v in iter_bits(mask):
        if rows[v] & mask == mask ^ (1 << v):
            return v
    return -1


def clique_counts_mask(rows, mask: int) -> list[int]:
    """counts[k-1] = number of k-cliques inside ``mask``."""
    counts: list[int] = []

    def grow(depth: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if len(counts) <= depth:
                counts.append(0)
            counts[depth] += 1
            nxt = cand & rows[v]
            if nxt:
                grow(depth + 1, nxt)

    grow(0, mask)
    return counts


def euler_mask(rows, mask: int) -> int:
    chi = 0
    for k, c in enumerate(clique_counts_mask(rows, mask)):
        chi += c if k % 2 == 0 else -c
    return chi


# -- canonical labeling ------------------------------------------------------

def _refine(rows, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new_cells.append(c)
            else:
                for key in keys:
                    new_cells.append([v for v in c if sig[v] == key])
        if len(new_cells) == len(cells):
            return cells
        cells = new_cells


def _orbit_rep(autos, prefix, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        if all(g[p] == p for p in prefix):
            for x in range(n):
                a, b = find(x), find(g[x])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    return find


def canonical_labeling(rows, n: int) -> tuple[tuple[int, ...], list[int]]:
    """Return ``(code, order)``.

    ``order[i]`` is the point placed at canonical position ``i``; ``code`` is
    the tuple of relabeled rows, minimal over the individualization-refinement
    search tree.  Isomorphic graphs get equal codes.
    """
    if n == 0:
        return (), []
    best: list = [None, None]
    first: list = [None, None]
    autos: list[list[int]] = []

    def leaf(cells):
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        code = []
        for v in order:
            r = 0
            for u in iter_bits(rows[v]):
                r |= 1 << pos[u]
            code.append(r)
        code = tuple(code)
        if first[0] is None:
            first[0], first[1] = code, order
        elif code == first[0] and len(autos) < AUTOMORPHISM_CAP:
            g = [0] * n
            for i in range(n):
                g[first[1][i]] = order[i]
            autos.append(g)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order
        elif code == best[0] and best[1] is not first[1] and len(autos) < AUTOMORPHISM_CAP:
            g = [0] * n
            for i in range(n):
                g[best[1][i]] = order[i]
            autos.append(g)

    def search(cells, prefix):
        t = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                t = i
                break
        if t < 0:
            leaf(cells)
            return
        tried: list[int] = []
        for w in cells[t]:
            if tried:
                # swapping twins is an automorphism fixing the prefix
                if any((rows[w] ^ rows[x]) & ~((1 << w) | (1 << x)) == 0 for x in tried):
                    continue
                find = _orbit_rep(autos, prefix, n)
                rw = find(w)
                if any(find(x) == rw for x in tried):
                    continue
            rest = [x for x in cells[t] if x != w]
            child = cells[:t] + [[w], rest] + cells[t + 1:]
            search(_refine(rows, child), prefix + [w])
            tried.append(w)

    search(_refine(rows, [list(range(n))]), [])
    return best[0], best[1]


def form_bytes(code, n: int) -> bytes:
    width = (n + 7) // 8
    return n.to_bytes(4, "big") + b"".join(r.to_bytes(width, "big") for r in code)


def canonical_key(rows, n: int) -> bytes:
    code, _ = canonical_labeling(rows, n)
    return form_bytes(code, n)


# -- contractibility ---------------------------------------------------------

def contractible_mask(rows, mask: int, cache: dict, use_euler: bool = True) -> bool:
    """Decide whether the subgraph induced by ``mask`` is contractible.

    Exhaustive backtracking over simple-point deletions, memoized in ``cache``
    by canonical form.  With ``use_euler`` a subgraph whose clique-complex Euler
    characteristic differs from 1 is rejected without search.
    """
    k = mask.bit_count()
    if k <= 1:
        return k == 1
    if cone_vertex(rows, mask) >= 0:
        return True
    if not is_connected_mask(rows, mask):
        return False
    sub = subrows(rows, mask)
    key = canonical_key(sub, k)
    hit = cache.get(key)
    if hit is not None:
        return hit
    result = False
    if not use_euler or euler_mask(sub, (1 << k) - 1) == 1:
        full = (1 << k) - 1
        for v in range(k):
            if contractible_mask(sub, sub[v], cache, use_euler) and contractible_mask(
                sub, full ^ (1 << v), cache, use_euler
            ):
                result = True
                break
    cache[key] = result
    return result


def contractible(rows, n: int, cache: dict, use_euler: bool = True) -> bool:
    return contractible_mask(rows, (1 << n) - 1, cache, use_euler)
