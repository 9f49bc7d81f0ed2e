# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels for graphs of at most 64 points.

Mirrors ``graphtopo._kernels_py`` exactly; see that module for semantics.
"""

from libc.stdint cimport uint64_t, uint8_t
from libc.string cimport memcpy
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    AUTOCAP = 128

AUTOMORPHISM_CAP = AUTOCAP


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int load_rows(object rows, int n, uint64_t* out) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 points")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


cdef inline uint64_t full_mask(int k) nogil:
    if k >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << k) - 1


cdef int extract(const uint64_t* rows, uint64_t mask, uint64_t* sub) nogil:
    cdef int vs[MAXN]
    cdef int k = 0, i, j
    cdef uint64_t m = mask, r, row
    while m:
        vs[k] = lowbit(m)
        k += 1
        m &= m - 1
    for i in range(k):
        r = rows[vs[i]] & mask
        row = 0
        for j in range(k):
            if (r >> vs[j]) & 1:
                row |= (<uint64_t>1) << j
        sub[i] = row
    return k


cdef bint connected(const uint64_t* rows, uint64_t mask) nogil:
    cdef uint64_t seen, frontier, nxt, f
    if mask == 0:
        return True
    seen = mask & (~mask + 1)
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= rows[lowbit(f)]
            f &= f - 1
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


cdef int cone(const uint64_t* rows, uint64_t mask) nogil:
    cdef uint64_t m = mask
    cdef int v
    while m:
        v = lowbit(m)
        if rows[v] & mask == mask ^ ((<uint64_t>1) << v):
            return v
        m &= m - 1
    return -1


cdef void grow_cliques(const uint64_t* rows, int depth, uint64_t cand, long long* counts, int* maxd) nogil:
    cdef int v
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        if depth + 1 > maxd[0]:
            maxd[0] = depth + 1
        counts[depth] += 1
        if cand & rows[v]:
            grow_cliques(rows, depth + 1, cand & rows[v], counts, maxd)


cdef long long euler(const uint64_t* rows, uint64_t mask) nogil:
    cdef long long counts[MAXN + 1]
    cdef int maxd = 0, k
    cdef long long chi = 0
    for k in range(MAXN + 1):
        counts[k] = 0
    grow_cliques(rows, 0, mask, counts, &maxd)
    for k in range(maxd):
        if k % 2 == 0:
            chi += counts[k]
        else:
            chi -= counts[k]
    return chi


# -- canonical labeling ------------------------------------------------------

cdef struct CanonState:
    int n
    uint64_t rows[MAXN]
    bint have_best
    uint64_t best[MAXN]
    uint8_t best_order[MAXN]
    bint have_first
    uint64_t first[MAXN]
    uint8_t first_order[MAXN]
    bint best_is_first
    int nautos
    uint8_t autos[AUTOCAP][MAXN]


cdef void refine(CanonState* st, uint8_t* lab, uint8_t* ptn) nogil:
    # ptn[i] == 1 iff position i starts a cell
    cdef int n = st.n
    cdef uint64_t masks[MAXN]
    cdef int starts[MAXN + 1]
    cdef uint8_t sig[MAXN][MAXN]
    cdef uint8_t tmpv
    cdef uint8_t tmps[MAXN]
    cdef int ncells, c, i, j, s, e, v, a, b, cmp, newcount, oldcount
    while True:
        ncells = 0
        for i in range(n):
            if ptn[i]:
                starts[ncells] = i
                ncells += 1
        starts[ncells] = n
        oldcount = ncells
        for c in range(ncells):
            masks[c] = 0
            for i in range(starts[c], starts[c + 1]):
                masks[c] |= (<uint64_t>1) << lab[i]
        newcount = 0
        for c in range(ncells):
            s = starts[c]
            e = starts[c + 1]
            if e - s == 1:
                newcount += 1
                continue
            for i in range(s, e):
                v = lab[i]
                for j in range(ncells):
                    sig[v][j] = <uint8_t>popc(st.rows[v] & masks[j])
            # stable insertion sort of lab[s:e] by signature
            for i in range(s + 1, e):
                tmpv = lab[i]
                j = i - 1
                while j >= s:
                    cmp = 0
                    for a in range(ncells):
                        if sig[lab[j]][a] != sig[tmpv][a]:
                            cmp = 1 if sig[lab[j]][a] > sig[tmpv][a] else -1
                            break
                    if cmp <= 0:
                        break
                    lab[j + 1] = lab[j]
                    j -= 1
                lab[j + 1] = tmpv
            newcount += 1
            for i in range(s + 1, e):
                cmp = 0
                for a in range(ncells):
                    if sig[lab[i]][a] != sig[lab[i - 1]][a]:
                        cmp = 1
                        break
                if cmp:
                    ptn[i] = 1
                    newcount += 1
        if newcount == oldcount:
            return


cdef int find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void orbits(CanonState* st, uint8_t* prefix, int plen, int* parent) nogil:
    cdef int g, i, x, a, b
    cdef bint fixes
    for x in range(st.n):
        parent[x] = x
    for g in range(st.nautos):
        fixes = True
        for i in range(plen):
            if st.autos[g][prefix[i]] != prefix[i]:
                fixes = False
                break
        if not fixes:
            continue
        for x in range(st.n):
            a = find(parent, x)
            b = find(parent, st.autos[g][x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b


cdef int cmp_code(const uint64_t* a, const uint64_t* b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef void leaf(CanonState* st, uint8_t* lab) nogil:
    cdef int n = st.n
    cdef uint8_t pos[MAXN]
    cdef uint64_t code[MAXN]
    cdef uint64_t r, row
    cdef int i, c
    for i in range(n):
        pos[lab[i]] = i
    for i in range(n):
        r = st.rows[lab[i]]
        row = 0
        while r:
            row |= (<uint64_t>1) << pos[lowbit(r)]
            r &= r - 1
        code[i] = row
    if not st.have_first:
        st.have_first = True
        memcpy(st.first, code, n * sizeof(uint64_t))
        memcpy(st.first_order, lab, n)
    elif cmp_code(code, st.first, n) == 0 and st.nautos < AUTOCAP:
        for i in range(n):
            st.autos[st.nautos][st.first_order[i]] = lab[i]
        st.nautos += 1
    if not st.have_best:
        st.have_best = True
        st.best_is_first = True
        memcpy(st.best, code, n * sizeof(uint64_t))
        memcpy(st.best_order, lab, n)
        return
    c = cmp_code(code, st.best, n)
    if c < 0:
        st.best_is_first = False
        memcpy(st.best, code, n * sizeof(uint64_t))
        memcpy(st.best_order, lab, n)
    elif c == 0 and not st.best_is_first and st.nautos < AUTOCAP:
        for i in range(n):
            st.autos[st.nautos][st.best_order[i]] = lab[i]
        st.nautos += 1


cdef void search(CanonState* st, uint8_t* lab, uint8_t* ptn, uint8_t* prefix, int plen) nogil:
    cdef int n = st.n
    cdef int s = -1, e = n, i, j, k, w, ntried = 0
    cdef uint8_t cell[MAXN]
    cdef uint8_t tried[MAXN]
    cdef uint8_t clab[MAXN]
    cdef uint8_t cptn[MAXN]
    cdef int parent[MAXN]
    cdef bint skip
    for i in range(n):
        if ptn[i] and (i + 1 == n or ptn[i + 1]):
            continue
        if ptn[i]:
            s = i
            break
    if s < 0:
        leaf(st, lab)
        return
    for i in range(s + 1, n):
        if ptn[i]:
            e = i
            break
    for i in range(s, e):
        cell[i - s] = lab[i]
    for i in range(e - s):
        w = cell[i]
        if ntried:
            skip = False
            for j in range(ntried):
                if (st.rows[w] ^ st.rows[tried[j]]) & ~(((<uint64_t>1) << w) | ((<uint64_t>1) << tried[j])) == 0:
                    skip = True
                    break
            if skip:
                continue
            orbits(st, prefix, plen, parent)
            skip = False
            for j in range(ntried):
                if find(parent, tried[j]) == find(parent, w):
                    skip = True
                    break
            if skip:
                continue
        memcpy(clab, lab, n)
        memcpy(cptn, ptn, n)
        clab[s] = w
        k = s + 1
        for j in range(e - s):
            if cell[j] != w:
                clab[k] = cell[j]
                k += 1
        cptn[s] = 1
        cptn[s + 1] = 1
        refine(st, clab, cptn)
        prefix[plen] = w
        search(st, clab, cptn, prefix, plen + 1)
        tried[ntried] = w
        ntried += 1


cdef void run_canon(CanonState* st) nogil:
    cdef uint8_t lab[MAXN]
    cdef uint8_t ptn[MAXN]
    cdef uint8_t prefix[MAXN]
    cdef int i
    st.have_best = False
    st.have_first = False
    st.best_is_first = False
    st.nautos = 0
    for i in range(st.n):
        lab[i] = i
        ptn[i] = 0
    ptn[0] = 1
    refine(st, lab, ptn)
    search(st, lab, ptn, prefix, 0)


cdef bytes key_from_best(CanonState* st):
    cdef int n = st.n
    cdef int width = (n + 7) // 8
    cdef bytearray out = bytearray(4 + n * width)
    cdef int i, b
    cdef uint64_t r
    out[0] = (n >> 24) & 0xFF
    out[1] = (n >> 16) & 0xFF
    out[2] = (n >> 8) & 0xFF
    out[3] = n & 0xFF
    for i in range(n):
        r = st.best[i]
        for b in range(width):
            out[4 + i * width + (width - 1 - b)] = (r >> (8 * b)) & 0xFF
    return bytes(out)


cdef CanonState* new_state() except NULL:
    cdef CanonState* st = <CanonState*>malloc(sizeof(CanonState))
    if st == NULL:
        raise MemoryError()
    return st


def canonical_labeling(rows, int n):
    cdef CanonState* st
    cdef int i
    if n == 0:
        return (), []
    st = new_state()
    try:
        st.n = n
        load_rows(rows, n, st.rows)
        with nogil:
            run_canon(st)
        return tuple(int(st.best[i]) for i in range(n)), [int(st.best_order[i]) for i in range(n)]
    finally:
        free(st)


def canonical_key(rows, int n):
    cdef CanonState* st
    if n == 0:
        return b"\x00\x00\x00\x00"
    st = new_state()
    try:
        st.n = n
        load_rows(rows, n, st.rows)
        with nogil:
            run_canon(st)
        return key_from_best(st)
    finally:
        free(st)


def clique_counts_mask(rows, mask):
    cdef uint64_t r[MAXN]
    cdef long long counts[MAXN + 1]
    cdef int maxd = 0, k
    cdef uint64_t m = <uint64_t>mask
    n = len(rows)
    load_rows(rows, n, r)
    for k in range(MAXN + 1):
        counts[k] = 0
    grow_cliques(r, 0, m, counts, &maxd)
    return [int(counts[k]) for k in range(maxd)]


# -- contractibility ---------------------------------------------------------

cdef int contr(const uint64_t* rows, uint64_t mask, dict cache, bint use_euler) except -1:
    cdef int k = popc(mask)
    cdef CanonState* st
    cdef uint64_t full
    cdef uint64_t sub[MAXN]
    cdef int v, result
    if k <= 1:
        return 1 if k == 1 else 0
    if cone(rows, mask) >= 0:
        return 1
    if not connected(rows, mask):
        return 0
    st = new_state()
    try:
        st.n = extract(rows, mask, st.rows)
        with nogil:
            run_canon(st)
        key = key_from_best(st)
        memcpy(sub, st.rows, k * sizeof(uint64_t))
    finally:
        free(st)
    hit = cache.get(key)
    if hit is not None:
        return 1 if hit else 0
    full = full_mask(k)
    result = 0
    if not use_euler or euler(sub, full) == 1:
        for v in range(k):
            if contr(sub, sub[v], cache, use_euler) and contr(
                sub, full ^ ((<uint64_t>1) << v), cache, use_euler
            ):
                result = 1
                break
    cache[key] = bool(result)
    return result


def contractible_mask(rows, mask, dict cache, bint use_euler=True):
    cdef uint64_t r[MAXN]
    n = len(rows)
    load_rows(rows, n, r)
    return bool(contr(r, <uint64_t>mask, cache, use_euler))


def contractible(rows, int n, dict cache, bint use_euler=True):
    cdef uint64_t r[MAXN]
    load_rows(rows, n, r)
    return bool(contr(r, full_mask(n), cache, use_euler))
