# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, free, calloc

import numpy as np

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_ctz(unsigned int) nogil

cdef enum:
    MAXN = 8
    MAXM = 28

MAX_EDGES = 24
MAX_ORDER = MAXN


cdef enum:
    BLOCK = 12


cdef struct Walk:
    int m
    int k              # the lowest k edges are handled by label propagation
    int nl             # vertices touched by those edges
    int *eu
    int *ev
    int *parent
    int *size
    int *lvert         # local vertex -> vertex
    int *lu            # local endpoints of the low edges
    int *lv
    int *root
    unsigned char *lab # (2**k) x nl component labels
    unsigned char *rlow
    unsigned char *ranks


cdef int _find(int *parent, int x) nogil:
    while parent[x] != x:
        x = parent[x]
    return x


cdef void _block(Walk *w, unsigned int mask, int rank) nogil:
    """All 2**k subsets of the low edges on top of the current forest."""
    cdef int nl = w.nl, a, b, c, j, la, lb, lo, hi
    cdef unsigned int t, half, n_out = 1u << w.k
    cdef unsigned char *src
    cdef unsigned char *dst
    for a in range(nl):
        w.root[a] = _find(w.parent, w.lvert[a])
    for a in range(nl):
        for b in range(a + 1):
            if w.root[b] == w.root[a]:
                w.lab[a] = <unsigned char>b
                break
    w.rlow[0] = 0
    for j in range(w.k):
        half = 1u << j
        a = w.lu[j]
        b = w.lv[j]
        for t in range(half):
            src = w.lab + t * nl
            dst = w.lab + (t + half) * nl
            la = src[a]
            lb = src[b]
            if la == lb:
                for c in range(nl):
                    dst[c] = src[c]
                w.rlow[t + half] = w.rlow[t]
            else:
                lo = la if la < lb else lb
                hi = la + lb - lo
                for c in range(nl):
                    dst[c] = <unsigned char>lo if src[c] == hi else src[c]
                w.rlow[t + half] = w.rlow[t] + 1
    for t in range(n_out):
        w.ranks[mask | t] = <unsigned char>(rank + w.rlow[t])


cdef void _walk(Walk *w, int i, unsigned int mask, int rank) nogil:
    # high edges are decided from the top index down, so blocks are
    # written in increasing mask order
    cdef int ru, rv, t
    if i < w.k:
        _block(w, mask, rank)
        return
    _walk(w, i - 1, mask, rank)
    ru = _find(w.parent, w.eu[i])
    rv = _find(w.parent, w.ev[i])
    if ru == rv:
        _walk(w, i - 1, mask | (1u << i), rank)
        return
    if w.size[ru] < w.size[rv]:
        t = ru
        ru = rv
        rv = t
    w.parent[rv] = ru
    w.size[ru] += w.size[rv]
    _walk(w, i - 1, mask | (1u << i), rank + 1)
    w.size[ru] -= w.size[rv]
    w.parent[rv] = rv


def graphic_rank_table(int n_vertices, edges):
    """Rank of every edge subset of a (multi)graph, indexed by bitmask."""
    edges = [(int(u), int(v)) for u, v in edges]
    cdef int m = len(edges)
    if m > MAX_EDGES:
        raise ValueError(f"at most {MAX_EDGES} edges supported, got {m}")
    for u, v in edges:
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise ValueError(f"edge ({u}, {v}) outside vertex range")
    out = np.zeros(1 << m, dtype=np.uint8)
    cdef unsigned char[::1] ranks = out
    cdef int nv = n_vertices if n_vertices > 0 else 1
    cdef int k = m if m < BLOCK else BLOCK
    local = {}
    for u, v in edges[:k]:
        local.setdefault(u, len(local))
        local.setdefault(v, len(local))
    cdef int nl = max(len(local), 1)
    cdef Walk w
    cdef int i
    w.m = m
    w.k = k
    w.nl = nl
    w.eu = <int *>malloc(sizeof(int) * (m + 1))
    w.ev = <int *>malloc(sizeof(int) * (m + 1))
    w.parent = <int *>malloc(sizeof(int) * nv)
    w.size = <int *>malloc(sizeof(int) * nv)
    w.lvert = <int *>malloc(sizeof(int) * nl)
    w.lu = <int *>malloc(sizeof(int) * (k + 1))
    w.lv = <int *>malloc(sizeof(int) * (k + 1))
    w.root = <int *>malloc(sizeof(int) * nl)
    w.lab = <unsigned char *>malloc((<size_t>1 << k) * nl)
    w.rlow = <unsigned char *>malloc(<size_t>1 << k)
    w.ranks = &ranks[0]
    try:
        if not (w.eu and w.ev and w.parent and w.size and w.lvert and w.lu and w.lv
                and w.root and w.lab and w.rlow):
            raise MemoryError()
        for i in range(m):
            w.eu[i] = edges[i][0]
            w.ev[i] = edges[i][1]
        for i in range(nv):
            w.parent[i] = i
            w.size[i] = 1
        w.lvert[0] = 0
        for vertex, idx in local.items():
            w.lvert[idx] = vertex
        for i in range(k):
            w.lu[i] = local[edges[i][0]]
            w.lv[i] = local[edges[i][1]]
        with nogil:
            _walk(&w, m - 1, 0, 0)
    finally:
        free(w.eu)
        free(w.ev)
        free(w.parent)
        free(w.size)
        free(w.lvert)
        free(w.lu)
        free(w.lv)
        free(w.root)
        free(w.lab)
        free(w.rlow)
    return out


cdef struct Shape:
    int n
    int m
    int idx[MAXN][MAXN]
    int ei[MAXM]
    int ej[MAXM]
    unsigned int inc[MAXN]


cdef void _shape(Shape *s, int n) nogil:
    cdef int i, j, e = 0
    s.n = n
    for i in range(n):
        s.inc[i] = 0
    for j in range(1, n):
        for i in range(j):
            s.idx[i][j] = e
            s.idx[j][i] = e
            s.ei[e] = i
            s.ej[e] = j
            s.inc[i] |= 1u << e
            s.inc[j] |= 1u << e
            e += 1
    s.m = e


cdef inline int _popcount(unsigned int x) nogil:
    return __builtin_popcount(x)


cdef unsigned int _permute(Shape *s, unsigned int mask, int *perm) nogil:
    cdef unsigned int out = 0
    cdef unsigned int rest = mask
    cdef int e
    while rest:
        e = __builtin_ctz(rest)
        rest &= rest - 1
        out |= 1u << s.idx[perm[s.ei[e]]][perm[s.ej[e]]]
    return out


cdef struct Search:
    Shape *s
    unsigned int mask
    int *lo          # first slot of each vertex's block
    int *hi          # one past the last slot
    int *perm
    int used
    unsigned int best
    int want_max
    int abort        # minimising search stops at the first smaller image


cdef void _search(Search *q, int v) nogil:
    cdef int t
    cdef unsigned int img
    if q.abort:
        return
    if v == q.s.n:
        img = _permute(q.s, q.mask, q.perm)
        if q.want_max:
            if img > q.best:
                q.best = img
        elif img < q.best:
            q.best = img
            q.abort = 1
        return
    for t in range(q.lo[v], q.hi[v]):
        if not (q.used >> t) & 1:
            q.used |= 1 << t
            q.perm[v] = t
            _search(q, v + 1)
            q.used &= ~(1 << t)
            if q.abort:
                return


def canonical_reps(int n, int min_degree=0):
    """Masks that are the canonical representative of their isomorphism class.

    See ``_pykernels.canonical_reps`` for the labelling convention.
    """
    if not 1 <= n <= MAXN:
        raise ValueError(f"order must lie in [1, {MAXN}]")
    cdef Shape s
    _shape(&s, n)
    cdef unsigned long long total = 1ull << s.m
    cdef unsigned long long mm
    cdef unsigned int mask
    cdef int deg[MAXN]
    cdef int lo[MAXN]
    cdef int hi[MAXN]
    cdef int perm[MAXN]
    cdef int v, ok, start
    cdef Search q
    result = []
    q.s = &s
    q.lo = lo
    q.hi = hi
    q.perm = perm
    q.want_max = 0
    for mm in range(total):
        mask = <unsigned int>mm
        ok = 1
        for v in range(n):
            deg[v] = _popcount(mask & s.inc[v])
            if deg[v] < min_degree or (v > 0 and deg[v] < deg[v - 1]):
                ok = 0
                break
        if not ok:
            continue
        start = 0
        for v in range(n):
            if v > 0 and deg[v] != deg[v - 1]:
                start = v
            lo[v] = start
        for v in range(n - 1, -1, -1):
            if v == n - 1 or deg[v] != deg[v + 1]:
                hi[v] = v + 1
            else:
                hi[v] = hi[v + 1]
        q.mask = mask
        q.used = 0
        q.best = mask
        q.abort = 0
        _search(&q, 0)
        if not q.abort:
            result.append(int(mask))
    return result


cdef int _spans(unsigned int *adj, unsigned int alive) nogil:
    cdef unsigned int seen, frontier, low, new
    cdef int v
    if alive == 0:
        return 1
    seen = alive & (~alive + 1)
    frontier = seen
    while frontier:
        v = __builtin_ctz(frontier)
        frontier &= frontier - 1
        new = adj[v] & alive & ~seen
        seen |= new
        frontier |= new
    return seen == alive


cdef int _predicate(Shape *s, unsigned int mask, int kind) nogil:
    cdef unsigned int adj[MAXN]
    cdef unsigned int full = (1u << s.n) - 1
    cdef int v, e
    cdef unsigned int rest = mask
    for v in range(s.n):
        adj[v] = 0
    while rest:
        e = __builtin_ctz(rest)
        rest &= rest - 1
        adj[s.ei[e]] |= 1u << s.ej[e]
        adj[s.ej[e]] |= 1u << s.ei[e]
    if not _spans(adj, full):
        return 0
    if kind == 0:
        return 1
    if s.n < 3:
        return 0
    for v in range(s.n):
        if not _spans(adj, full & ~(1u << v)):
            return 0
    return 1


cdef unsigned int _form_max(Shape *s, unsigned int mask) nogil:
    cdef int deg[MAXN]
    cdef int lo[MAXN]
    cdef int hi[MAXN]
    cdef int perm[MAXN]
    cdef int v, d, pos = 0, count
    cdef Search q
    for v in range(s.n):
        deg[v] = _popcount(mask & s.inc[v])
    # slots for each degree class, highest degree first
    for d in range(s.n - 1, -1, -1):
        count = 0
        for v in range(s.n):
            if deg[v] == d:
                count += 1
        for v in range(s.n):
            if deg[v] == d:
                lo[v] = pos
                hi[v] = pos + count
        pos += count
    q.s = s
    q.mask = mask
    q.lo = lo
    q.hi = hi
    q.perm = perm
    q.used = 0
    q.best = 0
    q.want_max = 1
    q.abort = 0
    _search(&q, 0)
    return q.best


def canonical_form_max(int n, unsigned int mask):
    """Maximum mask over all labellings with non-increasing degrees."""
    cdef Shape s
    _shape(&s, n)
    return int(_form_max(&s, mask))


def graph_predicate(int n, unsigned int mask, str kind):
    cdef Shape s
    _shape(&s, n)
    if kind not in ("connected", "biconnected"):
        raise ValueError(f"unknown predicate {kind!r}")
    return bool(_predicate(&s, mask, 0 if kind == "connected" else 1))


def oracle_forms(int n, str kind):
    """Filter-then-dedupe enumeration; see ``_pykernels.oracle_forms``."""
    if not 1 <= n <= MAXN:
        raise ValueError(f"order must lie in [1, {MAXN}]")
    if kind not in ("connected", "biconnected"):
        raise ValueError(f"unknown predicate {kind!r}")
    cdef int k = 0 if kind == "connected" else 1
    cdef Shape s
    _shape(&s, n)
    cdef unsigned long long total = 1ull << s.m
    cdef unsigned long long mm
    cdef unsigned int form
    cdef unsigned char *seen = <unsigned char *>calloc(total // 8 + 1, 1)
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for mm in range(total):
                if _predicate(&s, <unsigned int>mm, k):
                    form = _form_max(&s, <unsigned int>mm)
                    seen[form >> 3] |= 1 << (form & 7)
        result = [int(f) for f in range(total) if seen[f >> 3] >> (f & 7) & 1]
    finally:
        free(seen)
    return result


def edge_index(int i, int j):
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def edge_pairs(int n):
    return [(i, j) for j in range(1, n) for i in range(j)]
