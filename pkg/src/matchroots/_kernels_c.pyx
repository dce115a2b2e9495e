# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: matching-count recursion and canonical-form search.

Contracts match ``_kernels_py`` exactly; that module is the reference.
int64 accumulators are safe up to n = 32 (the total matching count of K32
is below 2^63).
"""

from libc.stdint cimport int64_t, uint32_t, uint64_t

cdef extern from *:
    int __builtin_ctz(unsigned int x)


cdef void _count_rec(uint32_t avail, int k, int64_t* out, uint32_t* adj) noexcept:
    cdef uint32_t v_bit, rest, nb, w_bit
    if avail == 0:
        out[k] += 1
        return
    v_bit = avail & (~avail + 1)
    rest = avail ^ v_bit
    _count_rec(rest, k, out, adj)
    nb = adj[__builtin_ctz(v_bit)] & rest
    while nb:
        w_bit = nb & (~nb + 1)
        _count_rec(rest ^ w_bit, k + 1, out, adj)
        nb ^= w_bit


def match_count_vector(int n, adj):
    """Number of k-edge matchings for k = 0..n//2, by matching enumeration."""
    cdef uint32_t cadj[32]
    cdef int64_t out[17]
    cdef int i
    if n < 0 or n > 32:
        raise ValueError("match_count_vector supports 0 <= n <= 32")
    for i in range(n // 2 + 1):
        out[i] = 0
    for i in range(n):
        cadj[i] = adj[i]
    if n == 0:
        return [1]
    _count_rec((1 << n) - 1 if n < 32 else <uint32_t>0xFFFFFFFF, 0, out, cadj)
    return [out[i] for i in range(n // 2 + 1)]


cdef struct CanonCtx:
    int n
    int total_bits
    uint32_t adj[12]
    int order[12]
    int perm[12]
    uint32_t used
    uint64_t best
    int have


cdef void _canon_rec(CanonCtx* c, int pos, uint64_t prefix, int nbits) noexcept:
    cdef int idx, v, j
    cdef uint64_t row, cand
    if pos == c.n:
        c.best = prefix
        c.have = 1
        return
    for idx in range(c.n):
        v = c.order[idx]
        if c.used & (<uint32_t>1 << v):
            continue
        row = 0
        for j in range(pos):
            row = (row << 1) | ((c.adj[v] >> c.perm[j]) & 1)
        cand = (prefix << pos) | row
        if c.have and cand > (c.best >> (c.total_bits - (nbits + pos))):
            continue
        c.perm[pos] = v
        c.used |= (<uint32_t>1 << v)
        _canon_rec(c, pos + 1, cand, nbits + pos)
        c.used &= ~(<uint32_t>1 << v)


cdef uint64_t _min_bits(int n, uint32_t* adj) noexcept:
    cdef CanonCtx c
    cdef int i, j, tmp
    cdef int deg[12]
    if n <= 1:
        return 0
    c.n = n
    c.total_bits = n * (n - 1) // 2
    c.used = 0
    c.have = 0
    c.best = 0
    for i in range(n):
        c.adj[i] = adj[i]
        deg[i] = 0
        for j in range(n):
            deg[i] += (adj[i] >> j) & 1
        c.order[i] = i
    # insertion sort by (degree, index): low-degree vertices first reach a
    # small bit string early, tightening the bound
    for i in range(1, n):
        tmp = c.order[i]
        j = i - 1
        while j >= 0 and deg[c.order[j]] > deg[tmp]:
            c.order[j + 1] = c.order[j]
            j -= 1
        c.order[j + 1] = tmp
    _canon_rec(&c, 0, 0, 0)
    return c.best


def min_adjacency_bits(int n, adj):
    """Minimum relabeled adjacency bit string, packed into an int."""
    cdef uint32_t cadj[12]
    cdef int i
    if n < 0 or n > 12:
        raise ValueError("min_adjacency_bits supports 0 <= n <= 12")
    for i in range(n):
        cadj[i] = adj[i]
    return _min_bits(n, cadj)


def canonical_sweep(int n):
    """Distinct canonical bit strings over all labeled graphs on n vertices, sorted."""
    cdef uint32_t adj[8]
    cdef uint64_t mask
    cdef uint64_t total
    cdef int b, i, j
    if n < 0 or n > 8:
        raise ValueError("canonical_sweep supports 0 <= n <= 8")
    if n <= 1:
        return [0]
    total = <uint64_t>1 << (n * (n - 1) // 2)
    seen = set()
    for mask in range(total):
        for i in range(n):
            adj[i] = 0
        b = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> b) & 1:
                    adj[i] |= <uint32_t>1 << j
                    adj[j] |= <uint32_t>1 << i
                b += 1
        seen.add(_min_bits(n, adj))
    return sorted(seen)
