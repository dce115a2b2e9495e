"""Pure-Python twins of the compiled kernels.

Same contracts as ``_kernels_c``; selected automatically when the compiled
extension is unavailable or when ``MATCHROOTS_PURE=1``.  Graphs arrive as
(n, adj) with ``adj`` a sequence of neighbor bitmasks.
"""

from __future__ import annotations


def match_count_vector(n, adj):
    """Number of k-edge matchings for k = 0..n//2, by matching enumeration.

    Decides vertices lowest-index first: either the vertex stays unmatched
    or it pairs with one available neighbor, so every matching is counted
    exactly once.
    """
    if n < 0 or n > 32:
        raise ValueError("match_count_vector supports 0 <= n <= 32")
    counts = [0] * (n // 2 + 1)

    def rec(avail, k):
        if not avail:
            counts[k] += 1
            return
        v_bit = avail & -avail
        rest = avail ^ v_bit
        rec(rest, k)
        nb = adj[v_bit.bit_length() - 1] & rest
        while nb:
            w_bit = nb & -nb
            rec(rest ^ w_bit, k + 1)
            nb ^= w_bit

    rec((1 << n) - 1, 0)
    return counts


def min_adjacency_bits(n, adj):
    """Minimum relabeled adjacency bit string, packed into an int.

    Bits appear in graph6 column order: when vertex number ``p`` of the new
    labeling is placed, its adjacency bits to new vertices 0..p-1 are
    appended (0 first = most significant of the group).  Branch-and-bound:
    a partial labeling whose prefix already exceeds the best known string
    cannot yield the minimum.
    """
    if n < 0 or n > 12:
        raise ValueError("min_adjacency_bits supports 0 <= n <= 12")
    if n <= 1:
        return 0
    total_bits = n * (n - 1) // 2
    order = sorted(range(n), key=lambda v: (bin(adj[v]).count("1"), v))
    best = None
    perm = [0] * n
    used = [False] * n

    def rec(pos, prefix, nbits):
        nonlocal best
        if pos == n:
            best = prefix
            return
        for v in order:
            if used[v]:
                continue
            row = 0
            av = adj[v]
            for j in range(pos):
                row = (row << 1) | ((av >> perm[j]) & 1)
            cand = (prefix << pos) | row
            if best is not None and cand > (best >> (total_bits - (nbits + pos))):
                continue
            used[v] = True
            perm[pos] = v
            rec(pos + 1, cand, nbits + pos)
            used[v] = False

    rec(0, 0, 0)
    return best


def canonical_sweep(n):
    """Distinct canonical bit strings over all labeled graphs on n vertices, sorted."""
    if n < 0 or n > 8:
        raise ValueError("canonical_sweep supports 0 <= n <= 8")
    if n <= 1:
        return [0]
    npairs = n * (n - 1) // 2
    seen = set()
    for mask in range(1 << npairs):
        adj = [0] * n
        b = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> b) & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                b += 1
        seen.add(min_adjacency_bits(n, adj))
    return sorted(seen)
