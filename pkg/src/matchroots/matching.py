"""Matching polynomials by three independent routes, and matching oracles.

``match_counts`` enumerates matchings directly over the vertex order (the
kernel recursion); the two recurrence routes recompute the polynomial from
the edge-deletion and vertex-deletion identities with canonical-form
memoization.  Their exact agreement on the whole small-graph corpus is one
of the acceptance gates, so the three implementations deliberately share
nothing.

``max_matching_size`` is a separate branch-and-bound enumeration used as
the brute-force deficiency oracle; it never touches the polynomial code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .factorint import FactoredPoly, factor
from .graphs import Graph, canonical_form, delete_edge, delete_vertex, delete_vertices
from .intpoly import ONE, IntPoly

DEFAULT_MEMO_LIMIT = 1 << 18


@dataclass(frozen=True)
class MatchCounts:
    """p[k] = number of k-edge matchings; trailing zeros trimmed."""

    p: tuple[int, ...]

    def __post_init__(self):
        if not self.p or self.p[0] != 1:
            raise ValueError("p[0] must be 1 (the empty matching)")
        if any(c < 0 for c in self.p) or (len(self.p) > 1 and self.p[-1] == 0):
            raise ValueError("counts must be nonnegative with nonzero last entry")

    @property
    def matching_number(self) -> int:
        return len(self.p) - 1


def match_counts(g: Graph) -> MatchCounts:
    counts = _counts_cached(g.n, g.adj)
    end = len(counts)
    while end > 1 and counts[end - 1] == 0:
        end -= 1
    return MatchCounts(counts[:end])


@lru_cache(maxsize=DEFAULT_MEMO_LIMIT)
def _counts_cached(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(kernels.match_count_vector(n, adj))


@lru_cache(maxsize=DEFAULT_MEMO_LIMIT)
def _mu_cached(n: int, adj: tuple[int, ...]) -> IntPoly:
    counts = _counts_cached(n, adj)
    coeffs = [0] * (n + 1)
    for k, c in enumerate(counts):
        coeffs[n - 2 * k] = c if k % 2 == 0 else -c
    return IntPoly.of(*coeffs)


def matching_polynomial(g: Graph) -> IntPoly:
    """mu(G,x): sum over k of (-1)^k p(G,k) x^(n-2k); monic of degree n."""
    return _mu_cached(g.n, g.adj)


def clear_caches() -> None:
    _counts_cached.cache_clear()
    _mu_cached.cache_clear()


def matching_number(g: Graph) -> int:
    return match_counts(g).matching_number


def deficiency(g: Graph) -> int:
    """def(G) = n - 2*nu(G), the vertices missed by any maximum matching."""
    return g.n - 2 * match_counts(g).matching_number


def root_support(g: Graph) -> FactoredPoly:
    """Irreducible factorization of mu(G,x): every root class with its multiplicity."""
    return factor(matching_polynomial(g))


# ---------------------------------------------------------------------------
# recurrence routes (independent of the counting kernel)
# ---------------------------------------------------------------------------


def mu_by_edge_recurrence(g: Graph, memo_limit: int = DEFAULT_MEMO_LIMIT) -> IntPoly:
    """mu(G) = mu(G - e) - mu(G \\ {u,v}) on the first edge, memoized by canonical form."""
    memo: dict[bytes, IntPoly] = {}

    def mu(h: Graph) -> IntPoly:
        e = next(h.edges(), None)
        if e is None:
            return IntPoly.monomial(h.n)
        key = canonical_form(h)
        hit = memo.get(key)
        if hit is not None:
            return hit
        u, v = e
        out = mu(delete_edge(h, u, v)) - mu(delete_vertices(h, (u, v)).graph)
        if len(memo) < memo_limit:
            memo[key] = out
        return out

    return mu(g)


def mu_by_vertex_recurrence(g: Graph, memo_limit: int = DEFAULT_MEMO_LIMIT) -> IntPoly:
    """mu(G) = x*mu(G \\ u) - sum over neighbors v of mu(G \\ {u,v})."""
    memo: dict[bytes, IntPoly] = {}

    def mu(h: Graph) -> IntPoly:
        if h.n == 0:
            return ONE
        key = canonical_form(h)
        hit = memo.get(key)
        if hit is not None:
            return hit
        # pivot on a max-degree vertex: isolated pivots still recurse cleanly
        u = max(range(h.n), key=lambda v: (h.degree(v), -v))
        out = mu(delete_vertex(h, u).graph).shift(1)
        for v in h.neighbors(u):
            out = out - mu(delete_vertices(h, (u, v)).graph)
        if len(memo) < memo_limit:
            memo[key] = out
        return out

    return mu(g)


# ---------------------------------------------------------------------------
# brute-force matching oracles (independent of everything above)
# ---------------------------------------------------------------------------


def max_matching_size(g: Graph) -> int:
    """Maximum matching size by plain branching (no counting, no memo)."""
    adj = g.adj

    def rec(avail: int) -> int:
        if not avail:
            return 0
        v_bit = avail & -avail
        rest = avail ^ v_bit
        best = rec(rest)
        nb = adj[v_bit.bit_length() - 1] & rest
        while nb:
            w_bit = nb & -nb
            cand = 1 + rec(rest ^ w_bit)
            if cand > best:
                best = cand
            nb ^= w_bit
        return best

    return rec((1 << g.n) - 1)


def missed_by_some_maximum_matching(g: Graph) -> frozenset[int]:
    """Vertices avoidable by a maximum matching: nu(G - v) == nu(G)."""
    nu = max_matching_size(g)
    return frozenset(v for v in range(g.n) if max_matching_size(delete_vertex(g, v).graph) == nu)
