"""Simple undirected graphs on at most 32 labeled vertices.

Adjacency is a tuple of neighbor bitmasks, so a graph is a small immutable
value: surgery returns new graphs, and vertex deletions also return the
old-to-new index map (deletion reindexes densely).  graph6 is the wire
format for corpora; the canonical form is the lexicographically smallest
graph6 body over all relabelings, found by branch-and-bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import kernels

MAX_VERTICES = 32
CANONICAL_LIMIT = 10
ENUMERATION_LIMIT = 7
TRANSITIVITY_LIMIT = 12


class Graph6Error(ValueError):
    """Malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, a in enumerate(self.adj):
            if a >> self.n:
                raise ValueError("adjacency bit out of range")
            if (a >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            nb = self.adj[u] >> (u + 1)
            v = u + 1
            while nb:
                if nb & 1:
                    yield (u, v)
                nb >>= 1
                v += 1

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not (self.adj[u] >> v) & 1:
                    yield (u, v)

    def __repr__(self):
        return f"Graph({self.n}, {to_graph6(self)!r})"


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def from_edge_list(n: int, edges) -> Graph:
    """Graph with exactly the given edges; duplicates collapse, loops rejected."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~a) & ~(1 << v) for v, a in enumerate(g.adj)))


# ---------------------------------------------------------------------------
# graph6 (short form, n < 63)
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    n = data[0]
    if n == 63:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph on {n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(data) - 1}")
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + b // 6]
            if (byte >> (5 - b % 6)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    # padding bits beyond the pair count must be zero
    if npairs % 6:
        tail = data[-1] & ((1 << (6 - npairs % 6)) - 1)
        if tail:
            raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    npairs = g.n * (g.n - 1) // 2
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    assert len(out) == 1 + (npairs + 5) // 6
    return "".join(chr(c) for c in out)


def parse_edge_text(text: str) -> Graph:
    """Edge-list text form ``"n; u-v, u-v, ..."``; ``"3;"`` is empty on 3."""
    head, sep, rest = text.partition(";")
    if not sep:
        raise ValueError("edge text needs 'n; u-v, ...'")
    n = int(head.strip())
    edges = []
    rest = rest.strip()
    if rest:
        for item in rest.split(","):
            u, _, v = item.strip().partition("-")
            if not _:
                raise ValueError(f"bad edge {item.strip()!r}")
            edges.append((int(u), int(v)))
    return from_edge_list(n, edges)


def format_edge_text(g: Graph) -> str:
    return f"{g.n}; " + ", ".join(f"{u}-{v}" for u, v in g.edges())


# ---------------------------------------------------------------------------
# surgery
# ---------------------------------------------------------------------------


class VertexDeletion(NamedTuple):
    graph: Graph
    old_to_new: tuple[int | None, ...]


def delete_vertex(g: Graph, u: int) -> VertexDeletion:
    """Remove u; survivors are reindexed densely, map records old -> new."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    return delete_vertices(g, (u,))


def delete_vertices(g: Graph, vs) -> VertexDeletion:
    """Remove a set of vertices at once (used for G minus a path)."""
    kill = 0
    for u in vs:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} out of range")
        kill |= 1 << u
    old_to_new: list[int | None] = []
    keep = []
    for v in range(g.n):
        if (kill >> v) & 1:
            old_to_new.append(None)
        else:
            old_to_new.append(len(keep))
            keep.append(v)
    adj = []
    for v in keep:
        mask = 0
        av = g.adj[v]
        for new_w, w in enumerate(keep):
            if (av >> w) & 1:
                mask |= 1 << new_w
        adj.append(mask)
    return VertexDeletion(Graph(len(keep), tuple(adj)), tuple(old_to_new))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("edge endpoint out of range")
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("edge endpoint out of range")
    if u == v:
        raise ValueError("cannot add a self-loop")
    if g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is already an edge")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices) -> VertexDeletion:
    keep = set(vertices)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])


def relabel(g: Graph, perm) -> Graph:
    """Apply permutation perm (old -> new) to vertex labels."""
    adj = [0] * g.n
    for v in range(g.n):
        av = g.adj[v]
        mask = 0
        for w in _bits(av):
            mask |= 1 << perm[w]
        adj[perm[v]] = mask
    return Graph(g.n, tuple(adj))


# ---------------------------------------------------------------------------
# components and paths
# ---------------------------------------------------------------------------


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition into maximal connected vertex sets, ordered by minimum vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_path(g: Graph, vertices) -> bool:
    vs = tuple(vertices)
    if len(vs) < 1 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(a, b) for a, b in zip(vs, vs[1:]))


def enumerate_paths(g: Graph, max_len: int) -> Iterator[tuple[int, ...]]:
    """All simple paths on 1..max_len vertices, each emitted once.

    A path and its reverse are the same path; the orientation with the
    smaller first endpoint is the one emitted.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    for v in range(g.n):
        yield (v,)
    if max_len == 1:
        return

    def extend(path: tuple[int, ...], visited: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        for w in _bits(g.adj[last] & ~visited):
            p2 = path + (w,)
            if p2[0] < w:
                yield p2
            if len(p2) < max_len:
                yield from extend(p2, visited | (1 << w))

    for v in range(g.n):
        yield from extend((v,), 1 << v)


# ---------------------------------------------------------------------------
# canonical forms, enumeration, vertex transitivity
# ---------------------------------------------------------------------------


def _graph_from_bits(n: int, bits: int) -> Graph:
    npairs = n * (n - 1) // 2
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if (bits >> (npairs - 1 - b)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes: identical iff isomorphic (brute-force tier)."""
    if g.n > CANONICAL_LIMIT:
        raise ValueError(f"canonical_form is limited to n <= {CANONICAL_LIMIT}")
    return to_graph6(canonical_graph(g)).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    if g.n > CANONICAL_LIMIT:
        raise ValueError(f"canonical_graph is limited to n <= {CANONICAL_LIMIT}")
    return _graph_from_bits(g.n, kernels.min_adjacency_bits(g.n, g.adj))


def enumerate_graphs_up_to_iso(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on exactly n vertices.

    Sweeps all 2^C(n,2) labeled graphs and dedups by canonical form; yields
    in ascending canonical-bit order.
    """
    if not 0 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}")
    for bits in kernels.canonical_sweep(n):
        yield _graph_from_bits(n, bits)


def _automorphism_exists(g: Graph, src: int, dst: int) -> bool:
    """Search for an automorphism sending src to dst (degree-pruned backtracking)."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    if deg[src] != deg[dst]:
        return False
    # BFS order from src keeps new vertices constrained by mapped neighbors
    order = []
    seen = 1 << src
    queue = [src]
    while queue:
        v = queue.pop(0)
        order.append(v)
        for w in g.neighbors(v):
            if not (seen >> w) & 1:
                seen |= 1 << w
                queue.append(w)
    for v in range(n):
        if not (seen >> v) & 1:
            order.append(v)
            seen |= 1 << v
    img = [-1] * n
    used = [False] * n
    img[src] = dst
    used[dst] = True

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(v, u) != g.has_edge(w, img[u]):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
        img[v] = -1
        return False

    return rec(1)


def is_vertex_transitive(g: Graph) -> bool:
    """True iff the automorphism group acts transitively on vertices."""
    if g.n > TRANSITIVITY_LIMIT:
        raise ValueError(f"is_vertex_transitive is limited to n <= {TRANSITIVITY_LIMIT}")
    return all(_automorphism_exists(g, 0, v) for v in range(1, g.n))
