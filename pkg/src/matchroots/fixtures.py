"""Built-in fixture graphs: cycles, cliques, K3,3, the 3-cube, Petersen.

All fixtures are connected and vertex transitive; they are the instances
for the simple-roots check and general CLI experimentation.
"""

from __future__ import annotations

from .graphs import Graph, from_edge_list


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)]
    return from_edge_list(n, edges)


PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),      # outer cycle
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),      # spokes
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),      # inner pentagram
]


def petersen() -> Graph:
    return from_edge_list(10, PETERSEN_EDGES)


def fixture_graphs() -> list[tuple[str, Graph]]:
    """The named fixture set, in emission order."""
    out: list[tuple[str, Graph]] = []
    out.extend((f"C{n}", cycle(n)) for n in range(3, 13))
    out.extend((f"K{n}", complete(n)) for n in range(2, 9))
    out.append(("K3,3", complete_bipartite(3, 3)))
    out.append(("Q3", hypercube(3)))
    out.append(("Petersen", petersen()))
    return out
