import random

import pytest

from matchroots.graphs import (
    CANONICAL_LIMIT,
    Graph,
    Graph6Error,
    add_edge,
    canonical_form,
    canonical_graph,
    complement,
    connected_components,
    delete_edge,
    delete_vertex,
    delete_vertices,
    enumerate_graphs_up_to_iso,
    enumerate_paths,
    format_edge_text,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_path,
    is_vertex_transitive,
    parse_edge_text,
    parse_graph6,
    relabel,
    to_graph6,
)
from matchroots.fixtures import cycle, complete, fixture_graphs, petersen


def star():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


def test_from_edge_list():
    k2 = from_edge_list(2, [(0, 1)])
    assert k2.n == 2 and k2.m == 1 and k2.has_edge(0, 1)
    empty3 = from_edge_list(3, [])
    assert empty3.m == 0
    assert star().degree(0) == 3
    assert from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).m == 1  # duplicates collapse
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 2)])
    with pytest.raises(ValueError):
        from_edge_list(2, [(1, 1)])


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # self-loop bit at vertex 0
    with pytest.raises(ValueError):
        Graph(1, (2,))  # bit out of range
    with pytest.raises(ValueError):
        Graph(33, tuple([0] * 33))


def test_graph6_known_encodings():
    k3 = parse_graph6("Bw")
    assert sorted(k3.edges()) == [(0, 1), (0, 2), (1, 2)]
    p3 = parse_graph6("Bg")
    assert sorted(p3.edges()) == [(0, 1), (1, 2)]
    assert to_graph6(k3) == "Bw"
    assert to_graph6(p3) == "Bg"
    assert parse_graph6(">>graph6<<Bw") == k3


def test_graph6_roundtrip_atlas(corpus5):
    for g in corpus5 + [g for _, g in fixture_graphs()]:
        line = to_graph6(g)
        assert parse_graph6(line) == g
        assert to_graph6(parse_graph6(line)) == line


def test_graph6_malformed():
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("B")  # missing data byte
    with pytest.raises(Graph6Error):
        parse_graph6("Bww")  # trailing garbage
    with pytest.raises(Graph6Error):
        parse_graph6("~??")  # long form
    with pytest.raises(Graph6Error):
        parse_graph6("B" + chr(30))  # character below 63
    with pytest.raises(Graph6Error):
        parse_graph6("Bq")  # nonzero padding bits for n=3


def test_delete_vertex():
    g, old_to_new = delete_vertex(from_edge_list(2, [(0, 1)]), 0)
    assert g.n == 1 and g.m == 0 and old_to_new == (None, 0)
    g, _ = delete_vertex(star(), 0)
    assert g.n == 3 and g.m == 0
    assert len(connected_components(g)) == 3
    c4 = cycle(4)
    g, m = delete_vertex(c4, 2)
    assert g.n == 3 and g.m == 2  # a path on three vertices
    assert m == (0, 1, None, 2)
    with pytest.raises(ValueError):
        delete_vertex(c4, 7)


def test_delete_vertex_keeps_labels_dense():
    g = from_edge_list(4, [(1, 3)])
    d = delete_vertex(g, 0)
    assert d.old_to_new == (None, 0, 1, 2)
    assert d.graph.has_edge(0, 2)


def test_edge_surgery():
    k3 = parse_graph6("Bw")
    p3 = delete_edge(k3, 0, 2)
    assert sorted(p3.edges()) == [(0, 1), (1, 2)]
    assert add_edge(p3, 0, 2) == k3
    with pytest.raises(ValueError):
        delete_edge(p3, 0, 2)
    with pytest.raises(ValueError):
        add_edge(k3, 0, 1)
    with pytest.raises(ValueError):
        add_edge(p3, 1, 1)


def test_add_then_delete_roundtrip(corpus5):
    rng = random.Random(5)
    for g in rng.sample(corpus5, 20):
        non = list(g.non_edges())
        if not non:
            continue
        u, v = rng.choice(non)
        assert delete_edge(add_edge(g, u, v), u, v) == g


def test_components():
    g, _ = delete_vertex(star(), 0)
    assert connected_components(g) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert connected_components(cycle(5)) == [frozenset(range(5))]
    assert len(connected_components(from_edge_list(5, []))) == 5
    assert is_connected(cycle(4)) and not is_connected(from_edge_list(2, []))


def test_enumerate_paths_examples():
    k2 = from_edge_list(2, [(0, 1)])
    assert sorted(enumerate_paths(k2, 2)) == [(0,), (0, 1), (1,)]
    p3 = parse_graph6("Bg")
    paths = list(enumerate_paths(p3, 3))
    assert paths.count((0, 1, 2)) == 1
    assert (2, 1, 0) not in paths
    k3 = parse_graph6("Bw")
    paths3 = list(enumerate_paths(k3, 3))
    singles = [p for p in paths3 if len(p) == 1]
    doubles = [p for p in paths3 if len(p) == 2]
    triples = [p for p in paths3 if len(p) == 3]
    assert len(singles) == 3 and len(doubles) == 3 and len(triples) == 3
    assert sorted(triples) == [(0, 1, 2), (0, 2, 1), (1, 0, 2)]
    with pytest.raises(ValueError):
        list(enumerate_paths(k3, 0))


def test_paths_are_paths(corpus5):
    for g in corpus5[-10:]:
        for p in enumerate_paths(g, 4):
            assert is_path(g, p)
            assert p[0] <= p[-1]


def test_canonical_form_basics():
    p3a = from_edge_list(3, [(0, 1), (1, 2)])
    p3b = from_edge_list(3, [(0, 2), (2, 1)])
    assert canonical_form(p3a) == canonical_form(p3b)
    assert canonical_form(p3a) != canonical_form(parse_graph6("Bw"))
    classes4 = {canonical_form(g) for g in _all_labeled(4)}
    assert len(classes4) == 11
    with pytest.raises(ValueError):
        canonical_form(complete(CANONICAL_LIMIT + 1))


def _all_labeled(n):
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        yield from_edge_list(n, [e for i, e in enumerate(pairs) if (mask >> i) & 1])


def test_canonical_invariance_under_relabeling(corpus5):
    rng = random.Random(123)
    for g in corpus5:
        want = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(g, perm)) == want
        assert canonical_graph(g).n == g.n


def test_enumeration_counts():
    known = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}
    for n, count in known.items():
        assert sum(1 for _ in enumerate_graphs_up_to_iso(n)) == count
    with pytest.raises(ValueError):
        next(enumerate_graphs_up_to_iso(8))


def test_enumeration_yields_canonical_representatives():
    for g in enumerate_graphs_up_to_iso(5):
        assert canonical_graph(g) == g


def test_vertex_transitivity():
    assert is_vertex_transitive(cycle(5))
    assert not is_vertex_transitive(star())
    pet = petersen()
    assert pet.n == 10 and pet.m == 15
    assert is_vertex_transitive(pet)
    assert is_vertex_transitive(from_edge_list(4, [(0, 1), (2, 3)]))  # 2K2
    with pytest.raises(ValueError):
        is_vertex_transitive(from_edge_list(13, []))


def test_deletion_addition_commute_when_disjoint(corpus5):
    rng = random.Random(8)
    for g in rng.sample([g for g in corpus5 if g.n >= 4], 15):
        non = [(u, v) for u, v in g.non_edges()]
        if not non:
            continue
        u, v = rng.choice(non)
        others = [w for w in range(g.n) if w not in (u, v)]
        w = rng.choice(others)
        left, lmap = delete_vertex(add_edge(g, u, v), w)
        right_view = delete_vertex(g, w)
        right = add_edge(right_view.graph, right_view.old_to_new[u], right_view.old_to_new[v])
        assert left == right
        assert lmap == right_view.old_to_new


def test_deletion_order_independence(corpus5):
    rng = random.Random(9)
    for g in rng.sample([g for g in corpus5 if g.n >= 3], 15):
        u, v = rng.sample(range(g.n), 2)
        d1 = delete_vertex(g, u)
        d12 = delete_vertex(d1.graph, d1.old_to_new[v])
        d2 = delete_vertex(g, v)
        d21 = delete_vertex(d2.graph, d2.old_to_new[u])
        assert d12.graph == d21.graph == delete_vertices(g, (u, v)).graph
        for w in range(g.n):
            if w in (u, v):
                continue
            assert d12.old_to_new[d1.old_to_new[w]] == d21.old_to_new[d2.old_to_new[w]]


def test_induced_subgraph_and_complement():
    c5 = cycle(5)
    sub = induced_subgraph(c5, {0, 1, 2})
    assert sorted(sub.graph.edges()) == [(0, 1), (1, 2)]
    assert complement(complement(c5)) == c5


def test_edge_text_roundtrip():
    g = star()
    text = format_edge_text(g)
    assert text == "4; 0-1, 0-2, 0-3"
    assert parse_edge_text(text) == g
    assert parse_edge_text("3;").n == 3
    with pytest.raises(ValueError):
        parse_edge_text("oops")
    with pytest.raises(ValueError):
        parse_edge_text("3; 0=1")
