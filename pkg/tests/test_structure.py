import pytest

from matchroots.factorint import RootClass, ZERO_ROOT
from matchroots.fixtures import cycle
from matchroots.graphs import from_edge_list, to_graph6
from matchroots.intpoly import IntPoly
from matchroots.matching import matching_polynomial, missed_by_some_maximum_matching, root_support
from matchroots.structure import (
    InterlacingViolation,
    RootContext,
    SignTable,
    VertexSign,
    classify_all,
    decomposition,
    exploratory_roots,
    is_essential_path,
    vertex_sign,
    verify_count_identity,
    verify_deletion_tables,
    verify_edge_addition,
    verify_edge_deletion,
    verify_essential_exists,
    verify_gallai,
    verify_godsil_deficiency,
    verify_interlacing,
    verify_neutral_essential_nonadjacency,
    verify_path_endpoints,
    verify_simple_roots_vt,
    verify_special_edge_lemmas,
    verify_specialness_stability,
    verify_stability,
    verify_zero_essential_matching,
)

E, N, P_ = VertexSign.ESSENTIAL, VertexSign.NEUTRAL, VertexSign.POSITIVE


def P(*coeffs):
    return IntPoly.of(*coeffs)


def star():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3)])


ROOT3 = RootClass(P(-3, 0, 1))  # x^2 - 3
C5_QUARTIC = RootClass(P(5, 0, -5, 0, 1))


def test_vertex_sign_star_zero_root():
    # deleting the center leaves 3 isolated vertices: mult 3 > 2
    assert vertex_sign(star(), ZERO_ROOT, 0) == P_
    # deleting a leaf leaves a path: mult 1 < 2
    assert vertex_sign(star(), ZERO_ROOT, 1) == E


def test_vertex_sign_star_sqrt3():
    for u in range(4):
        assert vertex_sign(star(), ROOT3, u) == E


def test_vertex_sign_k2_root_one():
    root = RootClass(P(-1, 1))
    k2 = from_edge_list(2, [(0, 1)])
    assert vertex_sign(k2, root, 0) == E and vertex_sign(k2, root, 1) == E


def test_classify_all_star():
    table = classify_all(star(), ZERO_ROOT)
    assert table.base_mult == 2
    assert table.signs == (P_, E, E, E)
    assert table.special == frozenset({0})


def test_classify_mult_zero_has_no_essential():
    k2 = from_edge_list(2, [(0, 1)])
    table = classify_all(k2, ZERO_ROOT)
    assert table.base_mult == 0
    assert E not in table.signs
    assert table.special == frozenset()


def test_sign_table_invariants():
    with pytest.raises(ValueError):
        SignTable(ZERO_ROOT, 0, (E,), frozenset())
    with pytest.raises(ValueError):
        SignTable(ZERO_ROOT, 1, (E, N), frozenset({1}))  # special must be positive


def test_decomposition_star():
    dec = decomposition(star(), ZERO_ROOT)
    assert dec.d == frozenset({1, 2, 3})
    assert dec.a == frozenset({0})
    assert dec.c == frozenset()


def test_decomposition_c5_quartic():
    dec = decomposition(cycle(5), C5_QUARTIC)
    assert dec.d == frozenset(range(5))
    assert dec.a == dec.c == frozenset()


def test_decomposition_mult_zero():
    k2 = from_edge_list(2, [(0, 1)])
    dec = decomposition(k2, ZERO_ROOT)
    assert dec.d == dec.a == frozenset()
    assert dec.c == frozenset({0, 1})


def test_essential_path():
    g = star()
    assert is_essential_path(g, ZERO_ROOT, (1,)) is True  # essential vertex
    assert is_essential_path(g, ZERO_ROOT, (1, 0)) is False  # leaves 2K1: mult 2
    # leaf-center-leaf leaves a single vertex: mult 1 = 2 - 1; fixed against
    # the brute-force matching oracle before freezing
    assert is_essential_path(g, ZERO_ROOT, (1, 0, 2)) is True
    with pytest.raises(ValueError):
        is_essential_path(g, ZERO_ROOT, (1, 2))  # not a path
    with pytest.raises(ValueError):
        is_essential_path(from_edge_list(2, [(0, 1)]), ZERO_ROOT, (0,))  # mult 0


def test_all_verifiers_hold_on_examples():
    cases = [
        (star(), ZERO_ROOT),
        (star(), ROOT3),
        (cycle(5), C5_QUARTIC),
        (cycle(5), ZERO_ROOT),
        (from_edge_list(1, []), ZERO_ROOT),
    ]
    verifiers = [
        verify_interlacing,
        verify_essential_exists,
        verify_neutral_essential_nonadjacency,
        verify_path_endpoints,
        verify_deletion_tables,
        verify_edge_addition,
        verify_edge_deletion,
        verify_special_edge_lemmas,
        verify_stability,
        verify_gallai,
        verify_count_identity,
        verify_specialness_stability,
    ]
    for g, rc in cases:
        ctx = RootContext(g, rc)
        for fn in verifiers:
            report = fn(g, rc, ctx=ctx)
            assert report.holds, (to_graph6(g), rc, report.lemma, report.witnesses)


def test_stability_star_example():
    # deleting the center of the star preserves every leaf's essential sign
    report = verify_stability(star(), ZERO_ROOT)
    assert report.holds and report.checked == 3


def test_stability_vacuous_without_special():
    report = verify_stability(cycle(5), C5_QUARTIC)
    assert report.holds and report.checked == 0


def test_gallai_c5():
    report = verify_gallai(cycle(5), C5_QUARTIC)
    assert report.holds and report.meta["all_essential"] and report.meta["connected"]


def test_gallai_needs_connectivity():
    # 2K2 with root x-1: all four vertices essential, multiplicity two.
    # Multiplicities add over components, so the lemma is inherently about
    # connected graphs; the verifier records and skips the disconnected case.
    g = from_edge_list(4, [(0, 1), (2, 3)])
    root = RootClass(P(-1, 1))
    assert matching_polynomial(g) == P(1, 0, -2, 0, 1)
    table = classify_all(g, root)
    assert table.base_mult == 2 and all(s == E for s in table.signs)
    report = verify_gallai(g, root)
    assert report.holds and report.meta["all_essential"] and not report.meta["connected"]


def test_simple_roots_vt():
    assert verify_simple_roots_vt(cycle(5)).holds
    with pytest.raises(ValueError):
        verify_simple_roots_vt(star())
    # vertex transitive but disconnected: (x^2-1)^2 has repeated roots
    g = from_edge_list(4, [(0, 1), (2, 3)])
    report = verify_simple_roots_vt(g)
    assert report.holds and not report.meta["connected"] and report.checked == 0
    assert root_support(g).factors[0][1] == 2


def test_count_identity_star():
    report = verify_count_identity(star(), ZERO_ROOT)
    assert report.holds
    # identity 2 = 3 - 1 plus one check per D-component (no C components)
    assert report.checked == 4


def test_zero_essential_matching(corpus5):
    for g in corpus5:
        report = verify_zero_essential_matching(g)
        assert report.holds, (to_graph6(g), report.witnesses)
        table = classify_all(g, ZERO_ROOT)
        assert table.essentials() == missed_by_some_maximum_matching(g)
        assert N not in table.signs


def test_godsil_deficiency(corpus5):
    for g in corpus5:
        assert verify_godsil_deficiency(g).holds


def test_corrupted_oracle_is_reported():
    # force a visibly wrong multiplicity and expect witnesses, not silence
    def lie(h, rc, true_mult):
        return true_mult + 2 if h.n == 3 else true_mult

    report = verify_interlacing(star(), ZERO_ROOT, ctx=RootContext(star(), ZERO_ROOT, lie))
    assert not report.holds
    assert report.witnesses and report.witnesses[0]["kind"] == "vertex"

    report = verify_godsil_deficiency(star(), mult_hook=lambda h, rc, m: m + 1)
    assert not report.holds and report.witnesses[0]["kind"] == "deficiency"


def test_corrupted_oracle_interlacing_violation_in_sign_users():
    def lie(h, rc, true_mult):
        return true_mult + 3 if h.n == 3 else true_mult

    ctx = RootContext(star(), ZERO_ROOT, lie)
    with pytest.raises(InterlacingViolation):
        ctx.signs_of(star())
    report = verify_stability(star(), ZERO_ROOT, ctx=RootContext(star(), ZERO_ROOT, lie))
    assert not report.holds
    assert report.witnesses[0]["kind"] == "interlacing"


def test_exploratory_roots():
    k2 = from_edge_list(2, [(0, 1)])
    roots = exploratory_roots(k2)
    assert roots == [ZERO_ROOT]  # mu(K1) = x, and x does not divide x^2 - 1
    ctx = RootContext(k2, ZERO_ROOT)
    assert ctx.base == 0
    report = verify_interlacing(k2, ZERO_ROOT, ctx=ctx, exploratory=True)
    assert report.holds and report.exploratory


def test_decomposition_partitions_every_pair(corpus5):
    for g in corpus5:
        for rc, _ in root_support(g).factors:
            dec = decomposition(g, rc)
            assert dec.d | dec.a | dec.c == frozenset(range(g.n))
            assert dec.d.isdisjoint(dec.a) and dec.d.isdisjoint(dec.c)
            assert dec.a.isdisjoint(dec.c)


def test_report_json_schema():
    report = verify_stability(star(), ZERO_ROOT)
    obj = report.to_json_obj()
    assert set(obj) == {
        "lemma",
        "graph6",
        "root_coeffs",
        "verdict",
        "checked",
        "violations",
        "witnesses",
        "meta",
        "exploratory",
    }
    assert obj["graph6"] == to_graph6(star())
    assert obj["root_coeffs"] == ["0", "1"]
    assert obj["verdict"] == "holds"
