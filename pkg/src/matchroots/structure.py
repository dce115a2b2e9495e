"""Per-root vertex signs, the D/A/C decomposition, and lemma verifiers.

For a fixed root class t, deleting a vertex moves the multiplicity of t in
the matching polynomial by -1, 0, or +1; vertices are classified
essential, neutral, or positive accordingly.  A special vertex is a
non-essential vertex with an essential neighbor.  The decomposition puts
the essential vertices in D, the special vertices in A, and the rest in C.

Every structural statement the library relies on is also available as an
executable check: each ``verify_*`` function sweeps all instances on one
(graph, root) pair and returns a :class:`LemmaReport` carrying the first
violation witness and full counts.  A report never silently narrows its
quantifier; anything skipped is visible in ``checked``/``meta``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .factorint import RootClass, ZERO_ROOT, factor, multiplicity
from .graphs import (
    Graph,
    add_edge,
    connected_components,
    delete_edge,
    delete_vertex,
    delete_vertices,
    enumerate_paths,
    induced_subgraph,
    is_connected,
    is_path,
    is_vertex_transitive,
    to_graph6,
)
from .matching import (
    matching_polynomial,
    max_matching_size,
    missed_by_some_maximum_matching,
    root_support,
)

DEFAULT_PATH_CAP = 4


class VertexSign(enum.Enum):
    ESSENTIAL = "essential"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


_E = VertexSign.ESSENTIAL
_N = VertexSign.NEUTRAL
_P = VertexSign.POSITIVE


class InterlacingViolation(Exception):
    """A vertex deletion moved a root multiplicity by more than one.

    Cannot happen for true matching polynomials; raised so that a corrupted
    oracle (or a genuine bug) surfaces as a structured, replayable failure.
    """

    def __init__(self, graph: Graph, root: RootClass, vertex: int, base: int, after: int):
        self.graph6 = to_graph6(graph)
        self.root_coeffs = tuple(root.minpoly.to_json_coeffs())
        self.vertex = vertex
        self.base = base
        self.after = after
        super().__init__(
            f"mult jumped {base} -> {after} deleting vertex {vertex} of {self.graph6}"
        )

    def witness(self) -> dict:
        return {
            "kind": "interlacing",
            "graph6": self.graph6,
            "vertex": self.vertex,
            "base_mult": self.base,
            "deleted_mult": self.after,
        }


@dataclass(frozen=True)
class SignTable:
    root: RootClass
    base_mult: int
    signs: tuple[VertexSign, ...]
    special: frozenset[int]

    def __post_init__(self):
        if self.base_mult == 0 and _E in self.signs:
            raise ValueError("essential vertex with multiplicity 0")
        if any(self.signs[u] != _P for u in self.special):
            raise ValueError("special vertices must be positive")

    def essentials(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.signs) if s == _E)


@dataclass(frozen=True)
class Decomposition:
    root: RootClass
    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]


@dataclass
class LemmaReport:
    lemma: str
    graph6: str
    root_coeffs: tuple[str, ...]
    verdict: str
    checked: int
    violations: int
    witnesses: tuple[dict, ...]
    meta: dict = field(default_factory=dict)
    exploratory: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_json_obj(self) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": self.graph6,
            "root_coeffs": list(self.root_coeffs),
            "verdict": self.verdict,
            "checked": self.checked,
            "violations": self.violations,
            "witnesses": [dict(w) for w in self.witnesses],
            "meta": dict(self.meta),
            "exploratory": self.exploratory,
        }


MultHook = Callable[[Graph, RootClass, int], int]


class RootContext:
    """Multiplicity and sign cache for one (graph, root) verification session.

    ``mult_hook`` is a test-only corruption point: it receives the true
    multiplicity and may return a wrong one, so the harness's violation
    reporting can itself be exercised.
    """

    def __init__(self, graph: Graph, root: RootClass, mult_hook: Optional[MultHook] = None):
        self.graph = graph
        self.root = root
        self._hook = mult_hook
        self._mult: dict[tuple[int, tuple[int, ...]], int] = {}
        self._signs: dict[tuple[int, tuple[int, ...]], tuple[VertexSign, ...]] = {}
        self.base = self.mult(graph)

    def mult(self, h: Graph) -> int:
        key = (h.n, h.adj)
        hit = self._mult.get(key)
        if hit is None:
            hit = multiplicity(self.root, matching_polynomial(h))
            if self._hook is not None:
                hit = self._hook(h, self.root, hit)
            self._mult[key] = hit
        return hit

    def signs_of(self, h: Graph) -> tuple[VertexSign, ...]:
        """Sign of every vertex of h; raises InterlacingViolation on a bad delta."""
        key = (h.n, h.adj)
        hit = self._signs.get(key)
        if hit is None:
            base = self.mult(h)
            out = []
            for v in range(h.n):
                after = self.mult(delete_vertex(h, v).graph)
                delta = after - base
                if delta == -1:
                    out.append(_E)
                elif delta == 0:
                    out.append(_N)
                elif delta == 1:
                    out.append(_P)
                else:
                    raise InterlacingViolation(h, self.root, v, base, after)
            hit = tuple(out)
            self._signs[key] = hit
        return hit

    def special_of(self, h: Graph, signs: tuple[VertexSign, ...]) -> frozenset[int]:
        return frozenset(
            u
            for u in range(h.n)
            if signs[u] != _E and any(signs[w] == _E for w in h.neighbors(u))
        )


# ---------------------------------------------------------------------------
# public classification operations
# ---------------------------------------------------------------------------


def vertex_sign(g: Graph, root: RootClass, u: int, ctx: Optional[RootContext] = None) -> VertexSign:
    """Sign of u: multiplicity delta under deleting u (-1/0/+1 -> E/N/P)."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    ctx = ctx or RootContext(g, root)
    return ctx.signs_of(g)[u]


def classify_all(g: Graph, root: RootClass, ctx: Optional[RootContext] = None) -> SignTable:
    ctx = ctx or RootContext(g, root)
    signs = ctx.signs_of(g)
    return SignTable(root, ctx.base, signs, ctx.special_of(g, signs))


def decomposition(g: Graph, root: RootClass, ctx: Optional[RootContext] = None) -> Decomposition:
    """D = essential vertices, A = special vertices, C = the rest."""
    table = classify_all(g, root, ctx)
    d = table.essentials()
    a = table.special
    c = frozenset(range(g.n)) - d - a
    return Decomposition(root, d, a, c)


def is_essential_path(g: Graph, root: RootClass, path, ctx: Optional[RootContext] = None) -> bool:
    """True iff deleting the whole path drops the multiplicity by exactly one."""
    vs = tuple(path)
    if not is_path(g, vs):
        raise ValueError(f"{vs} is not a path of the graph")
    ctx = ctx or RootContext(g, root)
    if ctx.base < 1:
        raise ValueError("essential paths are defined only when the root has multiplicity >= 1")
    return ctx.mult(delete_vertices(g, vs).graph) == ctx.base - 1


# ---------------------------------------------------------------------------
# verifier scaffolding
# ---------------------------------------------------------------------------


class _Recorder:
    def __init__(self):
        self.checked = 0
        self.violations = 0
        self.first: Optional[dict] = None

    def check(self, ok: bool, witness: dict) -> None:
        self.checked += 1
        if not ok:
            self.violations += 1
            if self.first is None:
                self.first = witness


def _report(
    lemma: str,
    g: Graph,
    root: Optional[RootClass],
    rec: _Recorder,
    meta: Optional[dict] = None,
    exploratory: bool = False,
) -> LemmaReport:
    coeffs = tuple(root.minpoly.to_json_coeffs()) if root is not None else ()
    return LemmaReport(
        lemma=lemma,
        graph6=to_graph6(g),
        root_coeffs=coeffs,
        verdict="holds" if rec.violations == 0 else "violated",
        checked=rec.checked,
        violations=rec.violations,
        witnesses=(rec.first,) if rec.first is not None else (),
        meta=meta or {},
        exploratory=exploratory,
    )


def _guarded(lemma, g, root, rec, body, meta=None, exploratory=False) -> LemmaReport:
    """Run body; an InterlacingViolation becomes a violation of this lemma."""
    try:
        body()
    except InterlacingViolation as iv:
        rec.violations += 1
        if rec.first is None:
            rec.first = iv.witness()
    return _report(lemma, g, root, rec, meta, exploratory)


def _sign_names(signs) -> list[str]:
    return [s.value for s in signs]


# ---------------------------------------------------------------------------
# per-root verifiers
# ---------------------------------------------------------------------------


def verify_interlacing(
    g: Graph,
    root: RootClass,
    path_cap: int = DEFAULT_PATH_CAP,
    ctx: Optional[RootContext] = None,
    exploratory: bool = False,
) -> LemmaReport:
    """Vertex deletions move mult by at most one; path deletions drop it by at most one."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()
    base = ctx.base
    for u in range(g.n):
        after = ctx.mult(delete_vertex(g, u).graph)
        rec.check(
            abs(after - base) <= 1,
            {"kind": "vertex", "vertex": u, "base_mult": base, "deleted_mult": after},
        )
    for path in enumerate_paths(g, path_cap):
        after = ctx.mult(delete_vertices(g, path).graph)
        rec.check(
            after >= base - 1,
            {"kind": "path", "path": list(path), "base_mult": base, "deleted_mult": after},
        )
    return _report("interlacing", g, root, rec, exploratory=exploratory)


def verify_essential_exists(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """A root of the matching polynomial forces at least one essential vertex."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        if ctx.base >= 1:
            signs = ctx.signs_of(g)
            rec.check(
                _E in signs,
                {"kind": "no-essential", "base_mult": ctx.base, "signs": _sign_names(signs)},
            )

    return _guarded("essential-exists", g, root, rec, body, exploratory=exploratory)


def verify_neutral_essential_nonadjacency(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """No edge joins a neutral vertex to an essential vertex."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        signs = ctx.signs_of(g)
        for u, v in g.edges():
            rec.check(
                {signs[u], signs[v]} != {_N, _E},
                {"kind": "edge", "edge": [u, v], "signs": [signs[u].value, signs[v].value]},
            )

    return _guarded("neutral-nonadjacency", g, root, rec, body, exploratory=exploratory)


def verify_path_endpoints(
    g: Graph,
    root: RootClass,
    path_cap: int = DEFAULT_PATH_CAP,
    ctx: Optional[RootContext] = None,
    exploratory: bool = False,
) -> LemmaReport:
    """Both end vertices of an essential path are essential vertices."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        base = ctx.base
        if base < 1 and not exploratory:
            return
        signs = ctx.signs_of(g)
        for path in enumerate_paths(g, path_cap):
            if ctx.mult(delete_vertices(g, path).graph) != base - 1:
                continue
            rec.check(
                signs[path[0]] == _E and signs[path[-1]] == _E,
                {
                    "kind": "path",
                    "path": list(path),
                    "endpoint_signs": [signs[path[0]].value, signs[path[-1]].value],
                    "base_mult": base,
                },
            )

    return _guarded("path-endpoints", g, root, rec, body, exploratory=exploratory)


_DELETION_TABLE = {
    _P: {_E: {_E}, _P: {_E, _P}, _N: {_E, _N}},
    _N: {_E: {_E}, _P: {_P, _N}, _N: {_N, _P}},
    _E: {_E: {_E, _N, _P}, _P: {_P}, _N: {_N}},
}


def verify_deletion_tables(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """Sign transitions under single-vertex deletion stay inside the allowed tables.

    Deleting a positive vertex: E->E, P->{E,P}, N->{E,N}.  Deleting a
    neutral vertex: E->E, P->{P,N}, N->{N,P}.  Deleting an essential
    vertex: P->P, N->N, and a vertex essential afterward was essential
    before.
    """
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        signs = ctx.signs_of(g)
        for u in range(g.n):
            deleted = delete_vertex(g, u)
            after_signs = ctx.signs_of(deleted.graph)
            table = _DELETION_TABLE[signs[u]]
            for v in range(g.n):
                if v == u:
                    continue
                before = signs[v]
                after = after_signs[deleted.old_to_new[v]]
                ok = after in table[before]
                if signs[u] == _E and after == _E and before != _E:
                    ok = False
                rec.check(
                    ok,
                    {
                        "kind": "transition",
                        "deleted_vertex": u,
                        "deleted_sign": signs[u].value,
                        "vertex": v,
                        "sign_before": before.value,
                        "sign_after": after.value,
                    },
                )

    return _guarded("deletion-tables", g, root, rec, body, exploratory=exploratory)


def verify_edge_addition(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """Adding an edge at a positive / neutral-essential / essential-essential pair.

    At a positive endpoint the multiplicity and every sign freeze; joining
    neutral to essential drops the multiplicity and swaps the pair to
    positive/neutral; joining two essentials (when deleting both moves the
    multiplicity down by at most one) leaves exactly the two allowed
    outcomes.
    """
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()
    meta = {"essential_pairs": 0, "hypothesis_held": 0}

    def body():
        base = ctx.base
        if base < 1 and not exploratory:
            return
        signs = ctx.signs_of(g)
        for u, v in g.non_edges():
            plus = add_edge(g, u, v)
            mult_plus = ctx.mult(plus)
            plus_signs = ctx.signs_of(plus)
            for a, b in ((u, v), (v, u)):
                if signs[a] == _P:
                    ok = (
                        mult_plus == base
                        and plus_signs[a] == _P
                        and plus_signs[b] == signs[b]
                    )
                    rec.check(
                        ok,
                        {
                            "kind": "positive-endpoint",
                            "pair": [a, b],
                            "base_mult": base,
                            "added_mult": mult_plus,
                            "signs_before": [signs[a].value, signs[b].value],
                            "signs_after": [plus_signs[a].value, plus_signs[b].value],
                        },
                    )
                if signs[a] == _N and signs[b] == _E:
                    ok = (
                        mult_plus == base - 1
                        and plus_signs[a] == _P
                        and plus_signs[b] == _N
                    )
                    rec.check(
                        ok,
                        {
                            "kind": "neutral-essential",
                            "pair": [a, b],
                            "base_mult": base,
                            "added_mult": mult_plus,
                            "signs_after": [plus_signs[a].value, plus_signs[b].value],
                        },
                    )
            if signs[u] == _E and signs[v] == _E:
                meta["essential_pairs"] += 1
                if ctx.mult(delete_vertices(g, (u, v)).graph) >= base - 1:
                    meta["hypothesis_held"] += 1
                    drop = (
                        mult_plus == base - 1
                        and plus_signs[u] == _N
                        and plus_signs[v] == _N
                    )
                    keep = (
                        mult_plus == base
                        and plus_signs[u] == _E
                        and plus_signs[v] == _E
                    )
                    rec.check(
                        drop or keep,
                        {
                            "kind": "essential-essential",
                            "pair": [u, v],
                            "base_mult": base,
                            "added_mult": mult_plus,
                            "signs_after": [plus_signs[u].value, plus_signs[v].value],
                        },
                    )

    return _guarded("edge-addition", g, root, rec, body, meta, exploratory)


def verify_edge_deletion(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """Deleting a special-essential edge freezes everything; deleting a
    positive-neutral edge has exactly the two allowed outcomes."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        base = ctx.base
        if base < 1 and not exploratory:
            return
        signs = ctx.signs_of(g)
        special = ctx.special_of(g, signs)
        for u, v in g.edges():
            minus = delete_edge(g, u, v)
            mult_minus = ctx.mult(minus)
            minus_signs = ctx.signs_of(minus)
            for a, b in ((u, v), (v, u)):
                if a in special and signs[b] == _E:
                    ok = (
                        mult_minus == base
                        and minus_signs[a] == _P
                        and minus_signs[b] == _E
                    )
                    rec.check(
                        ok,
                        {
                            "kind": "special-essential",
                            "edge": [a, b],
                            "base_mult": base,
                            "deleted_mult": mult_minus,
                            "signs_after": [minus_signs[a].value, minus_signs[b].value],
                        },
                    )
                if signs[a] == _P and signs[b] == _N:
                    up = (
                        mult_minus == base + 1
                        and minus_signs[a] == _N
                        and minus_signs[b] == _E
                    )
                    keep = (
                        mult_minus == base
                        and minus_signs[a] == _P
                        and minus_signs[b] == _N
                    )
                    rec.check(
                        up or keep,
                        {
                            "kind": "positive-neutral",
                            "edge": [a, b],
                            "base_mult": base,
                            "deleted_mult": mult_minus,
                            "signs_after": [minus_signs[a].value, minus_signs[b].value],
                        },
                    )

    return _guarded("edge-deletion", g, root, rec, body, exploratory=exploratory)


def verify_special_edge_lemmas(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """Edge deletions at a special vertex keep it special and keep the
    multiplicity, for all three neighbor configurations.

    With two essential neighbors v, w and the path v-u-w not essential,
    deleting {u,v} keeps u special and w essential.  With an essential
    neighbor v and a neutral (resp. positive) neighbor w, deleting {u,w}
    keeps u special and v essential.
    """
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        base = ctx.base
        if base < 1 and not exploratory:
            return
        signs = ctx.signs_of(g)
        special = ctx.special_of(g, signs)
        for u in sorted(special):
            ess = [w for w in g.neighbors(u) if signs[w] == _E]
            neut = [w for w in g.neighbors(u) if signs[w] == _N]
            pos = [w for w in g.neighbors(u) if signs[w] == _P]
            for v in ess:
                for w in ess:
                    if v == w:
                        continue
                    if ctx.mult(delete_vertices(g, (v, u, w)).graph) == base - 1:
                        continue  # path v-u-w essential: lemma does not apply
                    minus = delete_edge(g, u, v)
                    m_signs = ctx.signs_of(minus)
                    m_special = ctx.special_of(minus, m_signs)
                    rec.check(
                        ctx.mult(minus) == base and u in m_special and m_signs[w] == _E,
                        {
                            "kind": "two-essential-neighbors",
                            "special": u,
                            "deleted_edge": [u, v],
                            "other_essential": w,
                            "base_mult": base,
                            "deleted_mult": ctx.mult(minus),
                            "signs_after": _sign_names(m_signs),
                        },
                    )
            for group, kind in ((neut, "neutral-neighbor"), (pos, "positive-neighbor")):
                for w in group:
                    minus = delete_edge(g, u, w)
                    m_signs = ctx.signs_of(minus)
                    m_special = ctx.special_of(minus, m_signs)
                    for v in ess:
                        rec.check(
                            ctx.mult(minus) == base and u in m_special and m_signs[v] == _E,
                            {
                                "kind": kind,
                                "special": u,
                                "deleted_edge": [u, w],
                                "essential_neighbor": v,
                                "base_mult": base,
                                "deleted_mult": ctx.mult(minus),
                                "signs_after": _sign_names(m_signs),
                            },
                        )

    return _guarded("special-edges", g, root, rec, body, exploratory=exploratory)


def verify_stability(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """Deleting a special vertex preserves the sign of every other vertex."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        signs = ctx.signs_of(g)
        special = ctx.special_of(g, signs)
        for u in sorted(special):
            deleted = delete_vertex(g, u)
            after_signs = ctx.signs_of(deleted.graph)
            for v in range(g.n):
                if v == u:
                    continue
                rec.check(
                    signs[v] == after_signs[deleted.old_to_new[v]],
                    {
                        "kind": "sign-change",
                        "special": u,
                        "vertex": v,
                        "sign_before": signs[v].value,
                        "sign_after": after_signs[deleted.old_to_new[v]].value,
                    },
                )

    return _guarded("stability", g, root, rec, body, exploratory=exploratory)


def verify_gallai(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """All vertices essential forces multiplicity exactly one (connected graphs).

    Connectivity is the classical standing hypothesis and is genuinely
    needed: in the two-vertex empty graph every vertex is 0-essential while
    0 has multiplicity two.  Multiplicities add over components, so the
    connected case is the whole content.
    """
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()
    meta = {"all_essential": False, "connected": is_connected(g)}

    def body():
        signs = ctx.signs_of(g)
        if g.n >= 1 and all(s == _E for s in signs):
            meta["all_essential"] = True
            if meta["connected"]:
                rec.check(
                    ctx.base == 1,
                    {"kind": "all-essential", "base_mult": ctx.base},
                )

    return _guarded("gallai", g, root, rec, body, meta, exploratory)


def verify_count_identity(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = False
) -> LemmaReport:
    """mult = (# components induced by D) - |A|; D-components are primitive
    with multiplicity one and C-components have multiplicity zero."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        base = ctx.base
        if base < 1:
            return
        signs = ctx.signs_of(g)
        special = ctx.special_of(g, signs)
        d = frozenset(v for v in range(g.n) if signs[v] == _E)
        c = frozenset(range(g.n)) - d - special
        d_sub = induced_subgraph(g, d)
        d_comps = connected_components(d_sub.graph)
        rec.check(
            base == len(d_comps) - len(special),
            {
                "kind": "count",
                "base_mult": base,
                "d_components": len(d_comps),
                "a_size": len(special),
                "d": sorted(d),
                "a": sorted(special),
            },
        )
        for comp in d_comps:
            comp_graph = induced_subgraph(d_sub.graph, comp).graph
            comp_signs = ctx.signs_of(comp_graph)
            rec.check(
                ctx.mult(comp_graph) == 1 and all(s == _E for s in comp_signs),
                {
                    "kind": "d-component",
                    "component": sorted(comp),
                    "mult": ctx.mult(comp_graph),
                    "signs": _sign_names(comp_signs),
                },
            )
        c_sub = induced_subgraph(g, c)
        for comp in connected_components(c_sub.graph):
            comp_graph = induced_subgraph(c_sub.graph, comp).graph
            rec.check(
                ctx.mult(comp_graph) == 0,
                {
                    "kind": "c-component",
                    "component": sorted(comp),
                    "mult": ctx.mult(comp_graph),
                },
            )

    return _guarded("count-identity", g, root, rec, body, exploratory=exploratory)


def verify_specialness_stability(
    g: Graph, root: RootClass, ctx: Optional[RootContext] = None, exploratory: bool = True
) -> LemmaReport:
    """Exploratory only: is the special set of G-u exactly the special set of
    G minus u, for special u?  Not claimed anywhere; measured."""
    ctx = ctx or RootContext(g, root)
    rec = _Recorder()

    def body():
        signs = ctx.signs_of(g)
        special = ctx.special_of(g, signs)
        for u in sorted(special):
            deleted = delete_vertex(g, u)
            d_signs = ctx.signs_of(deleted.graph)
            d_special = ctx.special_of(deleted.graph, d_signs)
            expected = frozenset(deleted.old_to_new[v] for v in special if v != u)
            rec.check(
                d_special == expected,
                {
                    "kind": "special-set",
                    "special": u,
                    "expected": sorted(expected),
                    "observed": sorted(d_special),
                },
            )

    return _guarded("specialness-stability", g, root, rec, body, exploratory=exploratory)


# ---------------------------------------------------------------------------
# per-graph verifiers (root fixed or quantified internally)
# ---------------------------------------------------------------------------


def verify_godsil_deficiency(g: Graph, mult_hook: Optional[MultHook] = None) -> LemmaReport:
    """Multiplicity of the zero root equals the brute-force deficiency."""
    rec = _Recorder()
    m = multiplicity(ZERO_ROOT, matching_polynomial(g))
    if mult_hook is not None:
        m = mult_hook(g, ZERO_ROOT, m)
    brute = g.n - 2 * max_matching_size(g)
    rec.check(
        m == brute,
        {"kind": "deficiency", "mult_zero": m, "brute_force_deficiency": brute},
    )
    return _report("godsil-deficiency", g, ZERO_ROOT, rec)


def verify_zero_essential_matching(g: Graph, mult_hook: Optional[MultHook] = None) -> LemmaReport:
    """Zero-essential vertices are exactly those missed by some maximum
    matching, and no vertex is zero-neutral."""
    ctx = RootContext(g, ZERO_ROOT, mult_hook)
    rec = _Recorder()

    def body():
        signs = ctx.signs_of(g)
        essential = frozenset(v for v in range(g.n) if signs[v] == _E)
        missed = missed_by_some_maximum_matching(g)
        rec.check(
            essential == missed,
            {
                "kind": "essential-vs-missed",
                "essential": sorted(essential),
                "missed": sorted(missed),
            },
        )
        for v in range(g.n):
            rec.check(
                signs[v] != _N,
                {"kind": "zero-neutral", "vertex": v},
            )

    return _guarded("zero-essential", g, ZERO_ROOT, rec, body)


def verify_simple_roots_vt(g: Graph) -> LemmaReport:
    """Connected vertex-transitive graphs have a square-free matching polynomial.

    Connectivity matters: the disjoint union of two edges is vertex
    transitive with matching polynomial (x^2 - 1)^2.
    """
    if not is_vertex_transitive(g):
        raise ValueError("verify_simple_roots_vt requires a vertex-transitive graph")
    rec = _Recorder()
    connected = is_connected(g)
    meta = {"connected": connected, "factors": 0}
    if connected:
        support = root_support(g)
        meta["factors"] = len(support.factors)
        for rc, exp in support.factors:
            rec.check(
                exp == 1,
                {
                    "kind": "repeated-root",
                    "root_coeffs": rc.minpoly.to_json_coeffs(),
                    "exponent": exp,
                },
            )
    return _report("simple-roots-vt", g, None, rec, meta=meta)


def exploratory_roots(g: Graph) -> list[RootClass]:
    """Root classes with multiplicity zero in G but appearing in some G-u.

    These are the natural mult-0 classes to probe: signs are still defined
    for them, and the deleted-subgraph spectra are where they show up.
    """
    have = {rc for rc, _ in root_support(g).factors}
    seen: dict[tuple, RootClass] = {}
    for v in range(g.n):
        sub = delete_vertex(g, v).graph
        if sub.n == 0:
            continue
        for rc, _ in factor(matching_polynomial(sub)).factors:
            if rc not in have:
                seen.setdefault(rc.sort_key(), rc)
    return [seen[k] for k in sorted(seen)]
