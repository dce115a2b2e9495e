"""Corpus verification campaigns: fan (graph, root, lemma) work out, merge
reports deterministically, summarize.

A campaign walks a corpus (generated isomorphism classes up to max_n, or a
graph6 file), runs the selected verifiers on every graph and every root
class of its matching polynomial, and emits one JSON line per report.  The
report stream is sorted by (graph6, root, lemma) and contains nothing
run-dependent, so two runs at any parallelism degree are byte-identical;
wall time lives only in the returned summary, never in the file.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .graphs import parse_graph6, to_graph6, enumerate_graphs_up_to_iso, is_vertex_transitive
from .matching import root_support
from .structure import (
    DEFAULT_PATH_CAP,
    MultHook,
    RootContext,
    exploratory_roots,
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
    LemmaReport,
)

GENERATED_MAX_N = 7
INGESTED_MAX_N = 12

PER_GRAPH_LEMMAS = ("godsil-deficiency", "zero-essential", "simple-roots-vt")

_PER_ROOT: dict[str, Callable] = {
    "interlacing": lambda g, rc, ctx, cap, ex: verify_interlacing(
        g, rc, path_cap=cap, ctx=ctx, exploratory=ex
    ),
    "essential-exists": lambda g, rc, ctx, cap, ex: verify_essential_exists(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "neutral-nonadjacency": lambda g, rc, ctx, cap, ex: verify_neutral_essential_nonadjacency(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "path-endpoints": lambda g, rc, ctx, cap, ex: verify_path_endpoints(
        g, rc, path_cap=cap, ctx=ctx, exploratory=ex
    ),
    "deletion-tables": lambda g, rc, ctx, cap, ex: verify_deletion_tables(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "edge-addition": lambda g, rc, ctx, cap, ex: verify_edge_addition(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "edge-deletion": lambda g, rc, ctx, cap, ex: verify_edge_deletion(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "special-edges": lambda g, rc, ctx, cap, ex: verify_special_edge_lemmas(
        g, rc, ctx=ctx, exploratory=ex
    ),
    "stability": lambda g, rc, ctx, cap, ex: verify_stability(g, rc, ctx=ctx, exploratory=ex),
    "gallai": lambda g, rc, ctx, cap, ex: verify_gallai(g, rc, ctx=ctx, exploratory=ex),
    "count-identity": lambda g, rc, ctx, cap, ex: verify_count_identity(
        g, rc, ctx=ctx, exploratory=ex
    ),
}

PER_ROOT_LEMMAS = tuple(_PER_ROOT)
EXPLORATORY_LEMMAS = ("specialness-stability",)
ALL_LEMMAS = PER_GRAPH_LEMMAS + PER_ROOT_LEMMAS + EXPLORATORY_LEMMAS


@dataclass(frozen=True)
class CampaignConfig:
    max_n: int = 5
    corpus_path: Optional[str] = None
    lemmas: tuple[str, ...] = ()  # empty selects every lemma
    path_cap: int = DEFAULT_PATH_CAP
    exploratory: bool = False
    jobs: int = 1
    out_path: Optional[str] = None

    def __post_init__(self):
        if self.corpus_path is None and not 1 <= self.max_n <= GENERATED_MAX_N:
            raise ValueError(f"generated corpora support max_n in 1..{GENERATED_MAX_N}")
        unknown = set(self.lemmas) - set(ALL_LEMMAS)
        if unknown:
            raise ValueError(f"unknown lemmas: {sorted(unknown)}")
        if self.path_cap < 1:
            raise ValueError("path cap must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def selected(self) -> set[str]:
        return set(self.lemmas) if self.lemmas else set(ALL_LEMMAS)


@dataclass
class CampaignSummary:
    graphs: int = 0
    pairs: int = 0
    per_lemma: dict = field(default_factory=dict)
    violations: int = 0
    wall_time_s: float = 0.0

    def to_json_obj(self) -> dict:
        # wall time is intentionally absent: report files must be run-independent
        return {
            "summary": {
                "graphs": self.graphs,
                "pairs": self.pairs,
                "per_lemma": {k: dict(v) for k, v in sorted(self.per_lemma.items())},
                "violations": self.violations,
            }
        }


def corpus_graph6_lines(cfg: CampaignConfig) -> list[str]:
    if cfg.corpus_path is None:
        out = []
        for n in range(1, cfg.max_n + 1):
            out.extend(to_graph6(g) for g in enumerate_graphs_up_to_iso(n))
        return out
    out = []
    with open(cfg.corpus_path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            g = parse_graph6(line)
            if g.n > INGESTED_MAX_N:
                raise ValueError(
                    f"{cfg.corpus_path}:{lineno}: graph on {g.n} vertices exceeds "
                    f"the ingestion limit of {INGESTED_MAX_N}"
                )
            out.append(to_graph6(g))
    return out


def evaluate_graph(
    g6: str, cfg: CampaignConfig, mult_hook: Optional[MultHook] = None
) -> tuple[int, list[dict]]:
    """All selected reports for one graph; returns (root pairs counted, reports)."""
    g = parse_graph6(g6)
    selected = cfg.selected()
    reports: list[LemmaReport] = []
    if "godsil-deficiency" in selected:
        reports.append(verify_godsil_deficiency(g, mult_hook=mult_hook))
    if "zero-essential" in selected:
        reports.append(verify_zero_essential_matching(g, mult_hook=mult_hook))
    if "simple-roots-vt" in selected and is_vertex_transitive(g):
        reports.append(verify_simple_roots_vt(g))
    pairs = 0
    for rc, _ in root_support(g).factors:
        pairs += 1
        ctx = RootContext(g, rc, mult_hook)
        for lemma in PER_ROOT_LEMMAS:
            if lemma in selected:
                reports.append(_PER_ROOT[lemma](g, rc, ctx, cfg.path_cap, False))
        if cfg.exploratory and "specialness-stability" in selected:
            reports.append(verify_specialness_stability(g, rc, ctx=ctx, exploratory=True))
    if cfg.exploratory:
        for rc in exploratory_roots(g):
            pairs += 1
            ctx = RootContext(g, rc, mult_hook)
            for lemma in PER_ROOT_LEMMAS:
                if lemma in selected:
                    reports.append(_PER_ROOT[lemma](g, rc, ctx, cfg.path_cap, True))
    return pairs, [r.to_json_obj() for r in reports]


def _worker(args: tuple[str, CampaignConfig]) -> tuple[int, list[dict]]:
    return evaluate_graph(args[0], args[1])


def _sort_key(obj: dict):
    coeffs = tuple(int(c) for c in obj["root_coeffs"])
    return (obj["graph6"], len(coeffs), coeffs, obj["lemma"], obj["exploratory"])


def serialize_report_line(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run_campaign(
    cfg: CampaignConfig, mult_hook: Optional[MultHook] = None
) -> tuple[CampaignSummary, list[str]]:
    """Run the campaign; returns (summary, report lines incl. trailing summary line).

    Writes the lines to cfg.out_path when set.  The hook argument is a
    test-only corruption point and forces in-process execution.
    """
    t0 = time.perf_counter()
    lines6 = corpus_graph6_lines(cfg)
    if cfg.jobs > 1 and mult_hook is None:
        with multiprocessing.Pool(cfg.jobs) as pool:
            results = pool.map(_worker, [(g6, cfg) for g6 in lines6], chunksize=8)
    else:
        results = [evaluate_graph(g6, cfg, mult_hook) for g6 in lines6]

    summary = CampaignSummary(graphs=len(lines6))
    objs: list[dict] = []
    for pairs, reports in results:
        summary.pairs += pairs
        objs.extend(reports)
    objs.sort(key=_sort_key)

    for obj in objs:
        bucket = summary.per_lemma.setdefault(
            obj["lemma"],
            {
                "reports": 0,
                "checked": 0,
                "violations": 0,
                "exploratory_reports": 0,
                "exploratory_violations": 0,
            },
        )
        if obj["exploratory"]:
            bucket["exploratory_reports"] += 1
            bucket["exploratory_violations"] += obj["violations"]
        else:
            bucket["reports"] += 1
            bucket["checked"] += obj["checked"]
            bucket["violations"] += obj["violations"]
            summary.violations += obj["violations"]

    lines = [serialize_report_line(o) for o in objs]
    lines.append(serialize_report_line(summary.to_json_obj()))
    summary.wall_time_s = time.perf_counter() - t0

    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    return summary, lines
