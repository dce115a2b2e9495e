"""Benchmark the compiled kernels against the pure-Python twins.

Times the three kernel entry points on realistic workloads: matching
counts over every isomorphism class at max_n, canonical labeling of random
relabelings, and the full labeled sweep.  Run via ``matchroots bench``.
"""

from __future__ import annotations

import random
import time

from . import _kernels_py, kernels
from .graphs import enumerate_graphs_up_to_iso, relabel


def _load_compiled():
    try:
        from . import _kernels_c

        return _kernels_c
    except ImportError:
        return None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_benchmark(max_n: int = 6, repeat: int = 3) -> dict[str, dict[str, float]]:
    if not 2 <= max_n <= 7:
        raise ValueError("bench supports max_n in 2..7")
    compiled = _load_compiled()
    print(f"active backend: {kernels.BACKEND}")
    if compiled is None:
        print("compiled kernels unavailable; timing the pure backend only")

    graphs = [g for n in range(2, max_n + 1) for g in enumerate_graphs_up_to_iso(n)]
    rng = random.Random(99)
    relabeled = []
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        relabeled.append(relabel(g, perm))

    def counts_with(mod):
        return lambda: [mod.match_count_vector(g.n, g.adj) for g in graphs]

    def canon_with(mod):
        return lambda: [mod.min_adjacency_bits(g.n, g.adj) for g in relabeled]

    sweep_n = min(max_n, 6)

    def sweep_with(mod):
        return lambda: mod.canonical_sweep(sweep_n)

    workloads = [
        (f"match counts ({len(graphs)} graphs, n<={max_n})", counts_with),
        (f"canonical labels ({len(relabeled)} graphs)", canon_with),
        (f"labeled sweep (n={sweep_n})", sweep_with),
    ]
    results: dict[str, dict[str, float]] = {}
    for name, make in workloads:
        row: dict[str, float] = {"python": _time(make(_kernels_py), repeat)}
        if compiled is not None:
            row["cython"] = _time(make(compiled), repeat)
        results[name] = row
        line = f"{name}: python {row['python'] * 1e3:9.1f} ms"
        if "cython" in row:
            speedup = row["python"] / row["cython"] if row["cython"] > 0 else float("inf")
            line += f" | cython {row['cython'] * 1e3:9.1f} ms | speedup {speedup:6.1f}x"
        print(line)
    return results
