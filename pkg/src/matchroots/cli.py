"""Command-line interface.

Subcommands: ``poly`` (matching polynomial and factorization), ``classify``
(per-vertex signs for a root), ``decompose`` (D/A/C partition and the count
identity), ``verify`` (corpus campaign), ``fixtures`` (built-in graph6
set), ``bench`` (compiled vs pure kernel comparison).

Exit codes: 0 clean, 1 campaign violations, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .campaign import ALL_LEMMAS, CampaignConfig, run_campaign
from .factorint import FactoredPoly, RootClass
from .fixtures import fixture_graphs
from .graphs import Graph, parse_edge_text, parse_graph6, to_graph6
from .intpoly import IntPoly
from .matching import deficiency, match_counts, matching_number, matching_polynomial, root_support
from .structure import SignTable, classify_all, decomposition

_SIGN_COLOR = {
    "essential": "salmon",
    "neutral": "lightgray",
    "positive": "palegreen",
    "special": "gold",
}


class CliError(Exception):
    pass


def _parse_graph(text: str) -> Graph:
    try:
        if ";" in text:
            return parse_edge_text(text)
        return parse_graph6(text)
    except ValueError as ex:
        raise CliError(f"bad graph input: {ex}") from ex


def _select_roots(selector: str, support: FactoredPoly) -> list[RootClass]:
    if selector == "all":
        return support.root_classes()
    if selector.startswith("#"):
        try:
            k = int(selector[1:])
        except ValueError as ex:
            raise CliError(f"bad root index {selector!r}") from ex
        roots = support.root_classes()
        if not 0 <= k < len(roots):
            raise CliError(f"root index {k} out of range (0..{len(roots) - 1})")
        return [roots[k]]
    if selector.startswith("poly:"):
        try:
            coeffs = [int(c) for c in selector[5:].split(",")]
        except ValueError as ex:
            raise CliError(f"bad coefficient list {selector!r}") from ex
        try:
            return [RootClass.validated(IntPoly.of(*coeffs))]
        except ValueError as ex:
            raise CliError(str(ex)) from ex
    raise CliError(f"root selector must be 'all', '#k' or 'poly:c0,c1,...', got {selector!r}")


def _sign_word(table: SignTable, v: int) -> str:
    word = table.signs[v].value
    if v in table.special:
        word += " special"
    return word


def cmd_poly(args) -> int:
    g = _parse_graph(args.graph)
    mu = matching_polynomial(g)
    counts = match_counts(g)
    print(f"graph: {to_graph6(g)} (n={g.n}, m={g.m})")
    print(f"mu(x) = {mu.to_text()}")
    print(f"factored: {root_support(g).to_text()}")
    print(f"match counts: {list(counts.p)}")
    print(f"matching number: {matching_number(g)}")
    print(f"deficiency: {deficiency(g)}")
    return 0


def _write_dot(path: str, g: Graph, table: SignTable) -> None:
    lines = ["graph G {", "  node [style=filled];"]
    for v in range(g.n):
        sign = table.signs[v].value
        color = _SIGN_COLOR["special"] if v in table.special else _SIGN_COLOR[sign]
        label = f"{v}: {_sign_word(table, v)}"
        lines.append(f'  {v} [label="{label}", fillcolor={color}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_classify(args) -> int:
    g = _parse_graph(args.graph)
    support = root_support(g)
    roots = _select_roots(args.root, support)
    if args.dot and len(roots) != 1:
        raise CliError("--dot needs a single root (use '#k' or 'poly:...')")
    print(f"graph: {to_graph6(g)} (n={g.n}, m={g.m})")
    print(f"mu(x) = {matching_polynomial(g).to_text()} = {support.to_text()}")
    for rc in roots:
        table = classify_all(g, rc)
        print(f"root {rc.to_text()}: multiplicity {table.base_mult}")
        for v in range(g.n):
            print(f"  {v}: {_sign_word(table, v)}")
        print(f"  special: {sorted(table.special)}")
        if args.dot:
            _write_dot(args.dot, g, table)
            print(f"  dot written to {args.dot}")
    return 0


def cmd_decompose(args) -> int:
    g = _parse_graph(args.graph)
    support = root_support(g)
    roots = _select_roots(args.root, support)
    print(f"graph: {to_graph6(g)} (n={g.n}, m={g.m})")
    for rc in roots:
        dec = decomposition(g, rc)
        mult = support.multiplicity_of(rc)
        print(f"root {rc.to_text()}: multiplicity {mult}")
        print(f"  D = {sorted(dec.d)}")
        print(f"  A = {sorted(dec.a)}")
        print(f"  C = {sorted(dec.c)}")
        if mult >= 1:
            from .graphs import connected_components, induced_subgraph

            comps = connected_components(induced_subgraph(g, dec.d).graph)
            ok = "OK" if mult == len(comps) - len(dec.a) else "MISMATCH"
            print(f"  identity mult = c(D) - |A|: {mult} = {len(comps)} - {len(dec.a)}  [{ok}]")
        else:
            print("  identity check skipped (multiplicity 0)")
    return 0


def cmd_verify(args) -> int:
    lemmas = tuple(s.strip() for s in args.lemmas.split(",") if s.strip()) if args.lemmas else ()
    try:
        cfg = CampaignConfig(
            max_n=args.max_n,
            corpus_path=args.corpus,
            lemmas=lemmas,
            path_cap=args.path_cap,
            exploratory=args.exploratory,
            jobs=args.jobs,
            out_path=args.out,
        )
    except ValueError as ex:
        raise CliError(str(ex)) from ex
    summary, _ = run_campaign(cfg)
    print(f"graphs: {summary.graphs}")
    print(f"(graph, root) pairs: {summary.pairs}")
    for lemma, bucket in sorted(summary.per_lemma.items()):
        line = f"  {lemma}: {bucket['checked']} checked, {bucket['violations']} violations"
        if bucket["exploratory_reports"]:
            line += (
                f" (exploratory: {bucket['exploratory_reports']} reports,"
                f" {bucket['exploratory_violations']} violations)"
            )
        print(line)
    print(f"violations: {summary.violations}")
    print(f"wall time: {summary.wall_time_s:.2f}s")
    if args.out:
        print(f"report written to {args.out}")
    return 0 if summary.violations == 0 else 1


def cmd_fixtures(args) -> int:
    lines = [to_graph6(g) for _, g in fixture_graphs()]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"{len(lines)} fixtures written to {args.out}")
    else:
        for (name, g), line in zip(fixture_graphs(), lines):
            print(line)
    return 0


def cmd_bench(args) -> int:
    from .bench import run_benchmark

    run_benchmark(max_n=args.max_n, repeat=args.repeat)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="matchroots",
        description="Exact matching-polynomial root structure and verification campaigns.",
    )
    ap.add_argument("--version", action="version", version=f"matchroots {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="matching polynomial, factorization, deficiency")
    p.add_argument("graph", help="graph6 string or edge list 'n; u-v, u-v, ...'")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("classify", help="per-vertex signs for a root class")
    p.add_argument("graph")
    p.add_argument("--root", default="all", help="'all', '#k', or 'poly:c0,c1,...'")
    p.add_argument("--dot", metavar="PATH", help="write a colored DOT file")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("decompose", help="D/A/C decomposition and count identity")
    p.add_argument("graph")
    p.add_argument("--root", default="all")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--corpus", metavar="FILE", help="graph6 file instead of generated corpus")
    p.add_argument("--lemmas", metavar="LIST", help=f"comma list from: {', '.join(ALL_LEMMAS)}")
    p.add_argument("--path-cap", type=int, default=4, dest="path_cap")
    p.add_argument("--exploratory", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="PATH", help="write the JSON-lines report here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("fixtures", help="emit the built-in graph6 fixture set")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(fn=cmd_fixtures)

    p = sub.add_parser("bench", help="compare compiled and pure kernels")
    p.add_argument("--max-n", type=int, default=6, dest="max_n")
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
