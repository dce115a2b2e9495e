import json

import pytest

from matchroots.campaign import (
    ALL_LEMMAS,
    CampaignConfig,
    corpus_graph6_lines,
    evaluate_graph,
    run_campaign,
)
from matchroots.cli import main
from matchroots.fixtures import fixture_graphs, petersen
from matchroots.graphs import is_vertex_transitive, parse_graph6, to_graph6


def test_campaign_small_clean(tmp_path):
    out = tmp_path / "report.jsonl"
    cfg = CampaignConfig(max_n=4, out_path=str(out))
    summary, lines = run_campaign(cfg)
    assert summary.violations == 0
    assert summary.graphs == 18  # 1 + 2 + 4 + 11
    body = out.read_text().strip().split("\n")
    assert body == lines
    objs = [json.loads(line) for line in body]
    assert "summary" in objs[-1]
    for obj in objs[:-1]:
        assert obj["verdict"] in ("holds", "violated")
        assert set(obj) >= {"lemma", "graph6", "root_coeffs", "verdict", "witnesses"}


def test_campaign_sorted_and_deterministic_across_jobs(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_campaign(CampaignConfig(max_n=4, jobs=1, out_path=str(a)))
    run_campaign(CampaignConfig(max_n=4, jobs=2, out_path=str(b)))
    assert a.read_bytes() == b.read_bytes()


def test_campaign_lemma_selection():
    cfg = CampaignConfig(max_n=3, lemmas=("stability", "gallai"))
    summary, lines = run_campaign(cfg)
    lemmas = {json.loads(line)["lemma"] for line in lines[:-1]}
    assert lemmas <= {"stability", "gallai"}
    with pytest.raises(ValueError):
        CampaignConfig(max_n=3, lemmas=("no-such-lemma",))
    with pytest.raises(ValueError):
        CampaignConfig(max_n=9)


def test_campaign_corpus_file(tmp_path):
    corpus = tmp_path / "fixtures.g6"
    corpus.write_text("\n".join(to_graph6(g) for _, g in fixture_graphs()) + "\n")
    cfg = CampaignConfig(
        corpus_path=str(corpus), lemmas=("simple-roots-vt", "godsil-deficiency")
    )
    summary, lines = run_campaign(cfg)
    assert summary.graphs == len(fixture_graphs())
    assert summary.violations == 0
    vt_reports = [json.loads(l) for l in lines[:-1] if json.loads(l)["lemma"] == "simple-roots-vt"]
    assert len(vt_reports) == len(fixture_graphs())  # every fixture is vertex transitive


def test_campaign_rejects_oversized_ingested_graph(tmp_path):
    from matchroots.fixtures import cycle

    corpus = tmp_path / "big.g6"
    corpus.write_text(to_graph6(cycle(13)) + "\n")
    with pytest.raises(ValueError):
        corpus_graph6_lines(CampaignConfig(corpus_path=str(corpus)))


def test_campaign_corrupted_oracle_reports_violations():
    def lie(h, rc, m):
        return m + 2 if h.n == 2 else m

    cfg = CampaignConfig(max_n=2, lemmas=("godsil-deficiency",))
    summary, lines = run_campaign(cfg, mult_hook=lie)
    assert summary.violations > 0
    bad = [json.loads(l) for l in lines[:-1] if json.loads(l)["verdict"] == "violated"]
    assert bad and bad[0]["witnesses"]


def test_evaluate_graph_counts_pairs():
    pairs, reports = evaluate_graph("Cs", CampaignConfig(max_n=4))
    assert pairs == 2  # x and x^2 - 3
    assert reports


def test_exploratory_flag_adds_reports():
    base_cfg = CampaignConfig(max_n=3)
    expl_cfg = CampaignConfig(max_n=3, exploratory=True)
    _, base_lines = run_campaign(base_cfg)
    summary, lines = run_campaign(expl_cfg)
    assert len(lines) > len(base_lines)
    assert summary.violations == 0  # exploratory violations never fail a campaign
    flagged = [json.loads(l) for l in lines[:-1] if json.loads(l).get("exploratory")]
    assert flagged
    assert {o["lemma"] for o in flagged} >= {"specialness-stability"}


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_poly_star(capsys):
    assert main(["poly", "Cs"]) == 0
    out = capsys.readouterr().out
    assert "x^4 - 3*x^2" in out
    assert "x^2 * (x^2 - 3)" in out
    assert "deficiency: 2" in out


def test_cli_poly_k3_and_empty(capsys):
    assert main(["poly", "Bw"]) == 0
    assert "x^3 - 3*x" in capsys.readouterr().out
    assert main(["poly", "2;"]) == 0
    assert "mu(x) = x^2" in capsys.readouterr().out


def test_cli_poly_edge_list_input(capsys):
    assert main(["poly", "4; 0-1, 0-2, 0-3"]) == 0
    assert "x^4 - 3*x^2" in capsys.readouterr().out


def test_cli_poly_bad_input(capsys):
    assert main(["poly", "~~nonsense"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_classify(capsys):
    assert main(["classify", "Cs", "--root", "#0"]) == 0
    out = capsys.readouterr().out
    assert "0: positive special" in out
    assert "1: essential" in out
    assert "special: [0]" in out


def test_cli_classify_rejects_reducible_root(capsys):
    assert main(["classify", "Cs", "--root", "poly:-1,0,1"]) == 2
    assert "reducible" in capsys.readouterr().err


def test_cli_classify_accepts_explicit_irreducible_root(capsys):
    assert main(["classify", "Cs", "--root", "poly:-2,0,1"]) == 0
    out = capsys.readouterr().out
    assert "multiplicity 0" in out


def test_cli_classify_dot(tmp_path, capsys):
    dot = tmp_path / "star.dot"
    assert main(["classify", "Cs", "--root", "#0", "--dot", str(dot)]) == 0
    text = dot.read_text()
    assert text.startswith("graph G {") and text.rstrip().endswith("}")
    node_lines = [l for l in text.splitlines() if "fillcolor=" in l]
    assert len(node_lines) == 4
    assert sum(1 for l in text.splitlines() if " -- " in l) == 3
    assert main(["classify", "Cs", "--root", "all", "--dot", str(dot)]) == 2


def test_cli_decompose(capsys):
    assert main(["decompose", "Cs", "--root", "#0"]) == 0
    out = capsys.readouterr().out
    assert "D = [1, 2, 3]" in out
    assert "A = [0]" in out
    assert "2 = 3 - 1" in out and "[OK]" in out


def test_cli_decompose_mult_zero_root(capsys):
    assert main(["decompose", "Cs", "--root", "poly:-2,0,1"]) == 0
    out = capsys.readouterr().out
    assert "identity check skipped" in out


def test_cli_verify_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "rep.jsonl"
    assert main(["verify", "--max-n", "3", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "violations: 0" in text
    assert out.exists()
    assert main(["verify", "--max-n", "3", "--lemmas", "bogus"]) == 2
    capsys.readouterr()
    assert main(["verify", "--max-n", "9"]) == 2


def test_cli_verify_exploratory(capsys):
    assert main(["verify", "--max-n", "2", "--exploratory"]) == 0
    assert "exploratory" in capsys.readouterr().out


def test_cli_fixtures(tmp_path, capsys):
    assert main(["fixtures"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert "Bw" in lines  # K3 = C3
    for line in lines:
        g = parse_graph6(line)
        assert to_graph6(g) == line
    pet = parse_graph6(lines[-1])
    assert pet.n == 10 and pet.m == 15 and is_vertex_transitive(pet)
    assert pet == petersen()
    out = tmp_path / "fix.g6"
    assert main(["fixtures", "--out", str(out)]) == 0
    assert out.read_text().strip().split("\n") == lines


def test_all_lemma_names_documented():
    assert len(ALL_LEMMAS) == len(set(ALL_LEMMAS))
    for lemma in ("stability", "gallai", "count-identity", "interlacing"):
        assert lemma in ALL_LEMMAS
