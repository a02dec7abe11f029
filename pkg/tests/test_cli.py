import json
import os
import subprocess
import sys

import pytest

from framecxn.cli import main
from framecxn.synth import make_corpus

from .conftest import FIG1_RECORD, FIG5_RECORD, write_jsonl


def run_cli(*args, env=None):
    full_env = os.environ.copy()
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "framecxn", *args],
                          capture_output=True, text=True, env=full_env)


@pytest.fixture
def learned(tmp_path):
    corpus = write_jsonl(tmp_path / "corpus.jsonl", [FIG1_RECORD])
    grammar = tmp_path / "grammar.json"
    assert main(["learn", "--corpus", str(corpus),
                 "--out", str(grammar)]) == 0
    return tmp_path, grammar


def test_learn_writes_grammar_and_stats(learned):
    tmp_path, grammar = learned
    doc = json.loads(grammar.read_text())
    assert doc["version"] == 1
    assert len(doc["fe"]) == len(doc["argst"]) == len(doc["roleset"]) == 1
    assert len(doc["links"]) == 3
    stats = json.loads((tmp_path / "grammar.stats.json").read_text())
    assert stats["instances_learnt"] == 1
    assert stats["instances_skipped"] == 0


def test_learn_honours_explicit_stats_path(tmp_path):
    corpus = write_jsonl(tmp_path / "corpus.jsonl", [FIG1_RECORD])
    stats_path = tmp_path / "elsewhere.json"
    assert main(["learn", "--corpus", str(corpus),
                 "--out", str(tmp_path / "g.json"),
                 "--stats", str(stats_path)]) == 0
    assert json.loads(stats_path.read_text())["instances_seen"] == 1


def test_extract_and_evaluate_round_trip(learned):
    tmp_path, grammar = learned
    new = write_jsonl(tmp_path / "new.jsonl", [FIG5_RECORD])
    pred = tmp_path / "pred.jsonl"
    assert main(["extract", "--grammar", str(grammar), "--in", str(new),
                 "--out", str(pred)]) == 0
    records = [json.loads(line) for line in pred.read_text().splitlines()]
    assert len(records) == 1
    assert records[0]["frames"] == [{
        "roleset": "tell.01", "v": [3, 4],
        "roles": {"arg0": [2, 3], "arg1": [6, 11], "arg2": [4, 6]}}]

    result = run_cli("evaluate", "--pred", str(pred), "--gold", str(pred),
                     "--level", "roleset")
    assert result.returncode == 0
    payload = json.loads(result.stdout[:result.stdout.index("\n\n")])
    assert payload["precision"] == payload["recall"] == payload["f1"] == 100.0
    assert "Roleset" in result.stdout


def test_evaluate_both_levels(learned):
    tmp_path, grammar = learned
    gold = write_jsonl(tmp_path / "gold.jsonl", [FIG1_RECORD])
    result = run_cli("evaluate", "--pred", str(gold), "--gold", str(gold))
    assert result.returncode == 0
    assert "Frame" in result.stdout and "Roleset" in result.stdout


def test_report_layout(learned):
    _, grammar = learned
    result = run_cli("report", "--grammar", str(grammar), "--name", "DEMO")
    assert result.returncode == 0
    assert "GRAMMAR REPORT FOR DEMO" in result.stdout
    assert "All cxns: 3" in result.stdout
    assert "Average degree (fe-argst): 1.00" in result.stdout


def test_query_commands(learned):
    tmp_path, grammar = learned
    result = run_cli("query", "assoc", "arg0(np)-v(v)-arg2(np)-arg1(np)-1",
                     "--grammar", str(grammar))
    assert result.returncode == 0
    assert json.loads(result.stdout) == [{"roleset": "tell.01", "weight": 1}]

    result = run_cli("query", "sim", "tell(verb)", "tell(verb)",
                     "--grammar", str(grammar))
    assert json.loads(result.stdout)["cosine"] == 1.0

    result = run_cli("query", "nearest", "tell(verb)", "--k", "3",
                     "--grammar", str(grammar))
    assert json.loads(result.stdout) == []

    csv_path = tmp_path / "zipf.csv"
    result = run_cli("query", "zipf", "--group", "all",
                     "--csv", str(csv_path), "--grammar", str(grammar))
    assert result.returncode == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("rank,")
    assert len(lines) == 4


def test_unknown_mnemonic_fails_cleanly(learned):
    _, grammar = learned
    result = run_cli("query", "assoc", "nope-1", "--grammar", str(grammar))
    assert result.returncode == 1
    assert "UnknownCategoryError" in result.stderr


def test_missing_input_fails_cleanly(tmp_path):
    result = run_cli("learn", "--corpus", str(tmp_path / "absent.jsonl"),
                     "--out", str(tmp_path / "g.json"))
    assert result.returncode == 1
    assert "error:" in result.stderr


def test_bad_corpus_line_reports_context(tmp_path):
    corpus = tmp_path / "corpus.jsonl"
    ok = json.dumps(FIG1_RECORD)
    corpus.write_text(ok + "\n" + '{"id": "x"}' + "\n", encoding="utf-8")
    result = run_cli("learn", "--corpus", str(corpus),
                     "--out", str(tmp_path / "g.json"))
    assert result.returncode == 1
    assert "corpus.jsonl:2" in result.stderr


def test_bad_extraction_line_reports_context(learned):
    tmp_path, grammar = learned
    infile = tmp_path / "in.jsonl"
    infile.write_text(json.dumps(FIG5_RECORD) + "\n" + "{broken\n",
                      encoding="utf-8")
    out = tmp_path / "p.jsonl"
    result = run_cli("extract", "--grammar", str(grammar),
                     "--in", str(infile), "--out", str(out))
    assert result.returncode == 1
    assert "in.jsonl:2" in result.stderr
    assert not out.exists()  # nothing half-written


def test_extract_is_invariant_under_worker_count(tmp_path):
    corpus = write_jsonl(tmp_path / "c.jsonl", make_corpus(40, seed=3))
    grammar = tmp_path / "g.json"
    assert main(["learn", "--corpus", str(corpus), "--out", str(grammar)]) == 0
    outputs = []
    for workers in ("1", "3"):
        out = tmp_path / f"p{workers}.jsonl"
        result = run_cli("extract", "--grammar", str(grammar),
                         "--in", str(corpus), "--out", str(out),
                         env={"FRAMECXN_WORKERS": workers})
        assert result.returncode == 0, result.stderr
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_learn_is_byte_deterministic(tmp_path):
    corpus = write_jsonl(tmp_path / "c.jsonl", make_corpus(25, seed=1))
    blobs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        assert main(["learn", "--corpus", str(corpus),
                     "--out", str(out)]) == 0
        blobs.append(out.read_bytes())
    assert blobs[0] == blobs[1]
