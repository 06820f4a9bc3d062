import json
import shutil
from pathlib import Path

import numpy as np
import pytest

from stylebreach.cli import main

from textgen import AUTHOR_A, AUTHOR_B, author_text

FAST_GROUPS = "contractions,quotation_marks,readability"


def read_jsonl(path):
    return [json.loads(line) for line in Path(path).read_text().splitlines()]


def tree_bytes(directory):
    return {
        p.name: p.read_bytes()
        for p in sorted(Path(directory).iterdir())
        if p.is_file()
    }


@pytest.fixture(scope="module")
def ws(tmp_path_factory):
    """Sources -> synthesized corpus -> trained model, shared by the tests."""
    root = tmp_path_factory.mktemp("cli")
    sources = root / "sources"
    sources.mkdir()
    rng = np.random.default_rng(2024)
    (sources / "a.txt").write_text(author_text(AUTHOR_A, 1200, rng), encoding="utf-8")
    (sources / "b.txt").write_text(author_text(AUTHOR_B, 1200, rng), encoding="utf-8")

    corpus = root / "corpus"
    assert main([
        "synthesize", "--sources", str(sources), "--out-dir", str(corpus),
        "--n-docs", "44", "--seed", "3",
        "--min-segment-sentences", "5", "--max-segment-sentences", "9",
    ]) == 0

    model = root / "model.bin"
    assert main([
        "train", "--corpus", str(corpus), "--model", str(model),
        "--out-dir", str(root / "train_out"), "--groups", FAST_GROUPS,
        "--seed", "5",
    ]) == 0
    return root, sources, corpus, model


def subset_corpus(corpus, dest, ids, with_truth):
    dest.mkdir()
    for i in ids:
        shutil.copy(corpus / f"problem-{i}.txt", dest / f"problem-{i}.txt")
        if with_truth:
            shutil.copy(corpus / f"problem-{i}.truth", dest / f"problem-{i}.truth")
    return dest


class TestSynthesize:
    def test_corpus_files_and_summary(self, ws):
        root, _, corpus, _ = ws
        problems = sorted(corpus.glob("problem-*.txt"))
        truths = sorted(corpus.glob("problem-*.truth"))
        assert len(problems) == 44
        assert len(truths) == 44
        records = read_jsonl(corpus / "synthesis.jsonl")
        assert len(records) == 44
        assert sum(r["changes"] for r in records) == 22
        for r in records:
            assert bool(r["borders"]) == r["changes"]
        assert (corpus / "synthesis.txt").exists()

    def test_same_seed_reproduces_bytes(self, ws, tmp_path):
        _, sources, corpus, _ = ws
        again = tmp_path / "again"
        main([
            "synthesize", "--sources", str(sources), "--out-dir", str(again),
            "--n-docs", "44", "--seed", "3",
            "--min-segment-sentences", "5", "--max-segment-sentences", "9",
        ])
        assert tree_bytes(again) == tree_bytes(corpus)

    def test_needs_two_sources(self, tmp_path):
        lonely = tmp_path / "src"
        lonely.mkdir()
        (lonely / "only.txt").write_text("One sentence here.", encoding="utf-8")
        with pytest.raises(SystemExit):
            main(["synthesize", "--sources", str(lonely),
                  "--out-dir", str(tmp_path / "out"), "--seed", "0"])

    def test_unseeded_run_prints_chosen_seed(self, ws, tmp_path, capsys):
        _, sources, _, _ = ws
        main([
            "synthesize", "--sources", str(sources),
            "--out-dir", str(tmp_path / "out"), "--n-docs", "2",
            "--min-segment-sentences", "3", "--max-segment-sentences", "4",
        ])
        out = capsys.readouterr().out
        assert out.startswith("seed: ")
        int(out.splitlines()[0].split(":")[1])


class TestTrain:
    def test_model_and_summaries_written(self, ws):
        root, _, _, model = ws
        assert model.exists()
        records = read_jsonl(root / "train_out" / "training.jsonl")
        assert [r["group"] for r in records] == FAST_GROUPS.split(",")
        for r in records:
            assert len(r["weights"]) == 4
            assert sum(r["weights"]) == pytest.approx(1.0)
        assert (root / "train_out" / "training.txt").exists()


class TestPredict:
    def test_record_schema_and_accuracy(self, ws, tmp_path):
        _, _, corpus, model = ws
        out = tmp_path / "pred"
        assert main([
            "predict", "--model", str(model), "--corpus", str(corpus),
            "--out-dir", str(out),
        ]) == 0
        records = read_jsonl(out / "predictions.jsonl")
        assert len(records) == 44
        truth = {r["id"]: r["changes"] for r in read_jsonl(corpus / "synthesis.jsonl")}
        hits = 0
        for r in records:
            assert set(r) == {"id", "p_changed", "changed"}
            assert 0.0 <= r["p_changed"] <= 1.0
            assert r["changed"] == (r["p_changed"] >= 0.5)
            hits += r["changed"] == truth[r["id"]]
        assert hits / len(records) >= 0.7

    def test_parallel_matches_serial(self, ws, tmp_path):
        _, _, corpus, model = ws
        sub = subset_corpus(corpus, tmp_path / "sub", range(1, 7), with_truth=False)
        serial, parallel = tmp_path / "serial", tmp_path / "parallel"
        main(["predict", "--model", str(model), "--corpus", str(sub),
              "--out-dir", str(serial)])
        main(["predict", "--model", str(model), "--corpus", str(sub),
              "--out-dir", str(parallel), "--jobs", "2"])
        assert read_jsonl(serial / "predictions.jsonl") == read_jsonl(
            parallel / "predictions.jsonl"
        )


class TestLocate:
    def locate(self, model, corpus_dir, out):
        return main([
            "locate", "--model", str(model), "--corpus", str(corpus_dir),
            "--out-dir", str(out), "--threshold", "0.6", "--min-sentences", "8",
        ])

    def test_outputs_and_reruns_identically(self, ws, tmp_path):
        _, _, corpus, model = ws
        sub = subset_corpus(corpus, tmp_path / "sub", range(1, 7), with_truth=False)
        first, second = tmp_path / "first", tmp_path / "second"
        assert self.locate(model, sub, first) == 0
        assert self.locate(model, sub, second) == 0
        assert tree_bytes(first) == tree_bytes(second)

        records = read_jsonl(first / "borders.jsonl")
        assert [r["id"] for r in records] == [f"problem-{i}" for i in range(1, 7)]
        for r in records:
            assert all(0 < b < r["n_sentences"] for b in r["borders"])
        assert sorted(p.name for p in first.glob("problem-*.txt"))
        assert sorted(p.name for p in first.glob("problem-*.truth"))


class TestEvaluate:
    def test_hypothesis_scoring_with_baselines(self, ws, tmp_path):
        _, _, corpus, model = ws
        refs = subset_corpus(corpus, tmp_path / "refs", range(1, 7), with_truth=True)
        hyp = tmp_path / "hyp"
        main(["locate", "--model", str(model), "--corpus", str(refs),
              "--out-dir", str(hyp), "--threshold", "0.6", "--min-sentences", "8"])
        out = tmp_path / "eval"
        assert main([
            "evaluate", "--corpus", str(refs), "--hypothesis", str(hyp),
            "--with-baselines", "--baseline-seeds", "0,1",
            "--out-dir", str(out),
        ]) == 0
        rows = read_jsonl(out / "evaluation.jsonl")
        assert [r["name"] for r in rows] == ["BASELINE-rnd", "BASELINE-eq", "hypothesis"]
        for r in rows:
            assert 0.0 <= r["windowdiff"] <= 1.0
            assert r["n_documents"] == 6
        assert (out / "evaluation.txt").exists()

    def test_model_and_hypothesis_are_exclusive(self, ws, tmp_path):
        _, _, corpus, model = ws
        with pytest.raises(SystemExit):
            main(["evaluate", "--corpus", str(corpus), "--model", str(model),
                  "--hypothesis", str(corpus), "--out-dir", str(tmp_path)])
        with pytest.raises(SystemExit):
            main(["evaluate", "--corpus", str(corpus), "--out-dir", str(tmp_path)])


class TestBaselineCommand:
    def test_writes_borders(self, ws, tmp_path):
        _, _, corpus, _ = ws
        sub = subset_corpus(corpus, tmp_path / "sub", range(1, 5), with_truth=False)
        out = tmp_path / "bl"
        assert main(["baseline", "--corpus", str(sub), "--kind", "eq",
                     "--seed", "0", "--out-dir", str(out)]) == 0
        records = read_jsonl(out / "borders.jsonl")
        assert len(records) == 4
        assert all(r["baseline"] == "BASELINE-eq" for r in records)
        assert len(list(out.glob("problem-*.truth"))) == 4


class TestConfigFile:
    def test_flag_beats_config_beats_default(self, ws, tmp_path):
        _, sources, _, _ = ws
        cfg = tmp_path / "opts.cfg"
        cfg.write_text(
            "# corpus size\n"
            "n-docs = 6\n"
            "seed = 9\n"
            "min-segment-sentences = 3\n"
            "max-segment-sentences = 4\n",
            encoding="utf-8",
        )
        from_config = tmp_path / "from_config"
        main(["synthesize", "--sources", str(sources),
              "--out-dir", str(from_config), "--config", str(cfg)])
        assert len(list(from_config.glob("problem-*.txt"))) == 6

        flag_wins = tmp_path / "flag_wins"
        main(["synthesize", "--sources", str(sources),
              "--out-dir", str(flag_wins), "--config", str(cfg),
              "--n-docs", "4"])
        assert len(list(flag_wins.glob("problem-*.txt"))) == 4

    def test_unknown_key_rejected(self, ws, tmp_path):
        _, sources, _, _ = ws
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("made_up_option = 1\n", encoding="utf-8")
        with pytest.raises(SystemExit, match="made_up_option"):
            main(["synthesize", "--sources", str(sources),
                  "--out-dir", str(tmp_path / "out"), "--config", str(cfg)])

    def test_malformed_line_rejected(self, ws, tmp_path):
        _, sources, _, _ = ws
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("just some words\n", encoding="utf-8")
        with pytest.raises(SystemExit, match="key=value"):
            main(["synthesize", "--sources", str(sources),
                  "--out-dir", str(tmp_path / "out"), "--config", str(cfg)])
