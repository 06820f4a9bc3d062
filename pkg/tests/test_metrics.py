import json

import numpy as np
import pytest

from stylebreach.metrics import (
    BASELINE_EQ,
    BASELINE_RND,
    EvalReport,
    EvalRow,
    Segmentation,
    baseline_eq,
    baseline_rnd,
    baseline_rows,
    default_window,
    evaluate_segmentations,
    win_pr,
    window_diff,
)

from oracles import windowdiff_naive, winpr_naive


def random_segmentation(rng, n):
    count = int(rng.integers(0, min(6, n)))
    if count == 0:
        return Segmentation(n, ())
    borders = rng.choice(np.arange(1, n), size=min(count, n - 1), replace=False)
    return Segmentation(n, tuple(int(b) for b in borders))


class TestSegmentation:
    def test_sorts_and_dedups(self):
        seg = Segmentation(10, (7, 3, 3, 5))
        assert seg.borders == (3, 5, 7)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Segmentation(10, (0,))
        with pytest.raises(ValueError):
            Segmentation(10, (10,))
        with pytest.raises(ValueError):
            Segmentation(10, (-2,))

    def test_rejects_empty_document(self):
        with pytest.raises(ValueError):
            Segmentation(0, ())

    def test_single_sentence_no_positions(self):
        assert Segmentation(1, ()).borders == ()


class TestDefaultWindow:
    def test_half_mean_segment_length(self):
        assert default_window(Segmentation(10, (5,))) == 2
        assert default_window(Segmentation(30, (10, 20))) == 5

    def test_banker_rounding(self):
        # 30 / (2*6) = 2.5 rounds to the even 2
        assert default_window(Segmentation(30, (5, 10, 15, 20, 25))) == 2

    def test_floor_of_one(self):
        assert default_window(Segmentation(3, (1, 2))) == 1


class TestWindowDiff:
    def test_reference_example(self):
        ref = Segmentation(10, (5,))
        hyp = Segmentation(10, ())
        assert default_window(ref) == 2
        assert window_diff(ref, hyp) == 0.25

    def test_identical_is_zero(self):
        seg = Segmentation(20, (4, 11))
        assert window_diff(seg, seg, k=3) == 0.0

    def test_matches_oracle(self, rng):
        for _ in range(300):
            n = int(rng.integers(3, 30))
            ref = random_segmentation(rng, n)
            hyp = random_segmentation(rng, n)
            k = int(rng.integers(1, n))
            got = window_diff(ref, hyp, k=k)
            want = windowdiff_naive(ref.borders, hyp.borders, n, k)
            assert got == pytest.approx(want, abs=1e-12)

    def test_window_must_fit(self):
        ref = Segmentation(5, (2,))
        with pytest.raises(ValueError):
            window_diff(ref, ref, k=5)
        with pytest.raises(ValueError):
            window_diff(ref, ref, k=0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            window_diff(Segmentation(5, ()), Segmentation(6, ()))


class TestWinPR:
    def test_perfect_hypothesis(self):
        seg = Segmentation(12, (6,))
        assert win_pr(seg, seg, k=2) == (1.0, 1.0, 1.0)

    def test_empty_pair_scores_one(self):
        ref = Segmentation(8, ())
        assert win_pr(ref, ref, k=2) == (1.0, 1.0, 1.0)

    def test_miss_lowers_recall_only(self):
        ref = Segmentation(12, (6,))
        hyp = Segmentation(12, ())
        p, r, f = win_pr(ref, hyp, k=2)
        assert p == 1.0
        assert r == 0.0
        assert f == 0.0

    def test_false_alarm_lowers_precision_only(self):
        ref = Segmentation(12, ())
        hyp = Segmentation(12, (6,))
        p, r, f = win_pr(ref, hyp, k=2)
        assert p == 0.0
        assert r == 1.0
        assert f == 0.0

    def test_near_miss_gets_partial_credit(self):
        ref = Segmentation(20, (10,))
        near = Segmentation(20, (11,))
        far = Segmentation(20, (17,))
        _, _, f_near = win_pr(ref, near, k=3)
        _, _, f_far = win_pr(ref, far, k=3)
        assert f_near > f_far

    def test_matches_oracle(self, rng):
        for _ in range(300):
            n = int(rng.integers(3, 30))
            ref = random_segmentation(rng, n)
            hyp = random_segmentation(rng, n)
            k = int(rng.integers(1, n))
            got = win_pr(ref, hyp, k=k)
            want = winpr_naive(ref.borders, hyp.borders, n, k)
            assert got == pytest.approx(want, abs=1e-12)


class TestBaselines:
    def test_rnd_structure(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            seg = baseline_rnd(30, rng)
            assert seg.n_sentences == 30
            assert len(seg.borders) <= 10
            assert all(0 < b < 30 for b in seg.borders)

    def test_rnd_respects_room(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            seg = baseline_rnd(3, rng)
            assert len(seg.borders) <= 2

    def test_rnd_single_sentence(self):
        rng = np.random.default_rng(2)
        assert baseline_rnd(1, rng).borders == ()

    def test_eq_even_positions(self):
        # each m produces round(j*N/(m+1)); m=3, N=100 -> 25, 50, 75
        rng = np.random.default_rng(0)
        seen = set()
        for _ in range(200):
            seg = baseline_eq(100, rng)
            seen.add(seg.borders)
        assert (25, 50, 75) in seen
        assert (50,) in seen

    def test_eq_gaps_roughly_even(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            seg = baseline_eq(60, rng)
            cuts = (0,) + seg.borders + (60,)
            gaps = np.diff(cuts)
            assert gaps.max() - gaps.min() <= 1 + 1  # rounding slack

    def test_deterministic_per_seed(self):
        a = baseline_rnd(40, np.random.default_rng(np.random.SeedSequence([0, 7])))
        b = baseline_rnd(40, np.random.default_rng(np.random.SeedSequence([0, 7])))
        assert a == b


class TestAggregation:
    def refs(self):
        return [Segmentation(20, (10,)), Segmentation(25, (8, 16)), Segmentation(30, ())]

    def test_row_fields(self):
        refs = self.refs()
        row = evaluate_segmentations("model", refs, refs)
        assert row.name == "model"
        assert row.window_diff == 0.0
        assert row.win_f == 1.0
        assert row.n_documents == 3

    def test_count_mismatch(self):
        refs = self.refs()
        with pytest.raises(ValueError):
            evaluate_segmentations("model", refs, refs[:-1])
        with pytest.raises(ValueError):
            evaluate_segmentations("model", [], [])

    def test_baseline_rows_names_and_determinism(self):
        refs = self.refs()
        rows = baseline_rows(refs)
        again = baseline_rows(refs)
        assert [r.name for r in rows] == [BASELINE_RND, BASELINE_EQ]
        assert rows == again
        for row in rows:
            assert 0.0 <= row.window_diff <= 1.0
            assert row.n_documents == 3

    def test_baseline_rows_seed_sensitivity(self):
        refs = self.refs()
        a = baseline_rows(refs, seeds=(0,))
        b = baseline_rows(refs, seeds=(1,))
        assert a != b


class TestReportFormats:
    def report(self):
        rows = (
            EvalRow("BASELINE-rnd", 0.5, 0.25, 0.75, 0.375, 3),
            EvalRow("model", 0.125, 0.9, 0.8, 0.8471, 3),
        )
        return EvalReport(rows)

    def test_json_lines_round_trip(self):
        text = self.report().to_json_lines()
        lines = text.strip().split("\n")
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first["name"] == "BASELINE-rnd"
        assert first["windowdiff"] == 0.5
        assert set(first) == {
            "name", "windowdiff", "win_precision", "win_recall", "win_f",
            "n_documents",
        }

    def test_json_keys_sorted(self):
        line = self.report().to_json_lines().split("\n")[0]
        keys = list(json.loads(line))
        assert keys == sorted(keys)

    def test_table_alignment(self):
        table = self.report().to_table()
        lines = table.strip().split("\n")
        assert lines[0].startswith("name")
        assert set(lines[1]) <= {"-", " "}
        # every column starts where its header starts
        assert lines[0].index("windowdiff") == lines[2].index("0.5000")
        assert lines[0].index("windowdiff") == lines[3].index("0.1250")
        assert lines[0].index("docs") == lines[2].rindex("3")

    def test_table_handles_no_rows(self):
        table = EvalReport(()).to_table()
        assert table.startswith("name")
