import itertools
import subprocess
import sys

import numpy as np
import pytest

from stylebreach import _kernels
from stylebreach._kernels import _pure

from oracles import best_split_naive, damerau_levenshtein_naive

try:
    from stylebreach._kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled extension not built")


def random_split_case(rng, n=None, ties=False):
    n = n or int(rng.integers(4, 60))
    if ties:
        values = rng.integers(0, 4, n).astype(np.float64)
    else:
        values = rng.normal(size=n)
    y = rng.integers(0, 2, n).astype(np.float64)
    w = rng.uniform(0.1, 2.0, n)
    return values, y, w


class TestBackendSelection:
    def test_backend_name(self):
        assert _kernels.BACKEND in ("compiled", "pure")

    def test_pure_env_forces_fallback(self):
        code = (
            "from stylebreach import _kernels; print(_kernels.BACKEND)"
        )
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"PATH": "/usr/bin:/bin", "STYLEBREACH_PURE": "1"},
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == "pure"

    def test_exports_are_callable(self):
        for name in ("best_split_dense", "build_histograms", "best_split_hist",
                     "damerau_levenshtein"):
            assert callable(getattr(_kernels, name))


class TestBestSplitDense:
    def test_matches_naive_oracle(self, rng):
        for trial in range(200):
            values, y, w = random_split_case(rng, ties=bool(trial % 2))
            min_leaf = int(rng.integers(1, 4))
            got_thr, got_gain = _pure.best_split_dense(values, y, w, min_leaf)
            want_thr, want_gain = best_split_naive(values, y, w, min_leaf)
            if want_gain < 0:
                assert got_gain < 0
            else:
                assert got_gain == pytest.approx(want_gain, abs=1e-9)
                assert got_thr == pytest.approx(want_thr, abs=1e-9)

    def test_no_split_inside_tied_values(self, rng):
        values = np.array([1.0, 1.0, 1.0, 1.0])
        y = np.array([0.0, 1.0, 0.0, 1.0])
        w = np.ones(4)
        _, gain = _pure.best_split_dense(values, y, w, 1)
        assert gain < 0

    def test_min_leaf_blocks_small_sides(self):
        values = np.array([0.0, 1.0, 2.0, 3.0])
        y = np.array([1.0, 0.0, 0.0, 0.0])
        w = np.ones(4)
        thr, gain = _pure.best_split_dense(values, y, w, 2)
        assert gain >= 0
        assert thr == pytest.approx(1.5)

    @needs_fast
    def test_compiled_matches_pure(self, rng):
        for trial in range(300):
            values, y, w = random_split_case(rng, ties=bool(trial % 3))
            min_leaf = int(rng.integers(1, 5))
            p = _pure.best_split_dense(values, y, w, min_leaf)
            c = _fast.best_split_dense(values, y, w, min_leaf)
            assert c[1] == pytest.approx(p[1], abs=1e-9)
            if p[1] >= 0:
                assert c[0] == pytest.approx(p[0], abs=1e-9)


class TestHistograms:
    def make_case(self, rng):
        n, d = int(rng.integers(5, 80)), int(rng.integers(1, 6))
        n_bins = int(rng.integers(2, 16))
        binned = rng.integers(0, n_bins, (n, d)).astype(np.int32)
        grad = rng.normal(size=n)
        hess = rng.uniform(0.01, 0.3, n)
        rows = np.sort(rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False))
        return binned, grad, hess, rows.astype(np.int64), n_bins

    def test_sums_match_direct_accumulation(self, rng):
        binned, grad, hess, rows, n_bins = self.make_case(rng)
        hist = _pure.build_histograms(binned, grad, hess, rows, n_bins)
        for f in range(binned.shape[1]):
            for b in range(n_bins):
                mask = binned[rows, f] == b
                assert hist[f, b, 0] == pytest.approx(grad[rows][mask].sum())
                assert hist[f, b, 1] == pytest.approx(hess[rows][mask].sum())
                assert hist[f, b, 2] == mask.sum()

    @needs_fast
    def test_compiled_matches_pure(self, rng):
        for _ in range(50):
            binned, grad, hess, rows, n_bins = self.make_case(rng)
            p = _pure.build_histograms(binned, grad, hess, rows, n_bins)
            c = _fast.build_histograms(binned, grad, hess, rows, n_bins)
            assert np.allclose(p, c, atol=1e-12)


class TestBestSplitHist:
    def make_hist(self, rng):
        d, n_bins = int(rng.integers(1, 5)), int(rng.integers(2, 12))
        hist = np.zeros((d, n_bins, 3))
        hist[:, :, 0] = rng.normal(size=(d, n_bins))
        hist[:, :, 1] = rng.uniform(0.01, 1.0, (d, n_bins))
        hist[:, :, 2] = rng.integers(0, 9, (d, n_bins))
        return hist, np.arange(d)

    @needs_fast
    def test_compiled_matches_pure(self, rng):
        for _ in range(200):
            hist, feats = self.make_hist(rng)
            l1 = float(rng.choice([0.0, 0.5, 1.0]))
            min_leaf = int(rng.integers(1, 4))
            p = _pure.best_split_hist(hist, feats, l1, 1.0, min_leaf)
            c = _fast.best_split_hist(hist, feats, l1, 1.0, min_leaf)
            assert (c[0], c[1]) == (p[0], p[1])
            assert c[2] == pytest.approx(p[2], abs=1e-9)

    def test_respects_feature_subset(self, rng):
        hist, _ = self.make_hist(rng)
        while hist.shape[0] < 2:
            hist, _ = self.make_hist(rng)
        f, _, gain = _pure.best_split_hist(hist, np.array([1]), 0.0, 1.0, 1)
        assert f in (-1, 1)

    def test_empty_when_min_leaf_unreachable(self):
        hist = np.zeros((1, 4, 3))
        hist[0, :, 2] = [1, 1, 1, 1]
        f, b, gain = _pure.best_split_hist(hist, np.array([0]), 0.0, 1.0, 10)
        assert (f, b) == (-1, -1)
        assert gain < 0


class TestDamerauLevenshtein:
    def test_known_values(self):
        cases = [
            ("", "", 0),
            ("a", "", 1),
            ("", "abc", 3),
            ("abc", "abc", 0),
            ("abc", "acb", 1),
            ("ca", "abc", 2),  # unrestricted beats optimal string alignment (3)
            ("kitten", "sitting", 3),
            ("Katherine", "Katherin", 1),
            ("Wilhelm", "Wihlelm", 1),
        ]
        for a, b, want in cases:
            assert _pure.damerau_levenshtein(a, b) == want, (a, b)

    def test_symmetry(self, rng):
        letters = "abcd"
        for _ in range(100):
            a = "".join(rng.choice(list(letters), size=rng.integers(0, 7)))
            b = "".join(rng.choice(list(letters), size=rng.integers(0, 7)))
            assert _pure.damerau_levenshtein(a, b) == _pure.damerau_levenshtein(b, a)

    def test_matches_search_oracle(self):
        alphabet = "ab"
        strings = [""]
        for length in (1, 2, 3):
            strings += ["".join(t) for t in itertools.product(alphabet, repeat=length)]
        for a in strings:
            for b in strings:
                assert _pure.damerau_levenshtein(a, b) == damerau_levenshtein_naive(a, b), (a, b)

    @needs_fast
    def test_compiled_matches_pure(self, rng):
        letters = "abcde"
        for _ in range(300):
            a = "".join(rng.choice(list(letters), size=rng.integers(0, 12)))
            b = "".join(rng.choice(list(letters), size=rng.integers(0, 12)))
            assert _fast.damerau_levenshtein(a, b) == _pure.damerau_levenshtein(a, b)
