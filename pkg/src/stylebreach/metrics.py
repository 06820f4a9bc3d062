"""Segmentation quality metrics and the two reference baselines.

Borders follow the package convention: border b splits a document
between sentences b-1 and b, so a document of N sentences has N-1
candidate positions 1..N-1.
"""

import json
from dataclasses import dataclass

import numpy as np

BASELINE_RND = "BASELINE-rnd"
BASELINE_EQ = "BASELINE-eq"
MAX_BASELINE_BORDERS = 10


@dataclass(frozen=True)
class Segmentation:
    n_sentences: int
    borders: tuple

    def __post_init__(self):
        if self.n_sentences < 1:
            raise ValueError("a segmentation needs at least one sentence")
        borders = tuple(sorted(set(int(b) for b in self.borders)))
        for b in borders:
            if not 0 < b < self.n_sentences:
                raise ValueError(
                    f"border {b} outside (0, {self.n_sentences})"
                )
        object.__setattr__(self, "borders", borders)


def default_window(segmentation):
    """Half the reference's mean segment length, at least 1."""
    n = segmentation.n_sentences
    return max(1, round(n / (2.0 * (len(segmentation.borders) + 1))))


def _counts_in_window(borders, lo, hi):
    return sum(1 for b in borders if lo < b <= hi)


def window_diff(reference, hypothesis, k=None):
    """Fraction of k-wide windows where the two segmentations disagree
    on the number of borders."""
    if reference.n_sentences != hypothesis.n_sentences:
        raise ValueError("segmentations cover different document lengths")
    n = reference.n_sentences
    if k is None:
        k = default_window(reference)
    if k < 1:
        raise ValueError("window size must be positive")
    if n <= k:
        raise ValueError(f"window size {k} too large for {n} sentences")
    errors = 0
    for i in range(n - k):
        r = _counts_in_window(reference.borders, i, i + k)
        c = _counts_in_window(hypothesis.borders, i, i + k)
        if r != c:
            errors += 1
    return errors / (n - k)


def win_pr(reference, hypothesis, k=None):
    """Windowed precision/recall/F1 with boundary-count padding.

    Windows start at 1-k .. n-1 so every candidate position is covered
    by exactly k windows.
    """
    if reference.n_sentences != hypothesis.n_sentences:
        raise ValueError("segmentations cover different document lengths")
    n = reference.n_sentences
    if k is None:
        k = default_window(reference)
    if k < 1:
        raise ValueError("window size must be positive")
    tp = fp = fn = 0
    for i in range(1 - k, n):
        lo = max(1, i)
        hi = min(n - 1, i + k - 1)
        if lo > hi:
            continue
        r = sum(1 for b in reference.borders if lo <= b <= hi)
        c = sum(1 for b in hypothesis.borders if lo <= b <= hi)
        tp += min(r, c)
        fp += max(0, c - r)
        fn += max(0, r - c)
    precision = tp / (tp + fp) if tp + fp else 1.0
    recall = tp / (tp + fn) if tp + fn else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return precision, recall, f1


def baseline_rnd(n_sentences, rng):
    """Uniformly many borders (0..10, capped by room) at random distinct
    positions."""
    positions = n_sentences - 1
    count = int(rng.integers(0, MAX_BASELINE_BORDERS + 1))
    count = min(count, positions)
    if count <= 0 or positions <= 0:
        return Segmentation(n_sentences, ())
    chosen = rng.choice(np.arange(1, n_sentences), size=count, replace=False)
    return Segmentation(n_sentences, tuple(int(b) for b in chosen))


def baseline_eq(n_sentences, rng):
    """A random number of borders placed evenly through the document."""
    m = int(rng.integers(0, MAX_BASELINE_BORDERS + 1))
    borders = set()
    for j in range(1, m + 1):
        b = round(j * n_sentences / (m + 1))
        if 0 < b < n_sentences:
            borders.add(int(b))
    return Segmentation(n_sentences, tuple(borders))


@dataclass(frozen=True)
class EvalRow:
    name: str
    window_diff: float
    win_precision: float
    win_recall: float
    win_f: float
    n_documents: int

    def to_dict(self):
        return {
            "name": self.name,
            "windowdiff": self.window_diff,
            "win_precision": self.win_precision,
            "win_recall": self.win_recall,
            "win_f": self.win_f,
            "n_documents": self.n_documents,
        }


@dataclass(frozen=True)
class EvalReport:
    rows: tuple

    def to_json_lines(self):
        return "\n".join(
            json.dumps(row.to_dict(), sort_keys=True) for row in self.rows
        ) + "\n"

    def to_table(self):
        headers = ("name", "windowdiff", "win_p", "win_r", "win_f", "docs")
        body = [
            (
                row.name,
                f"{row.window_diff:.4f}",
                f"{row.win_precision:.4f}",
                f"{row.win_recall:.4f}",
                f"{row.win_f:.4f}",
                str(row.n_documents),
            )
            for row in self.rows
        ]
        widths = [
            max(len(headers[c]), *(len(r[c]) for r in body)) if body else len(headers[c])
            for c in range(len(headers))
        ]
        lines = [
            "  ".join(h.ljust(widths[c]) for c, h in enumerate(headers)),
            "  ".join("-" * widths[c] for c in range(len(headers))),
        ]
        for r in body:
            lines.append("  ".join(r[c].ljust(widths[c]) for c in range(len(headers))))
        return "\n".join(line.rstrip() for line in lines) + "\n"


def evaluate_segmentations(name, references, hypotheses, k=None):
    """Mean metrics over paired segmentations."""
    if len(references) != len(hypotheses):
        raise ValueError("reference/hypothesis count mismatch")
    if not references:
        raise ValueError("nothing to evaluate")
    wd, wp, wr, wf = [], [], [], []
    for ref, hyp in zip(references, hypotheses):
        wd.append(window_diff(ref, hyp, k))
        p, r, f = win_pr(ref, hyp, k)
        wp.append(p)
        wr.append(r)
        wf.append(f)
    return EvalRow(
        name=name,
        window_diff=float(np.mean(wd)),
        win_precision=float(np.mean(wp)),
        win_recall=float(np.mean(wr)),
        win_f=float(np.mean(wf)),
        n_documents=len(references),
    )


def baseline_rows(references, seeds=(0, 1, 2, 3, 4)):
    """The two baselines, each averaged over the given seeds."""
    rows = []
    for tag, (name, fn) in enumerate(
        ((BASELINE_RND, baseline_rnd), (BASELINE_EQ, baseline_eq))
    ):
        per_seed = []
        for seed in seeds:
            rng = np.random.default_rng(np.random.SeedSequence([tag, seed]))
            hyps = [fn(ref.n_sentences, rng) for ref in references]
            per_seed.append(evaluate_segmentations(name, references, hyps))
        rows.append(
            EvalRow(
                name=name,
                window_diff=float(np.mean([r.window_diff for r in per_seed])),
                win_precision=float(np.mean([r.win_precision for r in per_seed])),
                win_recall=float(np.mean([r.win_recall for r in per_seed])),
                win_f=float(np.mean([r.win_f for r in per_seed])),
                n_documents=len(references),
            )
        )
    return rows
