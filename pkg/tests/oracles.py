"""Naive reference implementations the fast code is tested against.

Everything here favors obviousness over speed: plain double loops,
exhaustive searches, no shared state with the package internals.
"""

import itertools

import numpy as np


def windowdiff_naive(ref_borders, hyp_borders, n, k):
    """Direct transcription: slide a window of k gaps, compare counts."""
    ref = set(ref_borders)
    hyp = set(hyp_borders)
    assert n > k >= 1
    errors = 0
    windows = 0
    for i in range(0, n - k):
        r = sum(1 for b in range(i + 1, i + k + 1) if b in ref)
        c = sum(1 for b in range(i + 1, i + k + 1) if b in hyp)
        windows += 1
        if r != c:
            errors += 1
    return errors / windows


def winpr_naive(ref_borders, hyp_borders, n, k):
    """Padded windowed precision/recall/F1, counted gap by gap."""
    ref = set(ref_borders)
    hyp = set(hyp_borders)
    tp = fp = fn = 0
    for i in range(1 - k, n):
        gaps = [g for g in range(i, i + k) if 1 <= g <= n - 1]
        if not gaps:
            continue
        r = sum(1 for g in gaps if g in ref)
        c = sum(1 for g in gaps if g in hyp)
        tp += min(r, c)
        fp += max(0, c - r)
        fn += max(0, r - c)
    p = tp / (tp + fp) if tp + fp else 1.0
    r = tp / (tp + fn) if tp + fn else 1.0
    f = 2 * p * r / (p + r) if p + r else 0.0
    return p, r, f


def damerau_levenshtein_naive(a, b):
    """Breadth-first search over single edits (insert, delete, substitute,
    transpose of adjacent characters). Exponential; keep inputs short.
    """
    if a == b:
        return 0
    alphabet = set(a) | set(b)
    seen = {a}
    frontier = [a]
    for depth in itertools.count(1):
        nxt = []
        for s in frontier:
            for t in _single_edits(s, alphabet):
                if t == b:
                    return depth
                if t not in seen and abs(len(t) - len(b)) < depth_cap(a, b) - depth:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
        assert frontier, "search space exhausted"


def depth_cap(a, b):
    """Any pair is reachable within max(len) edits (substitute the
    overlap, then insert or delete the difference)."""
    return max(len(a), len(b)) + 1


def _single_edits(s, alphabet):
    for i in range(len(s)):
        yield s[:i] + s[i + 1:]
        for c in alphabet:
            yield s[:i] + c + s[i + 1:]
    for i in range(len(s) + 1):
        for c in alphabet:
            yield s[:i] + c + s[i:]
    for i in range(len(s) - 1):
        yield s[:i] + s[i + 1] + s[i] + s[i + 2:]


def max_pairwise_diff_naive(vectors):
    vectors = np.asarray(vectors, dtype=np.float64)
    d = vectors.shape[1]
    out = np.zeros(d)
    for i in range(len(vectors)):
        for j in range(len(vectors)):
            out = np.maximum(out, np.abs(vectors[i] - vectors[j]))
    return out


def position_score_naive(x, k):
    """The half-sigmoid through (0,0) and (1,1) with steepness k."""
    return (k * x) / ((1.0 + k) - x)


def best_split_naive(values, y, w, min_leaf):
    """Try every distinct threshold, score by weighted Gini decrease."""
    order = np.argsort(values, kind="stable")
    v, yy, ww = values[order], y[order], w[order]
    total_w = ww.sum()
    total_pos = float((ww * yy).sum())

    def gini(pos, wsum):
        if wsum <= 0:
            return 0.0
        p = pos / wsum
        return 2.0 * p * (1.0 - p) * wsum

    parent = gini(total_pos, total_w)
    best_gain, best_thr = -1.0, 0.0
    for i in range(len(v) - 1):
        if v[i] == v[i + 1]:
            continue
        left = slice(0, i + 1)
        right = slice(i + 1, len(v))
        if i + 1 < min_leaf or len(v) - i - 1 < min_leaf:
            continue
        wl = float(ww[left].sum())
        wr = float(ww[right].sum())
        pl = float((ww[left] * yy[left]).sum())
        pr = float((ww[right] * yy[right]).sum())
        gain = parent - gini(pl, wl) - gini(pr, wr)
        if gain > best_gain + 1e-15:
            best_gain = gain
            best_thr = (v[i] + v[i + 1]) / 2.0
    return best_thr, best_gain
