"""Numpy fallbacks for the compiled kernels.

Same signatures and tie-breaking as the extension module: candidates are
scanned in identical order and ties keep the first maximum, so both
backends pick the same splits.
"""

import numpy as np


def best_split_dense(values, y, w, min_leaf):
    """Best binary split of one feature column by weighted gini decrease.

    Returns (threshold, gain); gain < 0 means no valid split. Splits are
    only placed between strictly distinct values and each side must keep
    at least min_leaf samples.
    """
    values = np.asarray(values, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    n = values.shape[0]
    if n < 2 * min_leaf:
        return 0.0, -1.0
    order = np.argsort(values, kind="stable")
    v = values[order]
    wo = w[order]
    wy = wo * y[order]
    cw = np.cumsum(wo)
    cwy = np.cumsum(wy)
    total_w = cw[-1]
    total_wy = cwy[-1]
    if total_w <= 0.0:
        return 0.0, -1.0
    parent = 2.0 * total_wy * (total_w - total_wy) / total_w

    idx = np.arange(min_leaf - 1, n - min_leaf)
    if idx.size == 0:
        return 0.0, -1.0
    lw = cw[idx]
    lpos = cwy[idx]
    rw = total_w - lw
    rpos = total_wy - lpos
    ok = (v[idx] < v[idx + 1]) & (lw > 0.0) & (rw > 0.0)
    if not np.any(ok):
        return 0.0, -1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        child = 2.0 * (lpos * (lw - lpos) / lw + rpos * (rw - rpos) / rw)
    gain = np.where(ok, parent - child, -np.inf)
    k = int(np.argmax(gain))
    thr = 0.5 * (v[idx[k]] + v[idx[k] + 1])
    return float(thr), float(gain[k])


def build_histograms(binned, grad, hess, rows, n_bins):
    """Per-feature (n_bins, 3) histograms of [grad sum, hess sum, count]."""
    binned = np.asarray(binned)
    rows = np.asarray(rows)
    n_features = binned.shape[1]
    hist = np.zeros((n_features, n_bins, 3), dtype=np.float64)
    sub = binned[rows]
    g = np.asarray(grad, dtype=np.float64)[rows]
    h = np.asarray(hess, dtype=np.float64)[rows]
    for f in range(n_features):
        b = sub[:, f]
        hist[f, :, 0] = np.bincount(b, weights=g, minlength=n_bins)
        hist[f, :, 1] = np.bincount(b, weights=h, minlength=n_bins)
        hist[f, :, 2] = np.bincount(b, minlength=n_bins)
    return hist


def _leaf_score(g, h, l1, l2):
    t = np.sign(g) * np.maximum(0.0, np.abs(g) - l1)
    return t * t / (h + l2)


def best_split_hist(hist, features, l1, l2, min_leaf):
    """Best (feature, bin) split over histogram bins.

    Gain uses soft-thresholded gradient sums; split after bin b puts bins
    [0..b] on the left. Returns (feature, bin, gain); gain < 0 → no split.
    """
    best_f, best_b, best_gain = -1, -1, -1.0
    for f in features:
        g = hist[f, :, 0]
        h = hist[f, :, 1]
        c = hist[f, :, 2]
        cg = np.cumsum(g)
        ch = np.cumsum(h)
        cc = np.cumsum(c)
        tg, th, tc = cg[-1], ch[-1], cc[-1]
        lg, lh, lc = cg[:-1], ch[:-1], cc[:-1]
        rc = tc - lc
        ok = (lc >= min_leaf) & (rc >= min_leaf)
        if not np.any(ok):
            continue
        rg = tg - lg
        rh = th - lh
        gain = 0.5 * (
            _leaf_score(lg, lh, l1, l2)
            + _leaf_score(rg, rh, l1, l2)
            - _leaf_score(tg, th, l1, l2)
        )
        gain = np.where(ok, gain, -np.inf)
        b = int(np.argmax(gain))
        if gain[b] > best_gain:
            best_f, best_b, best_gain = int(f), b, float(gain[b])
    return best_f, best_b, best_gain


def damerau_levenshtein(a, b):
    """Unrestricted Damerau-Levenshtein distance (transpositions may be
    edited again, unlike the restricted optimal-string-alignment variant).
    """
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    inf = la + lb
    d = np.zeros((la + 2, lb + 2), dtype=np.int64)
    d[0, :] = inf
    d[:, 0] = inf
    d[1, 1:] = np.arange(lb + 1)
    d[1:, 1] = np.arange(la + 1)
    last_row = {}
    for i in range(1, la + 1):
        last_col = 0
        for j in range(1, lb + 1):
            k = last_row.get(b[j - 1], 0)
            cost = 1
            if a[i - 1] == b[j - 1]:
                cost = 0
            d[i + 1, j + 1] = min(
                d[i, j] + cost,
                d[i + 1, j] + 1,
                d[i, j + 1] + 1,
                d[k, last_col] + (i - k - 1) + 1 + (j - last_col - 1),
            )
            if cost == 0:
                last_col = j
        last_row[a[i - 1]] = i
    return int(d[la + 1, lb + 1])
