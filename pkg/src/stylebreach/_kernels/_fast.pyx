# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: split search for the tree learners and edit distance.

Mirrors _pure exactly, including candidate scan order and first-maximum
tie-breaking.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline double _leaf_score(double g, double h, double l1, double l2) nogil:
    cdef double t = g
    if t > 0.0:
        t = t - l1
        if t < 0.0:
            t = 0.0
    else:
        t = t + l1
        if t > 0.0:
            t = 0.0
    return t * t / (h + l2)


def best_split_dense(values, y, w, Py_ssize_t min_leaf):
    """Best binary split of one feature column by weighted gini decrease.

    Returns (threshold, gain); gain < 0 means no valid split.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] v_arr = np.ascontiguousarray(values, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y_arr = np.ascontiguousarray(y, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] w_arr = np.ascontiguousarray(w, dtype=np.float64)
    cdef Py_ssize_t n = v_arr.shape[0]
    if n < 2 * min_leaf:
        return 0.0, -1.0
    cdef cnp.ndarray[cnp.intp_t, ndim=1] order = np.argsort(v_arr, kind="stable")

    cdef double[:] v = v_arr
    cdef double[:] yy = y_arr
    cdef double[:] ww = w_arr
    cdef cnp.intp_t[:] o = order

    cdef double total_w = 0.0, total_wy = 0.0
    cdef Py_ssize_t i, idx
    for i in range(n):
        idx = o[i]
        total_w += ww[idx]
        total_wy += ww[idx] * yy[idx]
    if total_w <= 0.0:
        return 0.0, -1.0
    cdef double parent = 2.0 * total_wy * (total_w - total_wy) / total_w

    cdef double lw = 0.0, lpos = 0.0
    cdef double best_gain = -1.0, best_thr = 0.0
    cdef double rw, rpos, child, gain, vi, vnext
    cdef int found = 0
    for i in range(n - 1):
        idx = o[i]
        lw += ww[idx]
        lpos += ww[idx] * yy[idx]
        if i + 1 < min_leaf or n - 1 - i < min_leaf:
            continue
        vi = v[o[i]]
        vnext = v[o[i + 1]]
        if not vi < vnext:
            continue
        rw = total_w - lw
        rpos = total_wy - lpos
        if lw <= 0.0 or rw <= 0.0:
            continue
        child = 2.0 * (lpos * (lw - lpos) / lw + rpos * (rw - rpos) / rw)
        gain = parent - child
        if gain > best_gain or not found:
            found = 1
            best_gain = gain
            best_thr = 0.5 * (vi + vnext)
    if not found:
        return 0.0, -1.0
    return best_thr, best_gain


def build_histograms(binned, grad, hess, rows, Py_ssize_t n_bins):
    """Per-feature (n_bins, 3) histograms of [grad sum, hess sum, count]."""
    cdef cnp.uint8_t[:, :] bv = np.ascontiguousarray(binned, dtype=np.uint8)
    cdef double[:] g = np.ascontiguousarray(grad, dtype=np.float64)
    cdef double[:] h = np.ascontiguousarray(hess, dtype=np.float64)
    cdef cnp.intp_t[:] r = np.ascontiguousarray(rows, dtype=np.intp)
    cdef Py_ssize_t n_features = bv.shape[1]
    cdef Py_ssize_t m = r.shape[0]
    hist_arr = np.zeros((n_features, n_bins, 3), dtype=np.float64)
    cdef double[:, :, :] hist = hist_arr
    cdef Py_ssize_t i, f, row
    cdef Py_ssize_t b
    cdef double gi, hi
    with nogil:
        for i in range(m):
            row = r[i]
            gi = g[row]
            hi = h[row]
            for f in range(n_features):
                b = bv[row, f]
                hist[f, b, 0] += gi
                hist[f, b, 1] += hi
                hist[f, b, 2] += 1.0
    return hist_arr


def best_split_hist(hist, features, double l1, double l2, double min_leaf):
    """Best (feature, bin) split over histogram bins.

    Returns (feature, bin, gain); gain < 0 means no valid split.
    """
    cdef double[:, :, :] hv = np.ascontiguousarray(hist, dtype=np.float64)
    cdef cnp.intp_t[:] fv = np.ascontiguousarray(features, dtype=np.intp)
    cdef Py_ssize_t n_bins = hv.shape[1]
    cdef Py_ssize_t nf = fv.shape[0]
    cdef Py_ssize_t fi, f, b
    cdef double tg, th, tc, lg, lh, lc, rg, rh, rc, gain, parent
    cdef double best_gain = -1.0
    cdef Py_ssize_t best_f = -1, best_b = -1
    with nogil:
        for fi in range(nf):
            f = fv[fi]
            tg = 0.0
            th = 0.0
            tc = 0.0
            for b in range(n_bins):
                tg += hv[f, b, 0]
                th += hv[f, b, 1]
                tc += hv[f, b, 2]
            parent = _leaf_score(tg, th, l1, l2)
            lg = 0.0
            lh = 0.0
            lc = 0.0
            for b in range(n_bins - 1):
                lg += hv[f, b, 0]
                lh += hv[f, b, 1]
                lc += hv[f, b, 2]
                rc = tc - lc
                if lc < min_leaf or rc < min_leaf:
                    continue
                rg = tg - lg
                rh = th - lh
                gain = 0.5 * (_leaf_score(lg, lh, l1, l2)
                              + _leaf_score(rg, rh, l1, l2) - parent)
                if gain > best_gain:
                    best_gain = gain
                    best_f = f
                    best_b = b
    return best_f, best_b, best_gain


def damerau_levenshtein(str a, str b):
    """Unrestricted Damerau-Levenshtein distance (transpositions may be
    edited again, unlike the restricted optimal-string-alignment variant).
    """
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    alphabet = {}
    cdef cnp.ndarray[cnp.intp_t, ndim=1] ca = np.empty(la, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] cb = np.empty(lb, dtype=np.intp)
    cdef Py_ssize_t i, j
    for i in range(la):
        ca[i] = alphabet.setdefault(a[i], len(alphabet))
    for j in range(lb):
        cb[j] = alphabet.setdefault(b[j], len(alphabet))
    cdef Py_ssize_t sigma = len(alphabet)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] da_arr = np.zeros(sigma, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=2] d_arr = np.zeros((la + 2, lb + 2), dtype=np.intp)
    cdef cnp.intp_t[:] da = da_arr
    cdef cnp.intp_t[:, :] d = d_arr
    cdef cnp.intp_t[:] av = ca
    cdef cnp.intp_t[:] bv = cb
    cdef Py_ssize_t inf = la + lb
    cdef Py_ssize_t k, l, cost, best, cand, db
    with nogil:
        d[0, 0] = inf
        for i in range(la + 1):
            d[i + 1, 0] = inf
            d[i + 1, 1] = i
        for j in range(lb + 1):
            d[0, j + 1] = inf
            d[1, j + 1] = j
        for i in range(1, la + 1):
            db = 0
            for j in range(1, lb + 1):
                k = da[bv[j - 1]]
                l = db
                if av[i - 1] == bv[j - 1]:
                    cost = 0
                    db = j
                else:
                    cost = 1
                best = d[i, j] + cost
                cand = d[i + 1, j] + 1
                if cand < best:
                    best = cand
                cand = d[i, j + 1] + 1
                if cand < best:
                    best = cand
                cand = d[k, l] + (i - k - 1) + 1 + (j - l - 1)
                if cand < best:
                    best = cand
                d[i + 1, j + 1] = best
            da[av[i - 1]] = i
    return int(d[la + 1, lb + 1])
