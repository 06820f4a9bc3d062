"""Gradient-boosted trees for binary log-loss, grown leaf-wise
(best-first) over histogram-binned features.

Leaf values use soft-thresholded gradient sums:

    value = -sign(G) * max(0, |G| - l1) / (H + l2)

Trees whose leaves are all exactly zero are dropped, so a zero learning
rate leaves the ensemble empty and prediction returns the class prior
exactly.
"""

import heapq

import numpy as np

from .._kernels import best_split_hist, build_histograms

MAX_BINS = 64


def _sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def _soft_threshold(g, l1):
    return np.sign(g) * max(0.0, abs(g) - l1)


class _TreeNodes:
    """Flat node arrays; feature < 0 marks a leaf holding `value`.
    Internal nodes route x[feature] < threshold to the left child.
    """

    def __init__(self):
        self.feature = []
        self.threshold = []
        self.left = []
        self.right = []
        self.value = []

    def add(self):
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.value.append(0.0)
        return len(self.feature) - 1

    def predict(self, X):
        out = np.empty(X.shape[0])
        for i, x in enumerate(X):
            node = 0
            while self.feature[node] >= 0:
                if x[self.feature[node]] < self.threshold[node]:
                    node = self.left[node]
                else:
                    node = self.right[node]
            out[i] = self.value[node]
        return out


class GradientBoostedTrees:
    def __init__(self, n_estimators=100, learning_rate=0.1, num_leaves=31,
                 feature_fraction=0.6, min_data_in_leaf=20, lambda_l1=1.0,
                 lambda_l2=1.0, seed=0):
        self.n_estimators = n_estimators
        self.learning_rate = learning_rate
        self.num_leaves = num_leaves
        self.feature_fraction = feature_fraction
        self.min_data_in_leaf = min_data_in_leaf
        self.lambda_l1 = lambda_l1
        self.lambda_l2 = lambda_l2
        self.seed = seed
        self.trees = []
        self.prior = 0.5
        self.base_score = 0.0

    def _bin_features(self, X):
        """Interior cut points per feature; bin = count of cuts <= x."""
        self.cuts = []
        n = X.shape[0]
        qs = np.linspace(0, 1, min(MAX_BINS, max(2, n)) + 1)[1:-1]
        binned = np.empty(X.shape, dtype=np.uint8)
        for f in range(X.shape[1]):
            col = X[:, f]
            cuts = np.unique(np.quantile(col, qs)) if qs.size else np.array([])
            cuts = cuts[(cuts > col.min()) & (cuts <= col.max())]
            self.cuts.append(cuts)
            binned[:, f] = np.searchsorted(cuts, col, side="right")
        return binned

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        n, d = X.shape
        self.prior = float(np.mean(y))
        p_clip = min(max(self.prior, 1e-12), 1 - 1e-12)
        self.base_score = float(np.log(p_clip / (1 - p_clip)))
        self.trees = []

        binned = self._bin_features(X)
        n_bins = MAX_BINS
        raw = np.full(n, self.base_score)
        rng = np.random.default_rng(self.seed)
        k_feats = max(1, int(np.ceil(self.feature_fraction * d)))

        for _ in range(self.n_estimators):
            p = _sigmoid(raw)
            grad = p - y
            hess = p * (1.0 - p)
            feats = np.sort(rng.choice(d, size=k_feats, replace=False))
            tree = self._grow_tree(binned, grad, hess, feats, n_bins)
            if all(v == 0.0 for v in tree.value):
                continue
            self.trees.append(tree)
            raw += tree.predict(X)
        return self

    def _leaf_value(self, g, h):
        return -_soft_threshold(g, self.lambda_l1) / (h + self.lambda_l2) \
            * self.learning_rate

    def _grow_tree(self, binned, grad, hess, feats, n_bins):
        tree = _TreeNodes()
        root = tree.add()
        rows = np.arange(binned.shape[0])
        tree.value[root] = self._leaf_value(grad.sum(), hess.sum())

        heap = []
        counter = 0

        def push_candidate(node, rows_):
            nonlocal counter
            if rows_.size < 2 * self.min_data_in_leaf:
                return
            hist = build_histograms(binned, grad, hess, rows_, n_bins)
            f, b, gain = best_split_hist(
                hist, feats, self.lambda_l1, self.lambda_l2, self.min_data_in_leaf
            )
            if f < 0 or gain <= 0.0:
                return
            heapq.heappush(heap, (-gain, counter, node, rows_, f, b))
            counter += 1

        push_candidate(root, rows)
        n_leaves = 1
        while heap and n_leaves < self.num_leaves:
            _, _, node, rows_, f, b = heapq.heappop(heap)
            cuts = self.cuts[f]
            go_left = binned[rows_, f] <= b
            left_rows = rows_[go_left]
            right_rows = rows_[~go_left]
            tree.feature[node] = f
            tree.threshold[node] = float(cuts[b])
            lid = tree.add()
            rid = tree.add()
            tree.left[node] = lid
            tree.right[node] = rid
            tree.value[lid] = self._leaf_value(grad[left_rows].sum(), hess[left_rows].sum())
            tree.value[rid] = self._leaf_value(grad[right_rows].sum(), hess[right_rows].sum())
            n_leaves += 1
            push_candidate(lid, left_rows)
            push_candidate(rid, right_rows)
        return tree

    def decision_function(self, X):
        X = np.asarray(X, dtype=np.float64)
        raw = np.full(X.shape[0], self.base_score)
        for tree in self.trees:
            raw += tree.predict(X)
        return raw

    def predict_positive(self, X):
        X = np.asarray(X, dtype=np.float64)
        if not self.trees:
            return np.full(X.shape[0], self.prior)
        return _sigmoid(self.decision_function(X))

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
