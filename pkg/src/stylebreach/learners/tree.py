"""Binary classification tree (weighted gini, axis-aligned splits).

Used directly as the AdaBoost base learner and as the forest member.
Split search runs through the kernel backend; features are scanned in
sorted order so both backends pick identical trees.
"""

import numpy as np

from .._kernels import best_split_dense

MIN_GAIN = 1e-12


class DecisionTree:
    def __init__(self, max_depth=None, min_samples_leaf=1, max_features=None, seed=0):
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.max_features = max_features
        self.seed = seed
        # parallel arrays: feature < 0 marks a leaf holding `value`
        self.feature = []
        self.threshold = []
        self.left = []
        self.right = []
        self.value = []

    def _n_candidate_features(self, n_features):
        mf = self.max_features
        if mf is None:
            return n_features
        if mf == "sqrt":
            return max(1, int(np.sqrt(n_features)))
        return max(1, min(n_features, int(mf)))

    def _add_node(self):
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.value.append(0.5)
        return len(self.feature) - 1

    def fit(self, X, y, sample_weight=None):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        n, d = X.shape
        w = (
            np.full(n, 1.0 / n)
            if sample_weight is None
            else np.asarray(sample_weight, dtype=np.float64)
        )
        rng = np.random.default_rng(self.seed)
        k = self._n_candidate_features(d)

        root = self._add_node()
        stack = [(root, np.arange(n), 0)]
        while stack:
            node, rows, depth = stack.pop()
            wy = float(w[rows] @ y[rows])
            wt = float(w[rows].sum())
            self.value[node] = wy / wt if wt > 0 else 0.5

            if self.max_depth is not None and depth >= self.max_depth:
                continue
            if rows.size < 2 * self.min_samples_leaf:
                continue

            if k < d:
                candidates = np.sort(rng.choice(d, size=k, replace=False))
            else:
                candidates = np.arange(d)

            best_gain, best_f, best_thr = MIN_GAIN, -1, 0.0
            for f in candidates:
                thr, gain = best_split_dense(
                    X[rows, f], y[rows], w[rows], self.min_samples_leaf
                )
                if gain > best_gain:
                    best_gain, best_f, best_thr = gain, int(f), thr
            if best_f < 0:
                continue

            mask = X[rows, best_f] <= best_thr
            left_rows = rows[mask]
            right_rows = rows[~mask]
            if left_rows.size == 0 or right_rows.size == 0:
                continue
            self.feature[node] = best_f
            self.threshold[node] = best_thr
            self.left[node] = self._add_node()
            self.right[node] = self._add_node()
            stack.append((self.right[node], right_rows, depth + 1))
            stack.append((self.left[node], left_rows, depth + 1))
        return self

    def predict_positive(self, X):
        """P(label 1) per row: the weighted positive fraction of the leaf."""
        X = np.asarray(X, dtype=np.float64)
        out = np.empty(X.shape[0])
        for i, x in enumerate(X):
            node = 0
            while self.feature[node] >= 0:
                if x[self.feature[node]] <= self.threshold[node]:
                    node = self.left[node]
                else:
                    node = self.right[node]
            out[i] = self.value[node]
        return out

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
