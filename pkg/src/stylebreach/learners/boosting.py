"""AdaBoost over decision stumps (discrete two-class boosting).

Sample weights are renormalized to sum to one after every round; the sums
are recorded on the model so the renormalization is externally checkable.
"""

import numpy as np

from .tree import DecisionTree

EPS = 1e-10


class AdaBoost:
    def __init__(self, n_estimators=300, base_depth=1, seed=0):
        self.n_estimators = n_estimators
        self.base_depth = base_depth
        self.seed = seed
        self.stumps = []
        self.alphas = []
        self.weight_sums = []

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.int64)
        n = X.shape[0]
        w = np.full(n, 1.0 / n)
        self.stumps = []
        self.alphas = []
        self.weight_sums = []
        seeds = np.random.SeedSequence(self.seed).spawn(self.n_estimators)
        for ss in seeds:
            stump = DecisionTree(max_depth=self.base_depth, seed=ss)
            stump.fit(X, y, sample_weight=w)
            pred = stump.predict(X)
            miss = pred != y
            err = float(w[miss].sum())
            if err >= 0.5:
                if not self.stumps:
                    self.stumps.append(stump)
                    self.alphas.append(0.0)
                    self.weight_sums.append(float(w.sum()))
                break
            err = max(err, EPS)
            alpha = 0.5 * np.log((1.0 - err) / err)
            self.stumps.append(stump)
            self.alphas.append(float(alpha))
            w = w * np.exp(alpha * np.where(miss, 1.0, -1.0))
            w = w / w.sum()
            self.weight_sums.append(float(w.sum()))
            if err <= EPS:
                break
        return self

    def _margin(self, X):
        """Weighted vote in [-1, 1]: sum of alpha-weighted {-1,+1} votes
        normalized by the total alpha.
        """
        X = np.asarray(X, dtype=np.float64)
        total = sum(self.alphas)
        acc = np.zeros(X.shape[0])
        for stump, alpha in zip(self.stumps, self.alphas):
            acc += alpha * (2.0 * stump.predict(X) - 1.0)
        if total <= 0:
            return acc
        return acc / total

    def predict_positive(self, X):
        return (self._margin(X) + 1.0) / 2.0

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
