"""Random forest: bootstrap-sampled gini trees, probability averaging."""

import numpy as np

from .tree import DecisionTree


class RandomForest:
    def __init__(self, n_estimators=300, max_features="sqrt", max_depth=None,
                 min_samples_leaf=1, bootstrap=True, seed=0):
        self.n_estimators = n_estimators
        self.max_features = max_features
        self.max_depth = max_depth
        self.min_samples_leaf = min_samples_leaf
        self.bootstrap = bootstrap
        self.seed = seed
        self.trees = []

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        n = X.shape[0]
        self.trees = []
        seeds = np.random.SeedSequence(self.seed).spawn(self.n_estimators)
        for ss in seeds:
            rng = np.random.default_rng(ss)
            rows = rng.integers(0, n, size=n) if self.bootstrap else np.arange(n)
            tree = DecisionTree(
                max_depth=self.max_depth,
                min_samples_leaf=self.min_samples_leaf,
                max_features=self.max_features,
                seed=ss.spawn(1)[0],
            )
            tree.fit(X[rows], y[rows])
            self.trees.append(tree)
        return self

    def predict_positive(self, X):
        X = np.asarray(X, dtype=np.float64)
        acc = np.zeros(X.shape[0])
        for tree in self.trees:
            acc += tree.predict_positive(X)
        return acc / len(self.trees)

    def predict_proba(self, X):
        p = self.predict_positive(X)
        return np.column_stack([1.0 - p, p])

    def predict(self, X):
        return (self.predict_positive(X) >= 0.5).astype(int)
