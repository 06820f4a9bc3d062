"""Uniform training interface over the native classifiers.

Kinds: kernel_margin, random_forest, adaboost, mlp, gbm, logreg. Default
hyper-parameters are the reference configuration; any can be overridden
through LearnerSpec.hyper.
"""

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .boosting import AdaBoost
from .forest import RandomForest
from .gbm import GradientBoostedTrees
from .linear import LogisticRegression
from .mlp import MLP
from .svm import KernelMarginClassifier
from .tree import DecisionTree

KINDS = ("kernel_margin", "random_forest", "adaboost", "mlp", "gbm", "logreg")

ZERO_LEVEL_KINDS = ("kernel_margin", "random_forest", "adaboost", "mlp")

_CLASSES = {
    "kernel_margin": KernelMarginClassifier,
    "random_forest": RandomForest,
    "adaboost": AdaBoost,
    "mlp": MLP,
    "gbm": GradientBoostedTrees,
    "logreg": LogisticRegression,
}

DEFAULT_HYPER = {
    "kernel_margin": {"C": 1.0, "tol": 1e-3, "gamma": "scale", "class_weight": "balanced"},
    "random_forest": {"n_estimators": 300, "max_features": "sqrt", "bootstrap": True},
    "adaboost": {"n_estimators": 300, "base_depth": 1},
    "mlp": {
        "n_hidden": 100,
        "alpha": 1e-4,
        "learning_rate": 1e-3,
        "batch_size": 200,
        "max_iter": 10000,
    },
    "gbm": {
        "n_estimators": 100,
        "learning_rate": 0.1,
        "num_leaves": 31,
        "feature_fraction": 0.6,
        "min_data_in_leaf": 20,
        "lambda_l1": 1.0,
        "lambda_l2": 1.0,
    },
    "logreg": {"C": 1.0, "tol": 1e-4, "max_iter": 100, "solver": "newton"},
}


@dataclass(frozen=True)
class LearnerSpec:
    kind: str
    hyper: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown learner kind {self.kind!r}")
        allowed = set(DEFAULT_HYPER[self.kind]) | {"max_depth", "min_samples_leaf",
                                                   "penalty_scale", "max_passes"}
        bad = set(self.hyper) - allowed
        if bad:
            raise ValueError(f"{self.kind}: unknown hyper-parameters {sorted(bad)}")

    def resolved_hyper(self):
        merged = dict(DEFAULT_HYPER[self.kind])
        merged.update(self.hyper)
        return merged


@dataclass(frozen=True)
class TrainedLearner:
    spec: LearnerSpec
    model: object
    n_features: int
    train_fingerprint: str

    def predict_proba(self, X):
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self.n_features:
            raise ValueError(
                f"expected {self.n_features} feature columns, got shape {X.shape}"
            )
        return self.model.predict_proba(X)

    def predict(self, X):
        return (self.predict_proba(X)[:, 1] >= 0.5).astype(int)


def data_fingerprint(X, y, seed, kind):
    h = hashlib.sha256()
    h.update(kind.encode())
    h.update(str(seed).encode())
    h.update(np.ascontiguousarray(X, dtype=np.float64).tobytes())
    h.update(np.ascontiguousarray(y, dtype=np.int64).tobytes())
    return h.hexdigest()


def train_learner(spec, X, y, seed=0):
    """Fit one learner; validates inputs and stamps a training fingerprint."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2:
        raise ValueError("X must be 2-dimensional")
    if X.shape[0] != y.shape[0]:
        raise ValueError("X and y row counts differ")
    if X.shape[0] < 2:
        raise ValueError("need at least 2 training rows")
    if not np.all(np.isfinite(X)):
        raise ValueError("non-finite feature values")
    classes = np.unique(y)
    if not np.array_equal(classes, np.array([0, 1])):
        raise ValueError(f"labels must contain both classes 0 and 1, got {classes}")

    model = _CLASSES[spec.kind](**spec.resolved_hyper(), seed=seed)
    model.fit(X, y)
    return TrainedLearner(
        spec=spec,
        model=model,
        n_features=X.shape[1],
        train_fingerprint=data_fingerprint(X, y, seed, spec.kind),
    )


def accuracy(model, X, y):
    y = np.asarray(y, dtype=np.int64)
    return float(np.mean(model.predict(X) == y))


__all__ = [
    "KINDS",
    "ZERO_LEVEL_KINDS",
    "DEFAULT_HYPER",
    "LearnerSpec",
    "TrainedLearner",
    "train_learner",
    "accuracy",
    "data_fingerprint",
    "DecisionTree",
    "RandomForest",
    "AdaBoost",
    "MLP",
    "GradientBoostedTrees",
    "LogisticRegression",
    "KernelMarginClassifier",
]
