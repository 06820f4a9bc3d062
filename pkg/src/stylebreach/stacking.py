"""Two-level stacked classifier for detecting a style change in a document.

Zero level: for every active feature group, four classifier kinds are
trained on that group's vector and blended by holdout-accuracy weights
into a single scalar per document. A TF.IDF gradient-boosting branch
contributes one more scalar. A logistic regression on those
(n_groups + 1) scalars is the final model.

Training protocol: stratified 75/25 split; zero-level models and the
branch fit on the 75%; blend weights, branch output, and the meta model
come from the untouched 25%; zero-level models are then refit on all
documents keeping the weights, while the branch is kept as trained
unless explicitly asked otherwise.
"""

import os
import pickle
from dataclasses import dataclass

import numpy as np

from .features import DEFAULT_ACTIVE_GROUPS, GROUPS, extract_matrix
from .features.boundary import build_boundary_score_table, statements_from_borders
from .learners import ZERO_LEVEL_KINDS, LearnerSpec, LogisticRegression, train_learner
from .tfidf import DEFAULT_MIN_DF, train_branch

MODEL_CONTAINER = "stylebreach-model"
MODEL_CONTAINER_VERSION = 1
MIN_TRAIN_DOCS = 40
HOLDOUT_FRACTION = 0.25


@dataclass(frozen=True)
class StackConfig:
    active_groups: tuple = DEFAULT_ACTIVE_GROUPS
    transductive_idf: bool = False
    retrain_branch: bool = False
    fragment_augmentation: bool = False
    min_df: int = DEFAULT_MIN_DF

    def __post_init__(self):
        bad = [g for g in self.active_groups if g not in GROUPS]
        if bad:
            raise ValueError(f"unknown feature groups: {bad}")
        if not self.active_groups:
            raise ValueError("no active feature groups")


@dataclass
class StackModel:
    config: StackConfig
    seed: int
    lexicon: object
    zero_level: dict          # group -> tuple of trained zero-level models
    weights: dict             # group -> blend weight per zero-level kind
    holdout_accuracy: dict    # group -> holdout accuracy per kind
    meta: LogisticRegression
    branch: object
    boundary_table: object
    train_indices: np.ndarray
    holdout_indices: np.ndarray

    @property
    def meta_dim(self):
        return len(self.config.active_groups) + 1


def default_learner_factory(kind, X, y, seed, group):
    """Train one zero-level model; the hook point for injecting stand-ins."""
    return train_learner(LearnerSpec(kind), X, y, seed=seed)


def _stratified_split(labels, seed):
    """75/25 row split keeping both classes on both sides."""
    labels = np.asarray(labels, dtype=np.int64)
    rng = np.random.default_rng(np.random.SeedSequence(seed).spawn(1)[0])
    train_idx, holdout_idx = [], []
    for cls in (0, 1):
        rows = np.where(labels == cls)[0]
        rows = rows[rng.permutation(len(rows))]
        n_hold = int(round(len(rows) * HOLDOUT_FRACTION))
        n_hold = min(max(n_hold, 1), len(rows) - 1)
        holdout_idx.extend(rows[:n_hold])
        train_idx.extend(rows[n_hold:])
    return np.array(sorted(train_idx)), np.array(sorted(holdout_idx))


def group_weights(models, X_holdout, y_holdout):
    """Accuracy-proportional blend weights; uniform when all accuracies
    are zero."""
    accs = np.array(
        [np.mean(m.predict(X_holdout) == y_holdout) for m in models]
    )
    total = accs.sum()
    if total == 0:
        return np.full(len(models), 1.0 / len(models)), accs
    return accs / total, accs


def _blend(models, weights, X):
    p = np.zeros(X.shape[0])
    for m, w in zip(models, weights):
        if w:
            p += w * m.predict_proba(X)[:, 1]
    return p


def _augment_fragments(docs, labels, seed):
    """Add one half-length and one quarter-length sentence slice per
    document, labelled like its source."""
    rng = np.random.default_rng(np.random.SeedSequence(seed).spawn(2)[1])
    out_docs = list(docs)
    out_labels = list(labels)
    for doc, label in zip(docs, labels):
        n = doc.n_sentences
        for frac in (2, 4):
            length = max(1, n // frac)
            if length >= n:
                continue
            start = int(rng.integers(0, n - length + 1))
            out_docs.append(
                doc.slice_sentences(start, start + length,
                                    doc_id=f"{doc.doc_id}#aug{frac}")
            )
            out_labels.append(label)
    return out_docs, np.asarray(out_labels, dtype=np.int64)


def _fit_zero_level(docs, labels, groups, lexicon, table, seed, factory):
    models = {}
    for gi, group in enumerate(groups):
        X = extract_matrix(docs, group, lexicon, table)
        ss = np.random.SeedSequence([seed, gi])
        kind_seeds = [int(s.generate_state(1)[0]) for s in ss.spawn(len(ZERO_LEVEL_KINDS))]
        models[group] = tuple(
            factory(kind, X, labels, kind_seed, group)
            for kind, kind_seed in zip(ZERO_LEVEL_KINDS, kind_seeds)
        )
    return models


def train_stack(docs, labels, lexicon, seed=0, config=None,
                learner_factory=None, borders=None, extra_texts_for_idf=None):
    """Train the full stack on documents with binary change labels.

    borders, when given, is a per-document list of known style-change
    sentence indices (empty for single-author documents); it feeds the
    positional word-score table used by the statement_boundary group.
    extra_texts_for_idf is only consulted when config.transductive_idf
    is set.
    """
    config = config or StackConfig()
    factory = learner_factory or default_learner_factory
    labels = np.asarray(labels, dtype=np.int64)
    if len(docs) != len(labels):
        raise ValueError("document/label count mismatch")
    if len(docs) < MIN_TRAIN_DOCS:
        raise ValueError(f"need at least {MIN_TRAIN_DOCS} training documents")
    if set(np.unique(labels)) != {0, 1}:
        raise ValueError("labels must contain both classes 0 and 1")

    table = None
    if borders is not None:
        statements = []
        for doc, doc_borders in zip(docs, borders):
            if doc_borders is None:
                continue
            statements.extend(
                statements_from_borders(doc, doc_borders, lexicon.stop_words)
            )
        table = build_boundary_score_table(statements, stop_words=lexicon.stop_words)
    if "statement_boundary" in config.active_groups and table is None:
        raise ValueError(
            "statement_boundary group needs per-document borders to build "
            "its word-score table"
        )

    train_idx, holdout_idx = _stratified_split(labels, seed)
    groups = tuple(config.active_groups)

    fit_docs = [docs[i] for i in train_idx]
    fit_labels = labels[train_idx]
    if config.fragment_augmentation:
        fit_docs, fit_labels = _augment_fragments(fit_docs, fit_labels, seed)

    zero_75 = _fit_zero_level(
        fit_docs, fit_labels, groups, lexicon, table, seed, factory
    )

    hold_docs = [docs[i] for i in holdout_idx]
    hold_labels = labels[holdout_idx]
    hold_matrices = {g: extract_matrix(hold_docs, g, lexicon, table) for g in groups}

    weights, accuracy = {}, {}
    meta_cols = []
    for group in groups:
        w, accs = group_weights(zero_75[group], hold_matrices[group], hold_labels)
        weights[group] = w
        accuracy[group] = accs
        meta_cols.append(_blend(zero_75[group], w, hold_matrices[group]))

    extra = list(extra_texts_for_idf) if (
        config.transductive_idf and extra_texts_for_idf
    ) else None
    branch = train_branch(
        [d.text for d in fit_docs], fit_labels, seed=seed,
        extra_texts_for_idf=extra, min_df=config.min_df,
    )
    meta_cols.append(branch.predict_texts([d.text for d in hold_docs]))

    X_meta = np.column_stack(meta_cols)
    meta = LogisticRegression(C=1.0, penalty_scale="sum", seed=seed)
    meta.fit(X_meta, hold_labels.astype(np.float64))

    all_docs = list(docs)
    all_labels = labels
    if config.fragment_augmentation:
        all_docs, all_labels = _augment_fragments(all_docs, all_labels, seed)
    zero_full = _fit_zero_level(
        all_docs, all_labels, groups, lexicon, table, seed, factory
    )

    if config.retrain_branch:
        branch = train_branch(
            [d.text for d in all_docs], all_labels, seed=seed,
            extra_texts_for_idf=extra, min_df=config.min_df,
        )

    return StackModel(
        config=config,
        seed=seed,
        lexicon=lexicon,
        zero_level=zero_full,
        weights=weights,
        holdout_accuracy=accuracy,
        meta=meta,
        branch=branch,
        boundary_table=table,
        train_indices=train_idx,
        holdout_indices=holdout_idx,
    )


def meta_features(model, docs):
    """The (n_docs, n_groups + 1) matrix fed to the meta learner."""
    cols = []
    for group in model.config.active_groups:
        X = extract_matrix(docs, group, model.lexicon, model.boundary_table)
        cols.append(_blend(model.zero_level[group], model.weights[group], X))
    cols.append(model.branch.predict_texts([d.text for d in docs]))
    return np.column_stack(cols)


def predict_change(model, docs):
    """Probability that each document contains a style change."""
    if not docs:
        return np.zeros(0)
    return model.meta.predict_proba(meta_features(model, docs))[:, 1]


def save_model(model, path):
    payload = pickle.dumps(
        {
            "container": MODEL_CONTAINER,
            "container_version": MODEL_CONTAINER_VERSION,
            "model": model,
        },
        protocol=4,
    )
    tmp = f"{path}.tmp"
    with open(tmp, "wb") as fh:
        fh.write(payload)
    os.replace(tmp, path)


def load_model(path):
    with open(path, "rb") as fh:
        data = pickle.load(fh)
    if not isinstance(data, dict) or data.get("container") != MODEL_CONTAINER:
        raise ValueError(f"{path} is not a stylebreach model file")
    version = data.get("container_version")
    if version != MODEL_CONTAINER_VERSION:
        raise ValueError(
            f"unsupported model container version {version}; "
            f"this build reads version {MODEL_CONTAINER_VERSION}"
        )
    return data["model"]
