"""TF.IDF vectorization, coefficient-threshold feature selection, and the
five-fold bagged gradient-boosting branch.

tf is the raw term count over the document token count; idf is
ln((1+N)/(1+df)) + 1. The vocabulary always comes from the training
documents alone; extra documents (the transductive mode) only shift the
idf statistics. Rows are L2-normalized.
"""

from dataclasses import dataclass

import numpy as np

from .learners import GradientBoostedTrees, LogisticRegression

DEFAULT_MIN_DF = 2
SELECT_THRESHOLD = 0.1
SELECT_FALLBACK_TOP = 100
BAG_FOLDS = 5


def _terms(text):
    return [t for t in text.lower().split() if t]


def tokenize_for_tfidf(text):
    """Lowercase unigrams on whitespace with edge punctuation stripped."""
    out = []
    for t in _terms(text):
        t = t.strip(".,;:!?\"'()[]‘’“”")
        if t:
            out.append(t)
    return out


@dataclass(frozen=True)
class TfidfVectorizer:
    vocabulary: dict
    idf: np.ndarray
    fitted_on: str

    def transform(self, texts):
        vocab = self.vocabulary
        X = np.zeros((len(texts), len(vocab)))
        for row, text in enumerate(texts):
            terms = tokenize_for_tfidf(text)
            if not terms:
                continue
            inv = 1.0 / len(terms)
            for t in terms:
                col = vocab.get(t)
                if col is not None:
                    X[row, col] += inv
        X *= self.idf
        norms = np.sqrt(np.einsum("ij,ij->i", X, X))
        norms[norms == 0] = 1.0
        return X / norms[:, None]


def fit_tfidf(train_texts, extra_texts_for_idf=None, min_df=DEFAULT_MIN_DF):
    """Vocabulary from train texts (document frequency >= min_df); idf
    counted over train plus any extra texts.
    """
    if not train_texts:
        raise ValueError("empty training corpus")
    train_sets = [set(tokenize_for_tfidf(t)) for t in train_texts]
    df_train = {}
    for s in train_sets:
        for t in s:
            df_train[t] = df_train.get(t, 0) + 1
    vocab_terms = sorted(t for t, c in df_train.items() if c >= min_df)
    if not vocab_terms:
        raise ValueError(f"no term reaches min_df={min_df}; vocabulary is empty")
    vocabulary = {t: i for i, t in enumerate(vocab_terms)}

    extra = list(extra_texts_for_idf) if extra_texts_for_idf else []
    df = dict(df_train)
    for text in extra:
        for t in set(tokenize_for_tfidf(text)):
            df[t] = df.get(t, 0) + 1
    n_docs = len(train_texts) + len(extra)

    idf = np.array(
        [np.log((1.0 + n_docs) / (1.0 + df.get(t, 0))) + 1.0 for t in vocab_terms]
    )
    return TfidfVectorizer(
        vocabulary=vocabulary,
        idf=idf,
        fitted_on="transductive" if extra else "train-only",
    )


def select_features(X, y, threshold=SELECT_THRESHOLD, seed=0, tol=1e-9):
    """Columns whose selection-model coefficient exceeds the threshold in
    absolute value; falls back to the top 100 coefficients when none do.
    """
    X = np.asarray(X, dtype=np.float64)
    if not np.any(X):
        raise ValueError("all-zero feature matrix: nothing to select")
    lr = LogisticRegression(
        C=2.0, solver="sag", penalty_scale="mean", tol=tol, max_iter=100, seed=seed
    )
    lr.fit(X, np.asarray(y, dtype=np.float64))
    coefs = np.abs(lr.coef_)
    mask = coefs > threshold
    if not np.any(mask):
        top = np.argsort(-coefs, kind="stable")[:SELECT_FALLBACK_TOP]
        mask = np.zeros(X.shape[1], dtype=bool)
        mask[top] = True
    return mask


@dataclass(frozen=True)
class GbmBranch:
    vectorizer: TfidfVectorizer
    selected: np.ndarray
    models: tuple

    def predict_texts(self, texts):
        X = self.vectorizer.transform(texts)[:, self.selected]
        return np.mean([m.predict_proba(X)[:, 1] for m in self.models], axis=0)


def train_gbm_bagged(X_selected, y, seed=0, gbm_hyper=None):
    """Five models, each trained on a distinct 4/5 fold complement;
    prediction is their plain probability mean.
    """
    X = np.asarray(X_selected, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    n = X.shape[0]
    if n < 2 * BAG_FOLDS:
        raise ValueError(f"need at least {2 * BAG_FOLDS} rows for {BAG_FOLDS}-fold bagging")
    rng = np.random.default_rng(seed)
    fold_of = np.tile(np.arange(BAG_FOLDS), n // BAG_FOLDS + 1)[:n]
    fold_of = fold_of[rng.permutation(n)]
    hyper = gbm_hyper or {}
    models = []
    for fold in range(BAG_FOLDS):
        rows = np.where(fold_of != fold)[0]
        model = GradientBoostedTrees(**hyper, seed=seed * BAG_FOLDS + fold + 1)
        model.fit(X[rows], y[rows])
        models.append(model)
    return models


def train_branch(train_texts, y, seed=0, extra_texts_for_idf=None,
                 min_df=DEFAULT_MIN_DF, gbm_hyper=None):
    """Fit the full branch: vectorize, select, bag."""
    vec = fit_tfidf(train_texts, extra_texts_for_idf, min_df=min_df)
    X = vec.transform(train_texts)
    mask = select_features(X, y, seed=seed)
    models = train_gbm_bagged(X[:, mask], y, seed=seed, gbm_hyper=gbm_hyper)
    return GbmBranch(vectorizer=vec, selected=mask, models=tuple(models))
