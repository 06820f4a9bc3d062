"""Style-breach localization by recursive bisection.

A fragment whose change probability clears the threshold is split at its
middle sentence and both halves are examined; when neither half yields a
border on its own, the split point itself is reported. Fragments shorter
than min_sentences are not split further: they contribute their middle
sentence index if they still look changed (or unconditionally, under
exhaustive mode, when reached through a split).
"""

from dataclasses import dataclass

from .stacking import predict_change

DEFAULT_THRESHOLD = 0.75
DEFAULT_MIN_SENTENCES = 20


@dataclass(frozen=True)
class LocatorConfig:
    threshold: float = DEFAULT_THRESHOLD
    min_sentences: int = DEFAULT_MIN_SENTENCES
    paper_exact: bool = False

    def __post_init__(self):
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError("threshold must lie in [0, 1]")
        if self.min_sentences < 2:
            raise ValueError("min_sentences must be at least 2")


def _fragment_probability(model, doc, start, end):
    fragment = doc.slice_sentences(start, end)
    return float(predict_change(model, [fragment])[0])


def _locate(model, doc, start, end, config, via_split):
    n = end - start
    mid = start + n // 2
    if n < config.min_sentences:
        if config.paper_exact and via_split:
            return [mid]
        p = _fragment_probability(model, doc, start, end)
        return [mid] if p >= config.threshold else []
    p = _fragment_probability(model, doc, start, end)
    if p < config.threshold:
        return []
    left = _locate(model, doc, start, mid, config, True)
    right = _locate(model, doc, mid, end, config, True)
    if not left and not right:
        return [mid]
    return left + right


def locate_breaches(model, doc, config=None):
    """Sorted sentence-border indices of suspected authorship breaches.

    A border b means the breach sits between sentences b-1 and b, so
    valid values are 1 .. n_sentences-1.
    """
    config = config or LocatorConfig()
    n = doc.n_sentences
    if n < 2:
        return []
    raw = _locate(model, doc, 0, n, config, False)
    return sorted({b for b in raw if 0 < b < n})


def locate_corpus(model, docs, config=None):
    return [locate_breaches(model, doc, config) for doc in docs]
