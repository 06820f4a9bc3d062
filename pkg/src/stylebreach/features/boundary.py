"""Statement-boundary scoring.

A statement is one author's contiguous run of sentences (truth borders
delimit them). Words that tend to open or close statements get high
scores; the feature counts local clusters of such words in a document.

The positional score for one occurrence uses a steep half-sigmoid over
the normalized distance x from the statement middle:

    score(x) = (k * x) / ((1 + k) - x)

which is 0 at the middle (x=0) and exactly 1 at the ends (x=1).
"""

import re
from dataclasses import dataclass, field

WORD_RE = re.compile(r"^[A-Za-z][A-Za-z'’-]*$")

DEFAULT_STEEPNESS = 100.0
DEFAULT_SCORE_THRESHOLD = 0.5


def position_score(x, k):
    """Half-sigmoid at normalized middle-distance x in [0, 1].

    The denominator is grouped as k + (1 - x) so the endpoints stay
    exact: small k makes (1 + k) - x cancel badly near x = 1.
    """
    return (k * x) / (k + (1.0 - x))


@dataclass(frozen=True)
class BoundaryScoreTable:
    scores: dict
    steepness: float
    begin_scores: dict = field(default_factory=dict)
    end_scores: dict = field(default_factory=dict)
    stop_words: frozenset = frozenset()


def _rescale_counts(counts):
    if not counts:
        return {}
    lo = min(counts.values())
    hi = max(counts.values())
    if hi == lo:
        return {w: 1.0 for w in counts}
    return {w: (c - lo) / (hi - lo) for w, c in counts.items()}


def build_boundary_score_table(statements, k=DEFAULT_STEEPNESS, stop_words=frozenset()):
    """Score table from stopword-filtered statements (lists of words).

    Per word: the mean positional score over all its occurrences, plus
    min-max-rescaled counts of occurrences at the first and at the last
    statement position (rescaled separately per list).
    """
    totals = {}
    occurrences = {}
    begin_counts = {}
    end_counts = {}
    for statement in statements:
        length = len(statement)
        if length == 0:
            continue
        half = length / 2.0
        for p, word in enumerate(statement):
            x = abs(half - (p + 1)) / half
            s = position_score(x, k)
            totals[word] = totals.get(word, 0.0) + s
            occurrences[word] = occurrences.get(word, 0) + 1
            if p == 0:
                begin_counts[word] = begin_counts.get(word, 0) + 1
            if p == length - 1:
                end_counts[word] = end_counts.get(word, 0) + 1
    scores = {w: totals[w] / occurrences[w] for w in totals}
    return BoundaryScoreTable(
        scores=scores,
        steepness=float(k),
        begin_scores=_rescale_counts(begin_counts),
        end_scores=_rescale_counts(end_counts),
        stop_words=frozenset(stop_words),
    )


def filtered_words(tokens, stop_words):
    return [
        t.lower()
        for t in tokens
        if WORD_RE.match(t) and t.lower() not in stop_words
    ]


def statements_from_borders(doc, borders, stop_words):
    """One stopword-filtered word list per author segment of doc."""
    cuts = [0] + list(borders) + [doc.n_sentences]
    statements = []
    for a, b in zip(cuts[:-1], cuts[1:]):
        t0 = doc.sentences[a][0]
        t1 = doc.sentences[b - 1][1]
        statements.append(filtered_words(doc.tokens[t0:t1], stop_words))
    return statements


def statement_boundary_feature(doc, table, score_threshold=DEFAULT_SCORE_THRESHOLD):
    """Fraction of 3-word windows holding >= 2 high-scoring words.

    Windows slide over the document's stopword-filtered words; the count
    is normalized by the number of filtered words.
    """
    words = filtered_words(doc.tokens, table.stop_words)
    if not words:
        return [0.0]
    scores = table.scores
    flags = [scores.get(w, 0.0) > score_threshold for w in words]
    hits = 0
    for i in range(len(flags) - 2):
        if flags[i] + flags[i + 1] + flags[i + 2] >= 2:
            hits += 1
    return [hits / len(words)]
