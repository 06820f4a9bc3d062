"""Token segmentation: fixed k-way splits, sliding windows, max-diff
aggregation of per-segment feature vectors.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SegmentView:
    """Half-open token range [start, end) of one document segment."""

    doc_id: str
    start: int
    end: int
    index: int
    doc: object = None

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad segment range [{self.start}, {self.end})")

    @property
    def tokens(self):
        return self.doc.tokens[self.start:self.end]

    @property
    def n_tokens(self):
        return self.end - self.start

    @property
    def text(self):
        spans = self.doc.token_spans
        return self.doc.text[spans[self.start][0]:spans[self.end - 1][1]]

    @property
    def sentences(self):
        """Sentence token-ranges of the document overlapping this segment."""
        return [
            (s, e)
            for s, e in self.doc.sentences
            if s < self.end and e > self.start
        ]


def _views(ranges, doc):
    doc_id = doc.doc_id if doc is not None else ""
    return [
        SegmentView(doc_id=doc_id, start=s, end=e, index=i, doc=doc)
        for i, (s, e) in enumerate(ranges)
    ]


def split_fixed(tokens, k=4, doc=None):
    """k contiguous segments covering all tokens; sizes differ by at most
    one, remainder going to the earliest segments.
    """
    n = len(tokens)
    if n < k:
        raise ValueError(f"cannot split {n} tokens into {k} segments")
    base, rem = divmod(n, k)
    ranges = []
    start = 0
    for i in range(k):
        size = base + (1 if i < rem else 0)
        ranges.append((start, start + size))
        start += size
    return _views(ranges, doc)


def sliding_windows(tokens, size, doc=None):
    """Windows of `size` tokens overlapping by one third of the size.

    Stride is size - floor(size/3); a final window ending at the last
    token is appended when the stride pattern leaves a tail uncovered.
    Fewer tokens than `size` yield a single window over everything.
    """
    n = len(tokens)
    if size < 3:
        raise ValueError("window size must be at least 3")
    if n <= size:
        return _views([(0, n)], doc)
    stride = size - size // 3
    ranges = []
    start = 0
    while start + size <= n:
        ranges.append((start, start + size))
        start += stride
    if ranges[-1][1] < n:
        ranges.append((n - size, n))
    return _views(ranges, doc)


def max_pairwise_diff(vectors):
    """Componentwise max absolute difference over all pairs of vectors,
    which equals componentwise max minus componentwise min.
    """
    arr = np.asarray(vectors, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("expected a list of equal-length vectors")
    if arr.shape[0] == 1:
        return np.zeros(arr.shape[1])
    return arr.max(axis=0) - arr.min(axis=0)


def window_size_for(tokens, k=4):
    """Sliding-window size used by the per-segment feature groups: a
    quarter of the document, floored at the minimum window size.
    """
    return max(3, len(tokens) // k)
