"""Feature-group registry and document-level extraction.

Nine groups; per-document vectors with fixed dimensions:

    tautology 5, contractions 29, statement_boundary 1,
    quotation_marks 1, readability 9, frequent_words = lexicon size,
    lexical 34, vocabulary_richness 2, named_entity_spelling 2

Four groups are computed per segment and aggregated by the maximum
pairwise difference: frequent_words over the fixed 4-way split, and
lexical / readability / vocabulary_richness over sliding windows a
quarter of the document long.
"""

from dataclasses import dataclass

import numpy as np

from ..segmenter import max_pairwise_diff, sliding_windows, split_fixed, window_size_for
from . import boundary as boundary_mod
from .boundary import (
    BoundaryScoreTable,
    build_boundary_score_table,
    position_score,
    statement_boundary_feature,
    statements_from_borders,
)
from .groups import (
    LEXICAL_NAMES,
    contraction_features,
    frequent_word_rates,
    lexical_features,
    named_entity_spelling_features,
    quotation_feature,
    tautology_features,
    vocabulary_richness,
    word_frequency_class,
)
from .readability import INDEX_NAMES as READABILITY_NAMES
from .readability import count_syllables, readability_features

GROUPS = (
    "tautology",
    "contractions",
    "statement_boundary",
    "quotation_marks",
    "readability",
    "frequent_words",
    "lexical",
    "vocabulary_richness",
    "named_entity_spelling",
)

DEFAULT_ACTIVE_GROUPS = (
    "tautology",
    "contractions",
    "quotation_marks",
    "readability",
    "frequent_words",
    "lexical",
    "vocabulary_richness",
)


def group_dim(group, lexicon):
    fixed = {
        "tautology": 5,
        "statement_boundary": 1,
        "quotation_marks": 1,
        "readability": len(READABILITY_NAMES),
        "lexical": len(LEXICAL_NAMES),
        "vocabulary_richness": 2,
        "named_entity_spelling": 2,
    }
    if group in fixed:
        return fixed[group]
    if group == "contractions":
        return len(lexicon.contraction_pairs)
    if group == "frequent_words":
        return len(lexicon.frequent_words)
    raise KeyError(f"unknown feature group {group!r}")


@dataclass(frozen=True)
class FeatureGroupVector:
    group: str
    values: np.ndarray


def _sliding_segment_views(doc):
    size = window_size_for(doc.tokens)
    return sliding_windows(doc.tokens, size, doc=doc)


def extract_group(doc, group, lexicon, boundary_table=None):
    """Per-document vector for one feature group."""
    if group == "tautology":
        values = tautology_features(doc.tokens)
    elif group == "contractions":
        values = contraction_features(doc.tokens, lexicon)
    elif group == "statement_boundary":
        if boundary_table is None:
            raise ValueError("statement_boundary needs a boundary score table")
        values = statement_boundary_feature(doc, boundary_table)
    elif group == "quotation_marks":
        values = quotation_feature(doc.tokens, doc.text, lexicon)
    elif group == "readability":
        views = _sliding_segment_views(doc)
        values = max_pairwise_diff([readability_features(v, lexicon) for v in views])
    elif group == "frequent_words":
        views = split_fixed(doc.tokens, 4, doc=doc)
        values = max_pairwise_diff([frequent_word_rates(v.tokens, lexicon) for v in views])
    elif group == "lexical":
        views = _sliding_segment_views(doc)
        values = max_pairwise_diff([lexical_features(v, lexicon) for v in views])
    elif group == "vocabulary_richness":
        views = _sliding_segment_views(doc)
        values = max_pairwise_diff([vocabulary_richness(v.tokens, lexicon) for v in views])
    elif group == "named_entity_spelling":
        values = named_entity_spelling_features(doc)
    else:
        raise ValueError(f"unknown feature group {group!r}")

    arr = np.asarray(values, dtype=np.float64)
    expected = group_dim(group, lexicon)
    if arr.shape != (expected,):
        raise AssertionError(
            f"{group}: got shape {arr.shape}, registry says ({expected},)"
        )
    if not np.all(np.isfinite(arr)):
        raise AssertionError(f"{group}: non-finite feature values")
    return FeatureGroupVector(group=group, values=arr)


def extract_groups(doc, groups, lexicon, boundary_table=None):
    """Ordered {group: vector} for the requested groups."""
    return {
        g: extract_group(doc, g, lexicon, boundary_table).values for g in groups
    }


def extract_matrix(docs, group, lexicon, boundary_table=None):
    """(n_docs, dim) matrix of one group over a document list."""
    return np.vstack(
        [extract_group(d, group, lexicon, boundary_table).values for d in docs]
    )


__all__ = [
    "GROUPS",
    "DEFAULT_ACTIVE_GROUPS",
    "FeatureGroupVector",
    "BoundaryScoreTable",
    "READABILITY_NAMES",
    "LEXICAL_NAMES",
    "group_dim",
    "extract_group",
    "extract_groups",
    "extract_matrix",
    "tautology_features",
    "contraction_features",
    "frequent_word_rates",
    "lexical_features",
    "quotation_feature",
    "word_frequency_class",
    "vocabulary_richness",
    "named_entity_spelling_features",
    "readability_features",
    "count_syllables",
    "position_score",
    "build_boundary_score_table",
    "statement_boundary_feature",
    "statements_from_borders",
    "boundary_mod",
]
