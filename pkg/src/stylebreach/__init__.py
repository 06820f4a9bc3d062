"""Style change detection and style breach localization.

Detects whether a document was written by more than one author and, if
so, where the style switches. Feature extraction, the classifiers, the
stacked ensemble, and the segmentation metrics are all built in; the
only runtime dependency is numpy.
"""

from .corpus import (
    Document,
    build_sentence_pools,
    load_breach_corpus,
    load_change_corpus,
    load_documents,
    load_training_corpus,
    synthesize_document,
    write_corpus,
)
from .features import DEFAULT_ACTIVE_GROUPS, GROUPS, extract_group, extract_groups
from .locator import LocatorConfig, locate_breaches, locate_corpus
from .metrics import (
    EvalReport,
    EvalRow,
    Segmentation,
    baseline_eq,
    baseline_rnd,
    baseline_rows,
    evaluate_segmentations,
    win_pr,
    window_diff,
)
from .preprocess import Lexicon, load_lexicon, normalize_text, tokenize
from .stacking import (
    StackConfig,
    StackModel,
    load_model,
    meta_features,
    predict_change,
    save_model,
    train_stack,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ACTIVE_GROUPS",
    "Document",
    "EvalReport",
    "EvalRow",
    "GROUPS",
    "Lexicon",
    "LocatorConfig",
    "Segmentation",
    "StackConfig",
    "StackModel",
    "__version__",
    "baseline_eq",
    "baseline_rnd",
    "baseline_rows",
    "build_sentence_pools",
    "evaluate_segmentations",
    "extract_group",
    "extract_groups",
    "load_breach_corpus",
    "load_change_corpus",
    "load_documents",
    "load_lexicon",
    "load_model",
    "load_training_corpus",
    "locate_breaches",
    "locate_corpus",
    "meta_features",
    "normalize_text",
    "predict_change",
    "save_model",
    "synthesize_document",
    "tokenize",
    "train_stack",
    "win_pr",
    "window_diff",
    "write_corpus",
]
