"""Feature-group extractors other than readability and boundary scores."""

import math
import re

from .. import postag
from .._kernels import damerau_levenshtein
from ..preprocess import clean_token

WORD_RE = re.compile(r"^[A-Za-z][A-Za-z'’-]*$")
CAP_WORD_RE = re.compile(r"^[A-Z][A-Za-z'’-]*$")

SINGLE_QUOTE_CHARS = "'‘’"
DOUBLE_QUOTE_CHARS = '"“”'

SHORT_SENTENCE_TOKENS = 6
LONG_SENTENCE_TOKENS = 25


def _normalize_apostrophes(token):
    return token.replace("’", "'")


def tautology_features(tokens):
    """Mean occurrences per distinct n-gram, n = 1..5; 0 where the
    document is too short to have any n-gram of that order.
    """
    if not tokens:
        raise ValueError("tautology features need at least one token")
    values = []
    for n in range(1, 6):
        total = len(tokens) - n + 1
        if total <= 0:
            values.append(0.0)
            continue
        distinct = len({tuple(tokens[i:i + n]) for i in range(total)})
        values.append(total / distinct)
    return values


def contraction_features(tokens, lexicon):
    """Per contraction pair: min(c, e) / max(1, c + e) where c and e
    count the contracted and expanded forms. High values mean the
    document mixes both forms.
    """
    lowered = [_normalize_apostrophes(t).lower() for t in tokens]
    counts = {}
    for i, tok in enumerate(lowered):
        counts[(tok,)] = counts.get((tok,), 0) + 1
        if i + 1 < len(lowered):
            bigram = (tok, lowered[i + 1])
            counts[bigram] = counts.get(bigram, 0) + 1
    values = []
    for contracted, expanded in lexicon.contraction_pairs:
        c = counts.get((_normalize_apostrophes(contracted).lower(),), 0)
        e = counts.get(tuple(expanded.lower().split()), 0)
        values.append(min(c, e) / max(1, c + e))
    return values


def frequent_word_rates(tokens, lexicon):
    """Occurrence rate of each frequent word in one token segment."""
    n = max(1, len(tokens))
    counts = {}
    for t in tokens:
        w = t.lower()
        counts[w] = counts.get(w, 0) + 1
    return [counts.get(w, 0) / n for w in lexicon.frequent_words]


def quotation_feature(tokens, text, lexicon):
    """Population variance of {double-quote count, single-quote count},
    apostrophes inside known contraction tokens excluded: ((d - s)/2)^2.
    """
    d = sum(text.count(ch) for ch in DOUBLE_QUOTE_CHARS)
    s = sum(text.count(ch) for ch in SINGLE_QUOTE_CHARS)
    contraction_tokens = lexicon.contraction_tokens
    for t in tokens:
        norm = _normalize_apostrophes(t)
        if norm.lower() in contraction_tokens:
            s -= sum(t.count(ch) for ch in SINGLE_QUOTE_CHARS)
    s = max(0, s)
    return [((d - s) / 2.0) ** 2]


def word_frequency_class(word, lexicon):
    """log2(reference frequency / word frequency); None when the word is
    not in the frequency table. The reference is the table's maximum.
    """
    f = lexicon.frequency_table.get(word.lower())
    if f is None:
        return None
    return math.log2(lexicon.max_frequency / f)


def vocabulary_richness(tokens, lexicon):
    """[mean frequency class over known words, unknown-word ratio]."""
    classes = []
    unknown = 0
    n_words = 0
    for t in tokens:
        if not WORD_RE.match(t):
            continue
        n_words += 1
        c = word_frequency_class(t.lower(), lexicon)
        if c is None:
            unknown += 1
        else:
            classes.append(c)
    if n_words == 0:
        return [0.0, 0.0]
    mean_class = sum(classes) / len(classes) if classes else 0.0
    return [mean_class, unknown / n_words]


LEXICAL_NAMES = (
    "space_ratio", "digit_ratio", "comma_ratio", "colon_ratio",
    "semicolon_ratio", "apostrophe_ratio", "single_quote_ratio",
    "double_quote_ratio", "open_paren_ratio", "close_paren_ratio",
    "paragraphs_per_sentence", "punctuation_ratio",
    "pronoun_ratio", "preposition_ratio", "coord_conjunction_ratio",
    "adjective_ratio", "adverb_ratio", "determiner_ratio",
    "interjection_ratio", "modal_ratio", "noun_ratio",
    "personal_pronoun_ratio", "verb_ratio",
    "short_word_ratio", "long_word_ratio", "avg_word_length",
    "all_caps_ratio", "capitalized_ratio",
    "question_sentence_ratio", "period_sentence_ratio",
    "exclamation_sentence_ratio", "short_sentence_ratio",
    "long_sentence_ratio", "avg_sentence_length",
)


def _clean_with_sentence_starts(segment, lexicon):
    """Phase-two cleaned tokens of a segment plus the output indices that
    open a sentence.
    """
    starts_in = {s for s, _ in segment.sentences if s >= segment.start}
    common = lexicon.common_words
    cleaned = []
    start_idx = set()
    for i in range(segment.start, segment.end):
        out = clean_token(segment.doc.tokens[i], common)
        if i in starts_in:
            start_idx.add(len(cleaned))
        cleaned.extend(out)
    return cleaned, start_idx


def lexical_features(segment, lexicon):
    """The 34 lexical ratios of one segment.

    This group alone consumes phase-two cleaned tokens. Character ratios
    are computed over the cleaned tokens joined by single spaces;
    paragraph breaks are counted in the raw segment text.
    """
    cleaned, sentence_starts = _clean_with_sentence_starts(segment, lexicon)
    joined = " ".join(cleaned)
    n_chars = max(1, len(joined))

    def char_ratio(chars):
        return sum(joined.count(c) for c in chars) / n_chars

    raw_text = segment.text
    paragraphs = len(re.findall(r"\n[ \t]*\n", raw_text)) + 1

    sentences = segment.sentences
    n_sentences = max(1, len(sentences))
    punctuation = sum(1 for ch in joined if not ch.isalnum() and not ch.isspace())

    values = [
        joined.count(" ") / n_chars,
        sum(ch.isdigit() for ch in joined) / n_chars,
        char_ratio(","),
        char_ratio(":"),
        char_ratio(";"),
        char_ratio("'’"),
        char_ratio(SINGLE_QUOTE_CHARS),
        char_ratio(DOUBLE_QUOTE_CHARS),
        char_ratio("(["),
        char_ratio(")]"),
        paragraphs / n_sentences,
        punctuation / n_chars,
    ]

    tags = postag.tag_tokens(cleaned, sentence_starts)
    words = [t for t in cleaned if WORD_RE.match(t)]
    n_words = max(1, len(words))

    def tag_ratio(*wanted):
        return sum(1 for t in tags if t in wanted) / n_words

    values += [
        tag_ratio("pron", "pron_personal"),
        tag_ratio("prep"),
        tag_ratio("conj"),
        tag_ratio("adj"),
        tag_ratio("adv"),
        tag_ratio("det"),
        tag_ratio("intj"),
        tag_ratio("modal"),
        tag_ratio("noun"),
        tag_ratio("pron_personal"),
        tag_ratio("verb"),
        sum(1 for w in words if 2 <= len(w) <= 3) / n_words,
        sum(1 for w in words if len(w) > 6) / n_words,
        sum(len(w) for w in words) / n_words,
        sum(1 for w in words if len(w) > 1 and w.isupper()) / n_words,
        sum(1 for w in words if CAP_WORD_RE.match(w)) / n_words,
    ]

    doc = segment.doc
    q = p = e = short = long_ = 0
    total_len = 0
    for s, t in sentences:
        toks = doc.tokens[s:t]
        total_len += len(toks)
        tail = toks[-1] if toks else ""
        if "?" in tail:
            q += 1
        elif "!" in tail:
            e += 1
        elif "." in tail:
            p += 1
        if len(toks) < SHORT_SENTENCE_TOKENS:
            short += 1
        if len(toks) > LONG_SENTENCE_TOKENS:
            long_ += 1
    values += [
        q / n_sentences,
        p / n_sentences,
        e / n_sentences,
        short / n_sentences,
        long_ / n_sentences,
        total_len / n_sentences,
    ]
    return values


def _entity_runs(doc):
    """Candidate named entities: runs of capitalized word tokens that do
    not start a sentence, joined by spaces, with occurrence counts.
    """
    sentence_starts = {s for s, _ in doc.sentences}
    counts = {}
    run = []
    for i, tok in enumerate(doc.tokens):
        capitalized = bool(CAP_WORD_RE.match(tok)) and i not in sentence_starts
        if capitalized:
            run.append(tok)
            continue
        if run:
            name = " ".join(run)
            counts[name] = counts.get(name, 0) + 1
            run = []
    if run:
        name = " ".join(run)
        counts[name] = counts.get(name, 0) + 1
    return counts


def named_entity_spelling_features(doc):
    """[variant groups with >= 2 spellings, summed minimum spelling counts]
    grouping candidate entities within edit distance 1 (transpositions
    counted as single edits).
    """
    counts = _entity_runs(doc)
    names = sorted(counts)
    parent = list(range(len(names)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if abs(len(names[i]) - len(names[j])) > 1:
                continue
            if damerau_levenshtein(names[i], names[j]) <= 1:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups = {}
    for i, name in enumerate(names):
        groups.setdefault(find(i), []).append(name)

    multi = [g for g in groups.values() if len(g) >= 2]
    inconsistency = sum(min(counts[n] for n in g) for g in multi)
    return [float(len(multi)), float(inconsistency)]
