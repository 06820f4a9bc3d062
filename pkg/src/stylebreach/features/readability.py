"""Nine readability indices over a token segment.

Counts come from word-shaped tokens only; sentences are the document
sentences overlapping the segment. Indices are left unclamped, so short
degenerate inputs can go negative. A segment with no word tokens scores
zero everywhere.
"""

import math
import re

WORD_RE = re.compile(r"^[A-Za-z][A-Za-z'’-]*$")
VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")

INDEX_NAMES = (
    "flesch_reading_ease",
    "smog_grade",
    "flesch_kincaid_grade",
    "coleman_liau_index",
    "automated_readability_index",
    "dale_chall_score",
    "difficult_words",
    "linsear_write_formula",
    "gunning_fog",
)


def count_syllables(word):
    """Vowel-group heuristic with a silent-e correction; minimum 1."""
    w = word.lower().strip("'’-")
    groups = VOWEL_GROUP_RE.findall(w)
    n = len(groups)
    if n > 1 and w.endswith("e") and not w.endswith("le"):
        n -= 1
    return max(1, n)


def _word_tokens(tokens):
    return [t for t in tokens if WORD_RE.match(t)]


def _sentence_word_counts(segment):
    """Word count of each document sentence overlapping the segment."""
    doc = segment.doc
    return [
        len(_word_tokens(doc.tokens[s:e]))
        for s, e in segment.sentences
    ]


def readability_features(segment, lexicon):
    words = _word_tokens(segment.tokens)
    n_words = len(words)
    if n_words == 0:
        return [0.0] * len(INDEX_NAMES)
    n_sentences = max(1, len(segment.sentences))

    syllables = [count_syllables(w) for w in words]
    total_syl = sum(syllables)
    chars = sum(len(w) for w in words)
    poly = sum(1 for s in syllables if s >= 3)

    wps = n_words / n_sentences
    spw = total_syl / n_words

    flesch = 206.835 - 1.015 * wps - 84.6 * spw
    smog = 1.0430 * math.sqrt(poly * 30 / n_sentences) + 3.1291
    fk_grade = 0.39 * wps + 11.8 * spw - 15.59
    cli = 0.0588 * (chars / n_words * 100) - 0.296 * (n_sentences / n_words * 100) - 15.8
    ari = 4.71 * (chars / n_words) + 0.5 * wps - 21.43

    easy_set = lexicon.easy_words
    not_easy = sum(1 for w in words if w.lower() not in easy_set)
    pdw = not_easy / n_words * 100
    dale_chall = 0.1579 * pdw + 0.0496 * wps
    if pdw > 5:
        dale_chall += 3.6365

    difficult = float(sum(
        1 for w, s in zip(words, syllables) if s >= 2 and w.lower() not in easy_set
    ))

    linsear = _linsear(segment, n_words)
    fog = 0.4 * (wps + 100 * poly / n_words)

    return [flesch, smog, fk_grade, cli, ari, dale_chall, difficult, linsear, fog]


def _linsear(segment, n_words):
    """Linsear write formula on the first 100 words of the segment."""
    sample = min(100, n_words)
    per_sentence = _sentence_word_counts(segment)
    words = _word_tokens(segment.tokens)[:sample]

    taken = 0
    sentences_used = 0
    for count in per_sentence:
        if taken >= sample:
            break
        sentences_used += 1
        taken += count
    sentences_used = max(1, sentences_used)

    score = 0.0
    for w in words:
        score += 3.0 if count_syllables(w) >= 3 else 1.0
    r = score / sentences_used
    if r > 20:
        return r / 2
    return (r - 2) / 2
