"""Text normalization, tokenization, sentence splitting, lexicon loading.

Normalization runs in two phases. Phase one rewrites raw text before
tokenization: URLs become <URL> and very long digit runs become <NUM>.
Phase two rewrites individual tokens (paths, shouting repeats, long
hyphen chains, overlong words) and is applied only where a consumer asks
for the cleaned token stream; most feature groups read the phase-one
tokens unchanged.
"""

import os
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

URL_RE = re.compile(r"(?:https?|ftp)://\S+|www\.\S+")
LONG_NUMBER_RE = re.compile(r"\d{7,}")

TOKEN_RE = re.compile(
    r"<[A-Z]+>"
    r"|(?:https?|ftp)://\S+|www\.\S+"
    r"|[\w.~+-]*[/\\][\w.~+-]*[/\\][\w.~+%/\\-]*"
    r"|[A-Za-z0-9_]+(?:['’-][A-Za-z0-9_]+)*"
    r"|\S"
)

REPEAT_RE = re.compile(r"(.)\1{4}")
MAX_WORD_LEN = 24

SENTENCE_END_RE = re.compile(r"[.!?]+[\"'”’)\]]*\s+")
ABBREVIATIONS = frozenset(
    """mr mrs ms dr prof rev gen sen rep st jr sr etc vs eg ie cf al
    fig no vol inc ltd co corp dept univ est min max approx""".split()
)


def normalize_text(text):
    """Phase-one normalization of raw text."""
    return LONG_NUMBER_RE.sub("<NUM>", URL_RE.sub("<URL>", text))


def tokenize(text):
    """Tokenize normalized text.

    Returns (tokens, spans) where spans are (start, end) character offsets
    into the text. Contractions and hyphenated words stay single tokens;
    every non-space character lands in exactly one token.
    """
    tokens = []
    spans = []
    for m in TOKEN_RE.finditer(text):
        tokens.append(m.group())
        spans.append((m.start(), m.end()))
    return tokens, spans


def clean_token(token, common_words):
    """Phase-two rewrite of one token; returns a list of output tokens."""
    if token.count("/") + token.count("\\") >= 2:
        return ["<PATH>"]
    if REPEAT_RE.search(token):
        return ["<LONG>"]
    parts = token.split("-")
    if len(parts) >= 3 and all(parts):
        known = sum(1 for p in parts if p.lower() in common_words)
        if 2 * known > len(parts):
            return parts
        return ["<LONG>"]
    if len(token) > MAX_WORD_LEN:
        return ["<LONG>"]
    return [token]


def clean_tokens(tokens, lexicon):
    """Phase-two token stream: clean_token applied across a token list."""
    common = lexicon.common_words
    out = []
    for tok in tokens:
        out.extend(clean_token(tok, common))
    return out


def _is_sentence_opener(ch):
    return ch.isupper() or ch in "\"'“‘"


def _word_before(text, pos):
    m = re.search(r"[A-Za-z]+(?:['’][A-Za-z]+)*$", text[:pos])
    return m.group() if m else ""


def sentence_char_offsets(text):
    """Character offsets where a new sentence starts (0 excluded)."""
    offsets = []
    for m in SENTENCE_END_RE.finditer(text):
        if m.end() >= len(text):
            continue
        if not _is_sentence_opener(text[m.end()]):
            continue
        word = _word_before(text, m.start())
        if word.lower() in ABBREVIATIONS or len(word) == 1:
            continue
        offsets.append(m.end())
    return offsets


def split_sentences(text, token_spans):
    """Sentences as half-open token ranges [(start, end), ...].

    A sentence boundary at character c starts a new sentence at the first
    token whose span begins at or after c. Boundaries that do not move the
    token cursor are dropped; the tail always closes the last sentence.
    """
    n = len(token_spans)
    if n == 0:
        return []
    ranges = []
    start = 0
    cursor = 0
    for off in sentence_char_offsets(text):
        while cursor < n and token_spans[cursor][0] < off:
            cursor += 1
        if cursor > start:
            ranges.append((start, cursor))
            start = cursor
    if start < n:
        ranges.append((start, n))
    return ranges


@dataclass(frozen=True)
class Lexicon:
    """Bundled word lists used across feature extraction."""

    common_ranked: tuple
    common_words: frozenset
    frequency_table: dict
    max_frequency: int
    max_frequency_word: str
    stop_words: frozenset
    function_words: frozenset
    frequent_words: tuple
    easy_words: frozenset
    contraction_pairs: tuple

    @property
    def contraction_tokens(self):
        return frozenset(c.lower() for c, _ in self.contraction_pairs)


def _read_lines(path):
    return [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln]


def default_lexicon_dir():
    env = os.environ.get("STYLEBREACH_LEXICONS")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "lexicons"


@lru_cache(maxsize=4)
def _load_lexicon_cached(resolved):
    d = Path(resolved)
    ranked = tuple(_read_lines(d / "common_words.txt"))
    freqs = {}
    for ln in _read_lines(d / "word_frequencies.tsv"):
        word, count = ln.split("\t")
        freqs[word] = int(count)
    stop = frozenset(_read_lines(d / "stop_words.txt"))
    func = frozenset(_read_lines(d / "function_words.txt"))
    easy = frozenset(_read_lines(d / "easy_words.txt"))
    pairs = tuple(
        tuple(ln.split("\t")) for ln in _read_lines(d / "contractions.tsv")
    )
    top = max(freqs, key=lambda w: freqs[w])
    return Lexicon(
        common_ranked=ranked,
        common_words=frozenset(ranked),
        frequency_table=freqs,
        max_frequency=freqs[top],
        max_frequency_word=top,
        stop_words=stop,
        function_words=func,
        frequent_words=tuple(sorted(stop | func)),
        easy_words=easy,
        contraction_pairs=pairs,
    )


def load_lexicon(directory=None):
    """Load the lexicon bundle from a directory.

    Defaults to the STYLEBREACH_LEXICONS environment variable when set,
    else the lists shipped with the package. Loads are cached.
    """
    d = Path(directory) if directory is not None else default_lexicon_dir()
    return _load_lexicon_cached(str(d.resolve()))
