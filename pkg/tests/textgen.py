"""Deterministic two-author text generation for the test suite.

The two profiles disagree on every stylistic axis the features measure:
contracted vs expanded auxiliaries, double vs single quotes, short vs
long sentences, high-frequency vs invented vocabulary, and consistent
vs wobbling name spellings. Generated sentences are deliberately plain
(word word ... word.) so the sentence splitter handles them exactly.
"""

from dataclasses import dataclass

import numpy as np

from stylebreach.preprocess import ABBREVIATIONS

COMMON = (
    "the day was long and we kept to the road "
    "a small boat lay on the sand near the old wall "
    "he said it would rain before dark and it did "
    "she took the letter from the table and read it twice "
    "they walked home past the mill and said nothing at all "
    "we found the gate open and the lamp still burning "
    "it was cold in the yard but warm by the fire "
    "the men came back at noon with bread and salt fish "
    "i heard the bell from the far side of the water "
    "you could see the light move along the low hills"
).split()

RARE = (
    "velution cormint brashek polder quenholm sarvel trondic mulverane "
    "ostrevan kelliburn varnotte drevish solcumber penathor grivelden "
    "marventide ulcroft benissary tolvenham crisparden woldenmere "
    "farrowick dunsparrow hollowvale embermarch quillstone"
).split()

CONTRACTIONS = (
    ("don't", "do not"), ("it's", "it is"), ("I'll", "I will"),
    ("wasn't", "was not"), ("we're", "we are"), ("can't", "cannot"),
    ("didn't", "did not"), ("he's", "he is"), ("I'm", "I am"),
    ("wouldn't", "would not"),
)

NAME_VARIANTS = (("Katherine", "Katherin"), ("Willoughby", "Willouhby"))


@dataclass(frozen=True)
class AuthorProfile:
    name: str
    words: tuple
    contracted: bool
    quote: str
    min_words: int
    max_words: int
    rare_share: float
    misspell_names: bool


AUTHOR_A = AuthorProfile(
    name="a", words=tuple(COMMON), contracted=True, quote='"',
    min_words=5, max_words=9, rare_share=0.0, misspell_names=False,
)

AUTHOR_B = AuthorProfile(
    name="b", words=tuple(COMMON), contracted=False, quote="'",
    min_words=16, max_words=26, rare_share=0.35, misspell_names=True,
)


def sentence(profile, rng):
    n = int(rng.integers(profile.min_words, profile.max_words + 1))
    words = []
    for _ in range(n):
        if profile.rare_share and rng.random() < profile.rare_share:
            words.append(RARE[int(rng.integers(0, len(RARE)))])
        else:
            words.append(profile.words[int(rng.integers(0, len(profile.words)))])

    pair = CONTRACTIONS[int(rng.integers(0, len(CONTRACTIONS)))]
    form = pair[0] if profile.contracted else pair[1]
    words.insert(int(rng.integers(0, len(words) + 1)), form)

    if rng.random() < 0.5:
        i = int(rng.integers(1, len(words)))
        words[i] = f"{profile.quote}{words[i]}{profile.quote}"

    if rng.random() < 0.4:
        variants = NAME_VARIANTS[int(rng.integers(0, len(NAME_VARIANTS)))]
        name = variants[int(rng.integers(0, 2))] if profile.misspell_names else variants[0]
        words.insert(max(1, int(rng.integers(1, len(words)))), name)

    if len(words) >= 4 and rng.random() < 0.3:
        i = int(rng.integers(1, len(words) - 1))
        words[i] = words[i] + ","

    # a 1-letter or abbreviation-like final word would swallow the
    # sentence boundary that follows it
    last = words[-1].strip("\"'")
    if len(last) < 2 or last.lower() in ABBREVIATIONS:
        words.append("again")

    text = " ".join(words)
    return text[0].upper() + text[1:] + "."


def author_text(profile, n_sentences, rng):
    return " ".join(sentence(profile, rng) for _ in range(n_sentences))


def change_documents(n_docs, seed, sentences_per_doc=16):
    """Half single-author, half mid-document switches.

    Returns (texts, labels, borders): borders in sentence-boundary
    indices, empty for unchanged documents.
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed, 90]))
    texts, labels, borders = [], [], []
    for i in range(n_docs):
        changed = i % 2 == 1
        if not changed:
            profile = AUTHOR_A if i % 4 == 0 else AUTHOR_B
            texts.append(author_text(profile, sentences_per_doc, rng))
            labels.append(0)
            borders.append([])
        else:
            first, second = (AUTHOR_A, AUTHOR_B) if i % 4 == 1 else (AUTHOR_B, AUTHOR_A)
            cut = int(rng.integers(sentences_per_doc // 4,
                                   sentences_per_doc - sentences_per_doc // 4 + 1))
            left = author_text(first, cut, rng)
            right = author_text(second, sentences_per_doc - cut, rng)
            texts.append(left + " " + right)
            labels.append(1)
            borders.append([cut])
    return texts, labels, borders
