"""Corpus loading, document model, and synthetic document construction.

Directory layout: problem-<id>.txt holds UTF-8 text, problem-<id>.truth
holds one JSON object with keys "changes" (bool) and/or "borders" (array).
Borders are sentence-boundary indices b with 0 < b < sentence count: b
sentences precede the breach. Truth files written with character offsets
point at the end of the sentence just before the breach.
"""

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .preprocess import normalize_text, sentence_char_offsets, split_sentences, tokenize


@dataclass(frozen=True)
class Document:
    doc_id: str
    text: str
    tokens: list
    token_spans: list
    sentences: list = field(default_factory=list)

    @classmethod
    def from_text(cls, text, doc_id="doc"):
        norm = normalize_text(text)
        tokens, spans = tokenize(norm)
        sents = split_sentences(norm, spans)
        return cls(doc_id, norm, tokens, spans, sents)

    @property
    def n_sentences(self):
        return len(self.sentences)

    def sentence_tokens(self, i):
        start, end = self.sentences[i]
        return self.tokens[start:end]

    def sentence_end_char(self, i):
        end = self.sentences[i][1]
        return self.token_spans[end - 1][1]

    def slice_sentences(self, start, end, doc_id=None):
        """Sub-document over sentences [start, end), offsets rebased."""
        if not (0 <= start < end <= len(self.sentences)):
            raise ValueError(f"bad sentence range [{start}, {end}) for {self.doc_id}")
        t0 = self.sentences[start][0]
        t1 = self.sentences[end - 1][1]
        c0 = self.token_spans[t0][0]
        c1 = self.token_spans[t1 - 1][1]
        return Document(
            doc_id or f"{self.doc_id}[{start}:{end}]",
            self.text[c0:c1],
            self.tokens[t0:t1],
            [(s - c0, e - c0) for s, e in self.token_spans[t0:t1]],
            [(s - t0, e - t0) for s, e in self.sentences[start:end]],
        )


def _problem_files(directory):
    d = Path(directory)
    files = [p for p in d.glob("problem-*.txt")]

    def sort_key(p):
        tail = p.stem.split("-", 1)[1]
        return (0, int(tail)) if tail.isdigit() else (1, tail)

    return sorted(files, key=sort_key)


def _read_truth(txt_path):
    truth_path = txt_path.with_suffix(".truth")
    if not truth_path.exists():
        raise FileNotFoundError(f"missing truth file for {txt_path.stem}")
    try:
        return json.loads(truth_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed truth file {truth_path}: {exc}") from exc


def load_documents(directory):
    """Documents only (no truths); problem-*.txt sorted by id."""
    return [
        Document.from_text(p.read_text(encoding="utf-8"), doc_id=p.stem)
        for p in _problem_files(directory)
    ]


def load_change_corpus(directory):
    """[(Document, changed: bool)] from problem files + truths."""
    out = []
    for p in _problem_files(directory):
        truth = _read_truth(p)
        if "changes" not in truth:
            raise ValueError(f"truth for {p.stem} lacks the key 'changes'")
        doc = Document.from_text(p.read_text(encoding="utf-8"), doc_id=p.stem)
        out.append((doc, bool(truth["changes"])))
    return out


def _snap_char_border(doc, offset):
    """Sentence-boundary index whose sentence-end offset is nearest."""
    ends = [doc.sentence_end_char(i) for i in range(doc.n_sentences - 1)]
    if not ends:
        raise ValueError(f"{doc.doc_id}: no interior sentence boundary to snap to")
    diffs = [abs(e - offset) for e in ends]
    i = diffs.index(min(diffs))
    s_start, s_end = doc.sentences[i]
    sent_len = doc.token_spans[s_end - 1][1] - doc.token_spans[s_start][0]
    if diffs[i] > sent_len:
        warnings.warn(
            f"{doc.doc_id}: border offset {offset} is {diffs[i]} chars from the "
            f"nearest sentence end; snapping to boundary {i + 1}"
        )
    return i + 1


def _parse_borders(doc, values, border_format):
    borders = []
    for raw in values:
        if not isinstance(raw, int) or isinstance(raw, bool):
            raise ValueError(f"truth for {doc.doc_id}: non-integer border {raw!r}")
        if border_format == "char":
            borders.append(_snap_char_border(doc, raw))
        else:
            if not 0 < raw < doc.n_sentences:
                raise ValueError(
                    f"truth for {doc.doc_id}: border {raw} outside (0, {doc.n_sentences})"
                )
            borders.append(raw)
    return sorted(set(borders))


def load_breach_corpus(directory, border_format="char"):
    """[(Document, borders)] with borders as sentence-boundary indices.

    border_format "char": truth values are character offsets, snapped to
    the nearest sentence end (warning beyond one sentence of slack).
    border_format "sentence": truth values are already boundary indices.
    """
    if border_format not in ("char", "sentence"):
        raise ValueError(f"unknown border format {border_format!r}")
    out = []
    for p in _problem_files(directory):
        truth = _read_truth(p)
        if "borders" not in truth:
            raise ValueError(f"truth for {p.stem} lacks the key 'borders'")
        doc = Document.from_text(p.read_text(encoding="utf-8"), doc_id=p.stem)
        out.append((doc, _parse_borders(doc, truth["borders"], border_format)))
    return out


def load_training_corpus(directory, border_format="char"):
    """(docs, labels, borders) from truths carrying "changes", "borders",
    or both.

    The label falls back to bool(borders) when "changes" is absent; the
    borders entry is None for documents whose truth has no "borders" key.
    """
    if border_format not in ("char", "sentence"):
        raise ValueError(f"unknown border format {border_format!r}")
    docs, labels, borders = [], [], []
    for p in _problem_files(directory):
        truth = _read_truth(p)
        if "changes" not in truth and "borders" not in truth:
            raise ValueError(
                f"truth for {p.stem} lacks both 'changes' and 'borders'"
            )
        doc = Document.from_text(p.read_text(encoding="utf-8"), doc_id=p.stem)
        doc_borders = None
        if "borders" in truth:
            doc_borders = _parse_borders(doc, truth["borders"], border_format)
        changed = truth["changes"] if "changes" in truth else bool(doc_borders)
        docs.append(doc)
        labels.append(int(bool(changed)))
        borders.append(doc_borders)
    return docs, labels, borders


def write_corpus(entries, directory, border_format="char"):
    """Write (Document, truth-dict) pairs in the problem-file layout.

    truth dicts may carry "changes" (bool) and "borders" (sentence
    indices, converted to character offsets unless border_format is
    "sentence"). Files are written atomically (tmp file + rename).
    """
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for doc, truth in entries:
        payload = {}
        if "changes" in truth:
            payload["changes"] = bool(truth["changes"])
        if "borders" in truth:
            if border_format == "char":
                payload["borders"] = [doc.sentence_end_char(b - 1) for b in truth["borders"]]
            else:
                payload["borders"] = list(truth["borders"])
        for name, data in (
            (f"{doc.doc_id}.txt", doc.text),
            (f"{doc.doc_id}.truth", json.dumps(payload, sort_keys=True) + "\n"),
        ):
            tmp = d / (name + ".tmp")
            tmp.write_text(data, encoding="utf-8")
            tmp.replace(d / name)


def _clean_sentence_pool(text):
    """Sentences of a source text that survive concatenation unchanged:
    they open with an upper-case/quote character and close with terminal
    punctuation our splitter will split on again.
    """
    doc = Document.from_text(text)
    pool = []
    for start, end in doc.sentences:
        c0 = doc.token_spans[start][0]
        c1 = doc.token_spans[end - 1][1]
        sent = doc.text[c0:c1].strip()
        if not sent:
            continue
        probe = sent + " A"
        if len(sentence_char_offsets(probe)) != 1:
            continue
        if not (sent[0].isupper() or sent[0] in "\"'“‘"):
            continue
        pool.append(sent)
    return pool


def build_sentence_pools(sources):
    """One usable-sentence list per source text."""
    return [_clean_sentence_pool(s) for s in sources]


def synthesize_document(sources, n_changes, min_segment_sentences, seed,
                        max_segment_sentences=None, doc_id="synthetic",
                        cursors=None):
    """Concatenate alternating-source sentence blocks into one document.

    Returns (Document, borders, changed). Each block holds exactly
    min_segment_sentences sentences unless max_segment_sentences widens
    the range; consecutive blocks always come from different sources.
    Deterministic given the seed.

    sources may be raw texts or prebuilt sentence pools (lists). Passing
    a cursors list makes consumption persist across calls, so a corpus
    synthesized pool-by-pool never repeats a sentence.
    """
    if n_changes >= 1 and len(sources) < 2:
        raise ValueError("need at least 2 distinct sources for n_changes >= 1")
    if not sources:
        raise ValueError("no sources given")
    rng = np.random.default_rng(seed)
    pools = [
        _clean_sentence_pool(s) if isinstance(s, str) else s for s in sources
    ]
    if cursors is None:
        cursors = [0] * len(sources)
    if len(cursors) != len(sources):
        raise ValueError("cursor/source count mismatch")

    hi = max_segment_sentences or min_segment_sentences
    if hi < min_segment_sentences:
        raise ValueError("max_segment_sentences below min_segment_sentences")

    current = int(rng.integers(0, len(sources)))
    blocks = []
    for _ in range(n_changes + 1):
        want = int(rng.integers(min_segment_sentences, hi + 1))
        pool, cur = pools[current], cursors[current]
        if cur + want > len(pool):
            raise ValueError(
                f"source {current} exhausted: needs {cur + want} usable sentences, "
                f"has {len(pool)}"
            )
        blocks.append(pool[cur:cur + want])
        cursors[current] = cur + want
        if n_changes >= 1:
            others = [i for i in range(len(sources)) if i != current]
            current = others[int(rng.integers(0, len(others)))]

    text = " ".join(s for block in blocks for s in block)
    doc = Document.from_text(text, doc_id=doc_id)

    expected = sum(len(b) for b in blocks)
    if doc.n_sentences != expected:
        raise RuntimeError(
            f"sentence drift in synthesis: built {expected}, split into {doc.n_sentences}"
        )
    borders = list(np.cumsum([len(b) for b in blocks[:-1]]).astype(int)) if blocks[1:] else []
    return doc, [int(b) for b in borders], n_changes > 0
