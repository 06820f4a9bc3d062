import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from stylebreach.preprocess import (
    clean_token,
    clean_tokens,
    load_lexicon,
    normalize_text,
    sentence_char_offsets,
    split_sentences,
    tokenize,
)


class TestNormalize:
    def test_http_url(self):
        assert normalize_text("see https://a.b/c?d=1 now") == "see <URL> now"

    def test_ftp_and_www(self):
        assert normalize_text("ftp://host/file") == "<URL>"
        assert normalize_text("at www.example.com.") == "at <URL>"

    def test_long_number(self):
        assert normalize_text("call 1234567 now") == "call <NUM> now"

    def test_short_number_kept(self):
        assert normalize_text("room 123456") == "room 123456"

    def test_idempotent(self):
        s = normalize_text("x https://a.b 12345678 y")
        assert normalize_text(s) == s


class TestTokenize:
    def test_contraction_single_token(self):
        tokens, _ = tokenize("I won't go")
        assert tokens == ["I", "won't", "go"]

    def test_hyphenated_single_token(self):
        tokens, _ = tokenize("a well-known fact")
        assert "well-known" in tokens

    def test_spans_cover_nonspace(self):
        text = "Stop. Look, listen!"
        tokens, spans = tokenize(text)
        for tok, (a, b) in zip(tokens, spans):
            assert text[a:b] == tok

    def test_placeholder_token(self):
        tokens, _ = tokenize("go to <URL> now")
        assert "<URL>" in tokens

    @given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=80))
    @settings(max_examples=120, deadline=None)
    def test_every_nonspace_char_in_a_token(self, text):
        tokens, spans = tokenize(text)
        covered = set()
        for a, b in spans:
            covered.update(range(a, b))
        for i, ch in enumerate(text):
            if not ch.isspace():
                assert i in covered


class TestCleanToken:
    @pytest.fixture(autouse=True)
    def _lex(self, lexicon):
        self.common = lexicon.common_words
        self.lex = lexicon

    def test_path_collapses(self):
        assert clean_token("/usr/local/bin", self.common) == ["<PATH>"]
        assert clean_token("C:\\temp\\x", self.common) == ["<PATH>"]

    def test_long_repeat(self):
        assert clean_token("soooooo", self.common) == ["<LONG>"]

    def test_repeat_of_four_kept(self):
        assert clean_token("soooo", self.common) == ["soooo"]

    def test_hyphen_split_when_parts_common(self):
        assert clean_token("day-after-day", self.common) == ["day", "after", "day"]

    def test_hyphen_unknown_parts_collapse(self):
        assert clean_token("xqz-vbn-klm", self.common) == ["<LONG>"]

    def test_two_part_hyphen_kept(self):
        assert clean_token("well-known", self.common) == ["well-known"]

    def test_over_long_word(self):
        assert clean_token("a" * 25, self.common) == ["<LONG>"]
        assert clean_token("ab" * 12, self.common) == ["ab" * 12]

    def test_clean_tokens_idempotent(self):
        tokens = ["go", "/usr/local/bin", "soooooo", "day-after-day", "x" * 30]
        once = clean_tokens(tokens, self.lex)
        assert clean_tokens(once, self.lex) == once


class TestSentences:
    def test_plain_split(self):
        offs = sentence_char_offsets("One two. Three four. Five.")
        assert len(offs) == 2

    def test_abbreviation_not_boundary(self):
        assert sentence_char_offsets("Mr. Smith arrived. He sat.") == [19]

    def test_initial_not_boundary(self):
        assert sentence_char_offsets("J. Smith arrived. He sat.") == [18]

    def test_contraction_final_word_is_boundary(self):
        offs = sentence_char_offsets("It wasn't. He left.")
        assert len(offs) == 1

    def test_lowercase_continuation_not_boundary(self):
        assert sentence_char_offsets("version 2. is out now") == []

    def test_question_and_quote(self):
        offs = sentence_char_offsets('Really?" She laughed. End.')
        assert len(offs) == 2

    def test_split_sentences_partition(self):
        text = "One two. Three four five. Six."
        tokens, spans = tokenize(text)
        sents = split_sentences(text, spans)
        assert sents[0] == (0, 3)
        assert sents[-1][1] == len(tokens)
        for (a, b), (c, d) in zip(sents, sents[1:]):
            assert b == c

    def test_no_empty_sentences(self):
        text = "Stop.   Go. Wait."
        _, spans = tokenize(text)
        for a, b in split_sentences(text, spans):
            assert b > a


class TestLexicon:
    def test_counts(self, lexicon):
        assert len(lexicon.contraction_pairs) == 29
        assert len(lexicon.frequency_table) == len(lexicon.common_ranked)
        assert lexicon.frequent_words == tuple(
            sorted(lexicon.stop_words | lexicon.function_words)
        )

    def test_the_is_max_frequency(self, lexicon):
        assert lexicon.max_frequency_word == "the"
        assert lexicon.frequency_table["the"] == lexicon.max_frequency

    def test_contraction_pairs_shape(self, lexicon):
        for contracted, expanded in lexicon.contraction_pairs:
            assert "'" in contracted
            assert " " in expanded or expanded == "cannot"

    def test_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("STYLEBREACH_LEXICONS", str(tmp_path))
        with pytest.raises(FileNotFoundError):
            load_lexicon()
