import pytest
from hypothesis import given, strategies as st

from kwextract.tokenizer import (
    CORE_SEPARATOR_CHARS,
    DEFAULT_SEPARATORS,
    SeparatorSet,
    bigrams,
    tokenize,
)

from oracles import split_words


def normalized(text, separators=DEFAULT_SEPARATORS):
    return [t.normalized for t in tokenize(text, separators)]


class TestTokenize:
    def test_hyphen_and_period_split(self):
        assert normalized("ad-hoc networks.") == ["ad", "hoc", "networks"]

    def test_casefold_and_positions(self):
        tokens = tokenize("Energy, ENERGY; energy")
        assert [t.normalized for t in tokens] == ["energy", "energy", "energy"]
        assert [t.position for t in tokens] == [0, 1, 2]
        assert [t.surface for t in tokens] == ["Energy", "ENERGY", "energy"]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_all_separator_text(self):
        assert tokenize("-- .. ;;(),") == []

    def test_maximal_runs_collapse(self):
        assert normalized("a,,--  ..b") == ["a", "b"]

    def test_abstract_ordinal_carried(self):
        tokens = tokenize("one two", abstract_ordinal=5)
        assert all(t.abstract_ordinal == 5 for t in tokens)

    def test_non_separator_punctuation_kept(self):
        # '!' and '?' are not in the separator set, so they stay inside tokens
        assert normalized("wait! what?") == ["wait!", "what?"]

    def test_typographic_quotes_split(self):
        assert normalized("don’t “quote”") == ["don", "t", "quote"]

    def test_custom_extra_separator(self):
        seps = DEFAULT_SEPARATORS.extended("!")
        assert normalized("wait! now", seps) == ["wait", "now"]

    @given(st.text(max_size=200))
    def test_agrees_with_regex_reference(self, text):
        assert normalized(text) == split_words(text)

    @given(st.text(max_size=200))
    def test_retokenizing_joined_surfaces_is_stable(self, text):
        tokens = tokenize(text)
        rejoined = " ".join(t.surface for t in tokens)
        assert [t.normalized for t in tokenize(rejoined)] == [t.normalized for t in tokens]

    @given(st.text(max_size=200))
    def test_no_separator_inside_tokens(self, text):
        for token in tokenize(text):
            assert not any(DEFAULT_SEPARATORS.is_separator(c) for c in token.normalized)


class TestSeparatorSet:
    def test_default_contains_core_set(self):
        assert CORE_SEPARATOR_CHARS <= DEFAULT_SEPARATORS.chars

    def test_whitespace_always_separates(self):
        for ch in (" ", "\t", "\n", " "):
            assert DEFAULT_SEPARATORS.is_separator(ch)

    def test_core_chars_required(self):
        with pytest.raises(ValueError):
            SeparatorSet(frozenset(",.;"))

    def test_multichar_rejected(self):
        with pytest.raises(ValueError):
            SeparatorSet(CORE_SEPARATOR_CHARS | {"ab"})

    def test_extended_adds(self):
        extended = DEFAULT_SEPARATORS.extended("!?")
        assert extended.is_separator("!") and extended.is_separator("?")
        assert not DEFAULT_SEPARATORS.is_separator("!")


class TestBigrams:
    def test_sliding_window(self):
        tokens = tokenize("routing protocol design")
        assert list(bigrams(tokens)) == [("routing", "protocol"), ("protocol", "design")]

    def test_below_window_size(self):
        assert list(bigrams(tokenize("node"))) == []
        assert list(bigrams(tokenize(""))) == []

    def test_hyphenated_words_stay_adjacent(self):
        tokens = tokenize("real-time systems")
        assert [t.normalized for t in tokens] == ["real", "time", "systems"]
        assert list(bigrams(tokens)) == [("real", "time"), ("time", "systems")]

    def test_equal_component_pairs_are_yielded(self):
        assert list(bigrams(tokenize("the the"))) == [("the", "the")]

    @given(st.text(max_size=200))
    def test_count_is_tokens_minus_one(self, text):
        tokens = tokenize(text)
        assert len(list(bigrams(tokens))) == max(0, len(tokens) - 1)
