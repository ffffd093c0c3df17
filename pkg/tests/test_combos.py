import itertools
import random

from kwextract.combos import (
    ComboAcceptList,
    build_combo_accept_list,
    count_combos,
    verify_membership_equivalence,
)
from kwextract.corpus import Corpus

from oracles import random_accept, random_corpus, ref_combo_counts


def corpus_of(*texts):
    return Corpus.from_texts((f"a{i}", t) for i, t in enumerate(texts))


def as_dict(table):
    return {e.key: e.count for e in table.entries}


class TestComboAcceptList:
    def test_three_words_give_six_ordered_pairs(self):
        combos = build_combo_accept_list({"a", "b", "c"})
        assert combos.pairs == {
            ("a", "b"), ("b", "a"), ("a", "c"), ("c", "a"), ("b", "c"), ("c", "b"),
        }
        assert len(combos) == 6

    def test_singleton_has_no_pairs(self):
        combos = build_combo_accept_list({"x"})
        assert combos.pairs == frozenset()
        assert len(combos) == 0

    def test_twenty_words_give_380(self):
        combos = build_combo_accept_list({f"w{i}" for i in range(20)})
        assert len(combos) == 380
        assert len(combos.pairs) == 380

    def test_membership_predicate(self):
        combos = build_combo_accept_list({"a", "b"})
        assert ("a", "b") in combos
        assert ("b", "a") in combos
        assert ("a", "a") not in combos
        assert ("a", "z") not in combos

    def test_source_size_recorded(self):
        assert build_combo_accept_list({"a", "b", "c"}).source_accept_size == 3


class TestCountCombos:
    def test_dedup_and_both_orders(self):
        corpus = corpus_of("routing protocol routing protocol")
        table = count_combos(corpus, build_combo_accept_list({"routing", "protocol"}))
        assert as_dict(table) == {"routing protocol": 1, "protocol routing": 1}

    def test_one_hit_per_abstract(self):
        corpus = corpus_of("energy consumption here", "more energy consumption")
        combos = build_combo_accept_list({"energy", "consumption", "more", "here"})
        assert as_dict(count_combos(corpus, combos))["energy consumption"] == 2

    def test_separator_between_words_keeps_adjacency(self):
        corpus = corpus_of("energy, consumption")
        combos = build_combo_accept_list({"energy", "consumption"})
        assert as_dict(count_combos(corpus, combos)) == {"energy consumption": 1}

    def test_self_pairs_never_match(self):
        corpus = corpus_of("data data data")
        table = count_combos(corpus, build_combo_accept_list({"data"}))
        assert table.entries == []

    def test_zero_count_combos_omitted_by_default(self):
        corpus = corpus_of("alpha beta")
        combos = build_combo_accept_list({"alpha", "beta", "gamma"})
        table = count_combos(corpus, combos)
        assert set(as_dict(table)) == {"alpha beta"}

    def test_include_zero_materializes_all_pairs(self):
        corpus = corpus_of("alpha beta")
        combos = build_combo_accept_list({"alpha", "beta", "gamma"})
        table = count_combos(corpus, combos, include_zero=True)
        assert len(table.entries) == 6
        assert as_dict(table)["gamma alpha"] == 0

    def test_counts_bounded_by_n(self):
        rng = random.Random(4)
        corpus, _ = random_corpus(rng)
        combos = build_combo_accept_list(random_accept(rng))
        table = count_combos(corpus, combos)
        assert all(0 <= e.count <= corpus.n for e in table.entries)

    def test_symmetric_corpus_counts_both_orders(self):
        corpus = corpus_of("a b x", "a b y", "b a x", "b a y", "neither")
        combos = build_combo_accept_list({"a", "b"})
        counts = as_dict(count_combos(corpus, combos))
        assert counts == {"a b": 2, "b a": 2}

    def test_counts_match_reference_scan(self):
        rng = random.Random(31)
        for _ in range(25):
            corpus, texts = random_corpus(rng)
            accept = random_accept(rng)
            got = {
                tuple(e.key.split(" ")): e.count
                for e in count_combos(corpus, build_combo_accept_list(accept)).entries
            }
            assert got == ref_combo_counts(texts, accept)

    def test_display_uses_most_frequent_surface_pair(self):
        corpus = corpus_of("Data Fusion x", "data fusion y", "Data Fusion z")
        combos = build_combo_accept_list({"data", "fusion"})
        table = count_combos(corpus, combos)
        assert table.entries[0].display == "Data Fusion"


class TestMembershipEquivalence:
    def test_holds_for_built_lists(self):
        for size in (0, 1, 2, 5, 12):
            accept = {f"w{i}" for i in range(size)}
            assert verify_membership_equivalence(accept, build_combo_accept_list(accept))

    def test_detects_mismatched_list(self):
        accept = {"a", "b", "c"}
        wrong = build_combo_accept_list({"a", "b", "z"})
        assert not verify_membership_equivalence(accept, wrong)

    def test_large_accept_uses_sampling(self):
        accept = {f"word{i:03d}" for i in range(200)}
        assert verify_membership_equivalence(accept, build_combo_accept_list(accept))

    def test_exhaustive_agreement_small_sizes(self):
        for size in range(0, 8):
            accept = {f"w{i}" for i in range(size)}
            combos = build_combo_accept_list(accept)
            vocabulary = sorted(accept | {"outside1", "outside2"})
            for pair in itertools.product(vocabulary, repeat=2):
                expected = pair[0] != pair[1] and pair[0] in accept and pair[1] in accept
                assert (pair in combos) == expected
                assert (pair in combos.pairs) == expected
