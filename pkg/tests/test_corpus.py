import random

import pytest

from kwextract.corpus import (
    Corpus,
    SplitMix64,
    load_corpus,
    select_training_set,
)
from kwextract.errors import CorpusError


def write_corpus(directory, files: dict[str, str]):
    directory.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (directory / name).write_text(text, encoding="utf-8")


class TestLoadCorpus:
    def test_lexicographic_order(self, tmp_path):
        write_corpus(tmp_path, {"a2.txt": "two", "a3.txt": "three", "a1.txt": "one"})
        corpus = load_corpus(tmp_path)
        assert corpus.n == 3
        assert [a.id for a in corpus] == ["a1", "a2", "a3"]
        assert [a.ordinal for a in corpus] == [0, 1, 2]

    def test_singleton(self, tmp_path):
        write_corpus(tmp_path, {"only.txt": "alone"})
        assert load_corpus(tmp_path).n == 1

    def test_empty_directory(self, tmp_path):
        with pytest.raises(CorpusError, match="empty corpus"):
            load_corpus(tmp_path)

    def test_missing_directory(self, tmp_path):
        with pytest.raises(CorpusError, match="does not exist"):
            load_corpus(tmp_path / "nope")

    def test_non_txt_files_ignored(self, tmp_path):
        write_corpus(tmp_path, {"a.txt": "text", "b.md": "markdown", "c.json": "{}"})
        corpus = load_corpus(tmp_path)
        assert [a.id for a in corpus] == ["a"]

    def test_non_utf8_names_file_and_offset(self, tmp_path):
        good = tmp_path / "a.txt"
        good.write_text("fine")
        bad = tmp_path / "b.txt"
        bad.write_bytes(b"ok \xff\xfe more")
        with pytest.raises(CorpusError, match=r"b\.txt.*byte offset 3"):
            load_corpus(tmp_path)

    def test_empty_file_rejected(self, tmp_path):
        write_corpus(tmp_path, {"a.txt": "text", "empty.txt": "  \n "})
        with pytest.raises(CorpusError, match="empty"):
            load_corpus(tmp_path)

    def test_fingerprint_stable_and_content_sensitive(self, tmp_path):
        write_corpus(tmp_path, {"a.txt": "alpha", "b.txt": "beta"})
        first = load_corpus(tmp_path).fingerprint
        assert load_corpus(tmp_path).fingerprint == first
        (tmp_path / "b.txt").write_text("changed")
        assert load_corpus(tmp_path).fingerprint != first


class TestFromTexts:
    def test_duplicate_id_rejected(self):
        with pytest.raises(CorpusError, match="duplicate"):
            Corpus.from_texts([("x", "one"), ("x", "two")])

    def test_blank_text_rejected(self):
        with pytest.raises(CorpusError, match="empty"):
            Corpus.from_texts([("x", "   ")])


def make_corpus(n):
    return Corpus.from_texts((f"d{i:03d}", f"word{i}") for i in range(n))


class TestSelectTrainingSet:
    def test_exhaustive_sample(self):
        training = select_training_set(make_corpus(10), 10, seed=99)
        assert training.indices == frozenset(range(10))

    def test_deterministic(self):
        corpus = make_corpus(100)
        a = select_training_set(corpus, 15, seed=42)
        b = select_training_set(corpus, 15, seed=42)
        assert a.indices == b.indices

    def test_two_seeds_each_valid(self):
        corpus = make_corpus(100)
        for seed in (1, 2):
            training = select_training_set(corpus, 15, seed=seed)
            assert len(training.indices) == 15
            assert all(0 <= i < 100 for i in training.indices)

    @pytest.mark.parametrize("m", [0, -1, 101])
    def test_out_of_range_m(self, m):
        with pytest.raises(ValueError):
            select_training_set(make_corpus(100), m, seed=0)

    def test_random_instances_size_and_range(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 60)
            m = rng.randint(1, n)
            training = select_training_set(make_corpus(n), m, rng.randint(0, 2**63))
            assert len(training.indices) == m
            assert all(0 <= i < n for i in training.indices)

    def test_ordered_is_ascending(self):
        training = select_training_set(make_corpus(50), 10, seed=3)
        assert training.ordered() == sorted(training.indices)


class TestSplitMix64:
    def test_published_vectors_seed_zero(self):
        # reference output sequence of splitmix64 for seed 0
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_below_is_in_range_and_deterministic(self):
        a = SplitMix64(123)
        b = SplitMix64(123)
        draws_a = [a.below(7) for _ in range(100)]
        draws_b = [b.below(7) for _ in range(100)]
        assert draws_a == draws_b
        assert all(0 <= d < 7 for d in draws_a)

    def test_below_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SplitMix64(0).below(0)

    def test_negative_seed_masked(self):
        assert SplitMix64(-1).next_u64() == SplitMix64(2**64 - 1).next_u64()
