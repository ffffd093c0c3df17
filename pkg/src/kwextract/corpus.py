"""Corpus loading and reproducible training-set sampling.

A corpus is an ordered collection of abstracts, one plain-text ``.txt`` file
per abstract, loaded in lexicographic filename order so the ordinals never
depend on filesystem enumeration order. Training subsets are drawn with a
small, fully specified 64-bit generator so the same (n, m, seed) triple picks
the same abstracts on any machine and in any run.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorpusError

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudorandom generator (Steele, Lea & Flood's constants).

    state' = state + 0x9E3779B97F4A7C15; the output is the state scrambled by
    two xor-shift-multiply rounds. The output sequence for a given seed is
    fixed, which is what makes training subsets reproducible everywhere.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via rejection, so no modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n


@dataclass(frozen=True)
class Abstract:
    """One document: a stable id (filename stem), its load position, its text."""

    id: str
    ordinal: int
    text: str


@dataclass(frozen=True)
class TrainingSet:
    """The ordinals of the abstracts chosen for the classification session."""

    indices: frozenset[int]
    m: int
    seed: int

    def ordered(self) -> list[int]:
        """Training abstracts are processed in ascending ordinal order."""
        return sorted(self.indices)


@dataclass
class Corpus:
    abstracts: list[Abstract] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.abstracts)

    def __len__(self) -> int:
        return len(self.abstracts)

    def __iter__(self) -> Iterator[Abstract]:
        return iter(self.abstracts)

    def __getitem__(self, ordinal: int) -> Abstract:
        return self.abstracts[ordinal]

    @classmethod
    def from_texts(cls, items: Iterable[tuple[str, str]]) -> "Corpus":
        """Build a corpus from (id, text) pairs, in the given order."""
        abstracts = []
        seen = set()
        for ordinal, (doc_id, text) in enumerate(items):
            if doc_id in seen:
                raise CorpusError(f"duplicate abstract id: {doc_id!r}")
            if not text.strip():
                raise CorpusError(f"abstract {doc_id!r} is empty")
            seen.add(doc_id)
            abstracts.append(Abstract(id=doc_id, ordinal=ordinal, text=text))
        return cls(abstracts)

    @property
    def fingerprint(self) -> str:
        """Content hash used to bind persisted sessions to their corpus."""
        h = hashlib.sha256()
        for abstract in self.abstracts:
            h.update(abstract.id.encode("utf-8"))
            h.update(b"\x00")
            h.update(abstract.text.encode("utf-8"))
            h.update(b"\x01")
        return h.hexdigest()


def load_corpus(directory_path: str | Path) -> Corpus:
    """Load every ``*.txt`` file under ``directory_path`` as one abstract each.

    Files are taken in lexicographic name order; the abstract id is the
    filename without its extension. Raises :class:`CorpusError` for a missing
    directory, an empty corpus, an unreadable or empty file, or non-UTF-8
    content (the error names the file and byte offset).
    """
    directory = Path(directory_path)
    if not directory.is_dir():
        raise CorpusError(f"corpus directory does not exist: {directory}")

    paths = sorted(p for p in directory.iterdir() if p.is_file() and p.suffix == ".txt")
    if not paths:
        raise CorpusError(f"empty corpus: no .txt files in {directory}")

    items: list[tuple[str, str]] = []
    for path in paths:
        try:
            raw = path.read_bytes()
        except OSError as exc:
            raise CorpusError(f"cannot read abstract file {path}: {exc}") from exc
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusError(
                f"abstract file {path} is not valid UTF-8 at byte offset {exc.start}"
            ) from exc
        if not text.strip():
            raise CorpusError(f"abstract file {path} is empty")
        items.append((path.stem, text))
    return Corpus.from_texts(items)


def select_training_set(corpus: Corpus, m: int, seed: int) -> TrainingSet:
    """Randomly pick ``m`` distinct abstract ordinals.

    Uses the draw-and-reject loop: draw a uniform ordinal, add it if not
    already chosen, repeat until the set has ``m`` members. Deterministic in
    (corpus.n, m, seed).
    """
    n = corpus.n
    if not 1 <= m <= n:
        raise ValueError(f"training size m={m} must be in [1, {n}]")
    rng = SplitMix64(seed)
    chosen: set[int] = set()
    while len(chosen) < m:
        chosen.add(rng.below(n))
    return TrainingSet(indices=frozenset(chosen), m=m, seed=seed)
