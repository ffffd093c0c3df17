"""Document-frequency counting of accepted keywords.

A keyword's count is the number of abstracts in which it appears at least
once; repetitions inside one abstract never add to the count, so every count
is bounded by the corpus size. Tables sort by count descending with an
ascending lexicographic tie-break on the normalized key, which makes exports
byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus
from .tokenizer import DEFAULT_SEPARATORS, SeparatorSet, tokenize


@dataclass(frozen=True)
class TableEntry:
    key: str  # normalized word, or "first second" for a combo
    display: str  # most frequent surface form seen in the corpus
    count: int


@dataclass
class FrequencyTable:
    entries: list[TableEntry]
    n_abstracts: int

    def __len__(self) -> int:
        return len(self.entries)

    def top_keys(self, k: int) -> list[str]:
        return [entry.key for entry in self.entries[:k]]

    def to_tsv(self, top: int | None = None) -> str:
        """Render as ``rank\\tkeyword\\tfrequency`` rows, rank 1 first."""
        rows = self.entries if top is None else self.entries[:top]
        lines = ["rank\tkeyword\tfrequency"]
        for rank, entry in enumerate(rows, start=1):
            lines.append(f"{rank}\t{entry.display}\t{entry.count}")
        return "\n".join(lines) + "\n"


def sort_table(table: FrequencyTable) -> FrequencyTable:
    """Order entries by count descending, ties by ascending key. Idempotent."""
    ordered = sorted(table.entries, key=lambda e: (-e.count, e.key))
    return FrequencyTable(entries=ordered, n_abstracts=table.n_abstracts)


class DisplayTracker:
    """Picks the display spelling for each key: the surface form occurring
    most often across the corpus, earliest first occurrence breaking ties."""

    def __init__(self):
        self._counts: dict[str, dict[str, int]] = {}
        self._first_seen: dict[tuple[str, str], int] = {}
        self._clock = 0

    def observe(self, key: str, surface: str):
        self._clock += 1
        per_key = self._counts.setdefault(key, {})
        per_key[surface] = per_key.get(surface, 0) + 1
        self._first_seen.setdefault((key, surface), self._clock)

    def display_for(self, key: str) -> str:
        per_key = self._counts.get(key)
        if not per_key:
            return key
        return min(
            per_key,
            key=lambda surface: (-per_key[surface], self._first_seen[(key, surface)]),
        )


def count_keywords(
    corpus: Corpus,
    accept: Iterable[str],
    separators: SeparatorSet = DEFAULT_SEPARATORS,
) -> FrequencyTable:
    """Count, for every accepted word, the abstracts that contain it.

    Every accepted word gets a table entry, including words that never occur
    (count 0). An empty accept list yields an empty table.
    """
    accepted = set(accept)
    counts = {word: 0 for word in accepted}
    display = DisplayTracker()

    for abstract in corpus:
        seen_here: set[str] = set()
        for token in tokenize(abstract.text, separators, abstract_ordinal=abstract.ordinal):
            word = token.normalized
            if word not in accepted:
                continue
            display.observe(word, token.surface)
            if word not in seen_here:
                seen_here.add(word)
                counts[word] += 1

    entries = [
        TableEntry(key=word, display=display.display_for(word), count=count)
        for word, count in counts.items()
    ]
    return sort_table(FrequencyTable(entries=entries, n_abstracts=corpus.n))
