"""Ordered two-word combinations of accepted keywords and their counting.

The combo accept list is conceptually every ordered pair of distinct accepted
words: both (a, b) and (b, a) for each unordered pair, never (a, a). Counting
tests membership with the equivalent predicate "both words accepted and
distinct" instead of materializing the quadratic pair set; the explicit set
stays available so the two routes can be checked against each other.

A combo is counted for an abstract when its two words occur as adjacent
tokens there, at most once per abstract no matter how often the pair repeats.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .corpus import Corpus, SplitMix64
from .frequency import DisplayTracker, FrequencyTable, TableEntry, sort_table
from .tokenizer import DEFAULT_SEPARATORS, ComboKey, SeparatorSet, tokenize


class ComboAcceptList:
    """All ordered pairs of distinct accepted words."""

    def __init__(self, accept: Iterable[str]):
        self.accept = frozenset(accept)
        self.source_accept_size = len(self.accept)
        self._pairs: frozenset[ComboKey] | None = None

    def __contains__(self, pair: ComboKey) -> bool:
        first, second = pair
        return first != second and first in self.accept and second in self.accept

    def __len__(self) -> int:
        return self.source_accept_size * (self.source_accept_size - 1)

    @property
    def pairs(self) -> frozenset[ComboKey]:
        """The materialized pair set (quadratic in the accept-list size)."""
        if self._pairs is None:
            self._pairs = frozenset(itertools.permutations(sorted(self.accept), 2))
        return self._pairs


def build_combo_accept_list(accept: Iterable[str]) -> ComboAcceptList:
    """Combine every two distinct accepted words, in both orders."""
    return ComboAcceptList(accept)


def count_combos(
    corpus: Corpus,
    combo_list: ComboAcceptList,
    separators: SeparatorSet = DEFAULT_SEPARATORS,
    include_zero: bool = False,
) -> FrequencyTable:
    """Count, per combo, the abstracts where its words appear adjacently.

    Combos never matched are left out of the table unless ``include_zero`` is
    set, in which case every pair of the materialized list appears (zero
    counts included). Keys render as "first second".
    """
    counts: dict[ComboKey, int] = {}
    display = DisplayTracker()

    for abstract in corpus:
        tokens = tokenize(abstract.text, separators, abstract_ordinal=abstract.ordinal)
        seen_here: set[ComboKey] = set()
        for left, right in itertools.pairwise(tokens):
            pair = (left.normalized, right.normalized)
            if pair not in combo_list:
                continue
            display.observe(f"{pair[0]} {pair[1]}", f"{left.surface} {right.surface}")
            if pair not in seen_here:
                seen_here.add(pair)
                counts[pair] = counts.get(pair, 0) + 1

    if include_zero:
        for pair in combo_list.pairs:
            counts.setdefault(pair, 0)

    entries = [
        TableEntry(key=f"{a} {b}", display=display.display_for(f"{a} {b}"), count=count)
        for (a, b), count in counts.items()
    ]
    return sort_table(FrequencyTable(entries=entries, n_abstracts=corpus.n))


def verify_membership_equivalence(
    accept: Iterable[str],
    combo_list: ComboAcceptList,
    extra_words: Iterable[str] = ("zzz-unaccepted", "qqq-unaccepted"),
    max_exhaustive: int = 60,
    sample_size: int = 10_000,
    seed: int = 0,
) -> bool:
    """Check that predicate membership matches the materialized pair set.

    Candidate pairs are drawn over the accepted words plus some words outside
    the list: exhaustively when the candidate vocabulary is small, otherwise
    as a seeded random sample. Returns True iff, for every tested pair, the
    predicate, the explicit set, and the definition (both components accepted
    and distinct) all agree.
    """
    accepted = frozenset(accept)
    candidates = sorted(accepted | set(extra_words))
    if len(candidates) <= max_exhaustive:
        sample = itertools.product(candidates, repeat=2)
    else:
        rng = SplitMix64(seed)
        sample = (
            (candidates[rng.below(len(candidates))], candidates[rng.below(len(candidates))])
            for _ in range(sample_size)
        )

    materialized = combo_list.pairs
    for pair in sample:
        by_definition = pair[0] in accepted and pair[1] in accepted and pair[0] != pair[1]
        if (pair in combo_list) != by_definition:
            return False
        if (pair in materialized) != by_definition:
            return False
    return True
