#!/usr/bin/env python3
"""Regenerate the bundled corpus, the lexicon, and the golden report files.

The corpus and stoplist come from kwextract.synth. The golden TSVs are
deliberately NOT produced by the package: everything below the corpus files
(training-subset selection, tokenization, counting, display selection,
sorting, rendering) is re-implemented here from scratch, so the goldens are
an independent check on the real pipeline. Keep it that way.

Run from the repository root:  python tools/regen_fixtures.py
"""

from __future__ import annotations

import re
import statistics
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from kwextract.synth import write_stoplist, write_zipf_corpus  # noqa: E402

CORPUS_DIR = ROOT / "data" / "zipf100"
STOPLIST = ROOT / "data" / "stoplist.txt"
GOLDEN_DIR = ROOT / "tests" / "golden"

GOLDEN_M = 15
GOLDEN_SEED = 7
GOLDEN_TOP = 15

SEPARATOR_CHARS = ",.;-'<>()[]/\":" + "`‘’“”"
SPLIT_RE = re.compile("[" + re.escape(SEPARATOR_CHARS) + r"\s]+")

MASK64 = (1 << 64) - 1


def splitmix64(seed):
    state = seed & MASK64

    def nxt():
        nonlocal state
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    return nxt


def draw_below(nxt, n):
    limit = (1 << 64) - ((1 << 64) % n)
    while True:
        value = nxt()
        if value < limit:
            return value % n


def pick_training(n, m, seed):
    nxt = splitmix64(seed)
    chosen = set()
    while len(chosen) < m:
        chosen.add(draw_below(nxt, n))
    return sorted(chosen)


def split_words(text):
    return [w for w in SPLIT_RE.split(text) if w]


def main():
    write_zipf_corpus(CORPUS_DIR, n_abstracts=100, seed=2024)
    write_stoplist(STOPLIST)
    print(f"wrote corpus to {CORPUS_DIR} and stoplist to {STOPLIST}")

    texts = [
        path.read_text(encoding="utf-8")
        for path in sorted(CORPUS_DIR.glob("*.txt"))
    ]
    stopset = {
        line.strip().casefold()
        for line in STOPLIST.read_text(encoding="utf-8").splitlines()
        if line.strip()
    }

    surfaces_per_doc = [split_words(t) for t in texts]
    words_per_doc = [[s.casefold() for s in doc] for doc in surfaces_per_doc]

    training = pick_training(len(texts), GOLDEN_M, GOLDEN_SEED)
    vocab = set()
    for q in training:
        vocab.update(words_per_doc[q])
    accept = sorted(vocab - stopset)
    print(f"training abstracts: {training}")
    print(f"accept list: {len(accept)} words, rejected: {len(vocab & stopset)}")

    # keyword counts: one per (word, abstract) membership probe
    doc_word_sets = [set(doc) for doc in words_per_doc]
    kw_counts = {
        w: sum(1 for s in doc_word_sets if w in s) for w in accept
    }

    # combo counts: per-abstract set of adjacent pairs, both words accepted
    accept_set = set(accept)
    combo_counts = {}
    for doc in words_per_doc:
        pairs_here = set()
        for a, b in zip(doc, doc[1:]):
            if a != b and a in accept_set and b in accept_set:
                pairs_here.add((a, b))
        for pair in pairs_here:
            combo_counts[pair] = combo_counts.get(pair, 0) + 1

    # display forms: most frequent surface, first occurrence breaking ties
    clock = 0
    kw_surface, kw_first = {}, {}
    combo_surface, combo_first = {}, {}
    for doc_surfaces, doc_words in zip(surfaces_per_doc, words_per_doc):
        for i, (surface, word) in enumerate(zip(doc_surfaces, doc_words)):
            clock += 1
            if word in accept_set:
                slot = kw_surface.setdefault(word, {})
                slot[surface] = slot.get(surface, 0) + 1
                kw_first.setdefault((word, surface), clock)
            if i + 1 < len(doc_words):
                pair = (word, doc_words[i + 1])
                if pair[0] != pair[1] and pair[0] in accept_set and pair[1] in accept_set:
                    text_pair = f"{surface} {doc_surfaces[i + 1]}"
                    key = f"{pair[0]} {pair[1]}"
                    slot = combo_surface.setdefault(key, {})
                    slot[text_pair] = slot.get(text_pair, 0) + 1
                    combo_first.setdefault((key, text_pair), clock)

    def best_surface(key, table, firsts):
        options = table.get(key)
        if not options:
            return key
        return min(options, key=lambda s: (-options[s], firsts[(key, s)]))

    def render(rows):
        lines = ["rank\tkeyword\tfrequency"]
        for rank, (display, count) in enumerate(rows, start=1):
            lines.append(f"{rank}\t{display}\t{count}")
        return "\n".join(lines) + "\n"

    kw_rows = sorted(kw_counts.items(), key=lambda item: (-item[1], item[0]))
    kw_top = [
        (best_surface(word, kw_surface, kw_first), count)
        for word, count in kw_rows[:GOLDEN_TOP]
    ]

    combo_rows = sorted(
        ((f"{a} {b}", count) for (a, b), count in combo_counts.items()),
        key=lambda item: (-item[1], item[0]),
    )
    combo_top = [
        (best_surface(key, combo_surface, combo_first), count)
        for key, count in combo_rows[:GOLDEN_TOP]
    ]

    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    (GOLDEN_DIR / "keywords_top15.tsv").write_text(render(kw_top), encoding="utf-8")
    (GOLDEN_DIR / "combos_top15.tsv").write_text(render(combo_top), encoding="utf-8")
    print(f"wrote goldens to {GOLDEN_DIR}")
    print(render(kw_top))
    print(render(combo_top))


if __name__ == "__main__":
    main()
