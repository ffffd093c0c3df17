"""Synthetic abstract corpora with a Zipf-shaped vocabulary.

Used for the bundled offline corpus and for randomized test instances. The
generator plants a set of high-document-frequency "core" topic words and a
set of adjacent two-word phrases built from them, then pads each abstract
with stopwords and a Zipf-distributed long tail. Because the core words land
in nearly every abstract, any reasonably sized random training subset sees
all of them, which keeps top-k rankings stable across training sizes; the
shared tail vocabulary makes the query rate decay as training progresses.

Everything is driven by the package's own deterministic generator, so one
(n, seed) pair always produces the identical corpus, file for file.
"""

from __future__ import annotations

from pathlib import Path

from .corpus import SplitMix64

STOPWORDS = (
    "a", "an", "the", "and", "or", "but", "if", "then", "than", "that",
    "this", "these", "those", "of", "in", "on", "for", "with", "by", "from",
    "to", "into", "over", "under", "between", "is", "are", "was", "were",
    "be", "been", "has", "have", "had", "can", "may", "will", "we", "our",
    "it", "its", "their", "such", "each", "both", "also", "more", "most",
    "other", "which",
)

CORE_WORDS = (
    "sensor", "network", "node", "energy", "routing", "protocol", "data",
    "wireless", "deployment", "coverage", "latency", "cluster", "topology",
    "aggregation", "bandwidth", "mobility", "localization", "scheduling",
    "security", "throughput", "gateway", "battery",
)

# (first, second, planted document frequency); both components are core words.
PHRASES = (
    ("sensor", "network", 60),
    ("routing", "protocol", 57),
    ("energy", "aggregation", 54),
    ("wireless", "network", 51),
    ("cluster", "topology", 48),
    ("data", "aggregation", 45),
    ("node", "deployment", 42),
    ("network", "coverage", 39),
    ("energy", "scheduling", 36),
    ("gateway", "node", 33),
    ("battery", "energy", 30),
    ("security", "protocol", 28),
    ("mobility", "localization", 26),
    ("throughput", "latency", 24),
    ("sensor", "node", 22),
    ("data", "routing", 20),
    ("topology", "scheduling", 18),
    ("wireless", "bandwidth", 16),
)

# Planted document frequencies for the core words, pairwise distinct so the
# keyword ranking has no accidental structure. Phrase placement can only push
# the realized frequencies higher.
CORE_DOC_FREQS = (
    96, 93, 90, 87, 84, 81, 78, 75, 72, 69, 66,
    63, 60, 58, 56, 54, 52, 50, 48, 46, 44, 42,
)

_TAIL_ONSETS = (
    "stam", "morv", "lint", "ketra", "provi", "vexil", "dorun", "salpi",
    "crem", "bintor", "galve", "norpi", "tessul", "havrin", "lumex", "pardo",
    "quint", "rovasel", "minc", "zelpho",
)
_TAIL_CODAS = (
    "ation", "ment", "ing", "ure", "ance", "osity", "ality",
    "ism", "itude", "escence", "ography", "ectomy", "ency",
)


def tail_vocabulary() -> list[str]:
    return [onset + coda for onset in _TAIL_ONSETS for coda in _TAIL_CODAS]


def _zipf_cdf(size: int, exponent: float = 1.15) -> list[float]:
    weights = [1.0 / (rank + 2) ** exponent for rank in range(size)]
    total = sum(weights)
    running = 0.0
    cdf = []
    for w in weights:
        running += w
        cdf.append(running / total)
    return cdf


def _draw_from_cdf(rng: SplitMix64, cdf: list[float]) -> int:
    u = rng.next_u64() / 2**64
    for i, threshold in enumerate(cdf):
        if u < threshold:
            return i
    return len(cdf) - 1


def _sample_ordinals(rng: SplitMix64, n: int, count: int) -> set[int]:
    chosen: set[int] = set()
    while len(chosen) < count:
        chosen.add(rng.below(n))
    return chosen


def generate_zipf_corpus(n_abstracts: int = 100, seed: int = 2024) -> list[tuple[str, str]]:
    """Return (id, text) pairs for a deterministic synthetic corpus."""
    if n_abstracts < 2:
        raise ValueError("need at least 2 abstracts")
    rng = SplitMix64(seed)
    tail = tail_vocabulary()
    tail_cdf = _zipf_cdf(len(tail))

    def scale(df: int) -> int:
        return max(1, min(n_abstracts, round(df * n_abstracts / 100)))

    core_in: dict[str, set[int]] = {
        word: _sample_ordinals(rng, n_abstracts, scale(df))
        for word, df in zip(CORE_WORDS, CORE_DOC_FREQS)
    }
    phrase_in: list[tuple[str, str, set[int]]] = [
        (a, b, _sample_ordinals(rng, n_abstracts, scale(df))) for a, b, df in PHRASES
    ]

    abstracts: list[tuple[str, str]] = []
    for q in range(n_abstracts):
        units: list[list[str]] = []
        for a, b, placements in phrase_in:
            if q in placements:
                units.append([a, b])
        assigned_cores = [w for w in CORE_WORDS if q in core_in[w]]
        for word in assigned_cores:
            units.append([word])

        filler_count = 70 + rng.below(41)
        for _ in range(filler_count):
            roll = rng.below(100)
            if roll < 45:
                units.append([STOPWORDS[rng.below(len(STOPWORDS))]])
            elif roll < 88 or not assigned_cores:
                units.append([tail[_draw_from_cdf(rng, tail_cdf)]])
            else:
                units.append([assigned_cores[rng.below(len(assigned_cores))]])

        # Fisher-Yates over units keeps each phrase's two words adjacent.
        for i in range(len(units) - 1, 0, -1):
            j = rng.below(i + 1)
            units[i], units[j] = units[j], units[i]

        words = [w for unit in units for w in unit]
        text = _compose_sentences(rng, words)
        abstracts.append((f"abs_{q:03d}", text))
    return abstracts


def _compose_sentences(rng: SplitMix64, words: list[str]) -> str:
    """Join words into sentences: initial capital, occasional comma, period."""
    sentences = []
    i = 0
    while i < len(words):
        length = min(8 + rng.below(7), len(words) - i)
        chunk = list(words[i : i + length])
        i += length
        chunk[0] = chunk[0].capitalize()
        parts = []
        for j, word in enumerate(chunk):
            if 0 < j < len(chunk) - 1 and rng.below(10) == 0:
                parts.append(word + ",")
            else:
                parts.append(word)
        sentences.append(" ".join(parts) + ".")
    return " ".join(sentences) + "\n"


def write_zipf_corpus(directory: str | Path, n_abstracts: int = 100, seed: int = 2024):
    """Write the corpus as one UTF-8 ``.txt`` file per abstract."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for doc_id, text in generate_zipf_corpus(n_abstracts, seed):
        (directory / f"{doc_id}.txt").write_text(text, encoding="utf-8")


def write_stoplist(path: str | Path):
    """Write the rejection lexicon matching the synthetic corpus: one word per line."""
    Path(path).write_text("\n".join(STOPWORDS) + "\n", encoding="utf-8")
