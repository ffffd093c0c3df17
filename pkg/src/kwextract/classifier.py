"""The interactive training session over the sampled abstracts.

The session walks the training abstracts token by token, in ascending ordinal
order. The first time a word is seen it is surfaced as a query; the decision
puts it on the accept or the non-accept list and the word is never asked
about again, in this or any later abstract. Per-abstract counts of tokens
seen and queries asked drive the training-effectiveness metrics.

State machine contract: ``next_query`` must not be called while a decision is
outstanding, and ``classify`` only accepts the currently pending word. A
session can be serialized at any decision boundary and resumed against the
same corpus with identical behavior.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .corpus import Corpus, TrainingSet, select_training_set
from .errors import ProtocolError, StoreError
from .tokenizer import DEFAULT_SEPARATORS, SeparatorSet, Token, tokenize

CONTEXT_WINDOW = 6  # tokens of context shown on each side of a queried word


class Decision(Enum):
    """The two classification outcomes, with their 0/1 prompt encoding."""

    REJECT = 0
    ACCEPT = 1

    @classmethod
    def from_code(cls, code: int) -> "Decision":
        return cls(code)


@dataclass
class WordLists:
    """The disjoint accept / non-accept partition built during training."""

    accept: set[str] = field(default_factory=set)
    non_accept: set[str] = field(default_factory=set)

    def contains(self, word: str) -> bool:
        return word in self.accept or word in self.non_accept

    def add(self, word: str, decision: Decision):
        if self.contains(word):
            raise RuntimeError(f"word {word!r} is already classified")
        if decision is Decision.ACCEPT:
            self.accept.add(word)
        else:
            self.non_accept.add(word)


@dataclass(frozen=True)
class QueryLogEntry:
    word: str
    decision: Decision
    training_position: int
    source: str  # "human" or "oracle"


@dataclass
class AbstractStats:
    tokens_seen: int = 0
    queries_asked: int = 0


@dataclass(frozen=True)
class Query:
    """A word awaiting classification, with display context around it."""

    word: str
    surface: str
    abstract_id: str
    training_position: int
    context_before: tuple[str, ...]
    context_after: tuple[str, ...]


class TrainingSession:
    """Single-writer state machine over the training abstracts.

    Use :meth:`start` for a fresh session or :meth:`resume` to continue from a
    persisted payload. All mutation goes through ``next_query``/``classify``.
    """

    def __init__(
        self,
        corpus: Corpus,
        training: TrainingSet,
        separators: SeparatorSet,
        lists: WordLists,
        query_log: list[QueryLogEntry],
        per_abstract_stats: list[AbstractStats],
        cursor: tuple[int, int],
        pending: str | None,
    ):
        self.corpus = corpus
        self.training = training
        self.separators = separators
        self.lists = lists
        self.query_log = query_log
        self.per_abstract_stats = per_abstract_stats
        self._order = training.ordered()
        self._streams: list[list[Token]] = [
            tokenize(corpus[ordinal].text, separators, abstract_ordinal=ordinal)
            for ordinal in self._order
        ]
        self._ti, self._pos = cursor
        self._pending_query: Query | None = None
        self._normalize_cursor()
        if pending is not None:
            self._pending_query = self._query_at_cursor(expected=pending)

    # -- construction ----------------------------------------------------

    @classmethod
    def start(
        cls,
        corpus: Corpus,
        m: int,
        seed: int,
        separators: SeparatorSet = DEFAULT_SEPARATORS,
    ) -> "TrainingSession":
        training = select_training_set(corpus, m, seed)
        return cls(
            corpus=corpus,
            training=training,
            separators=separators,
            lists=WordLists(),
            query_log=[],
            per_abstract_stats=[AbstractStats() for _ in range(m)],
            cursor=(0, 0),
            pending=None,
        )

    # -- inspection --------------------------------------------------------

    @property
    def m(self) -> int:
        return self.training.m

    @property
    def corpus_fingerprint(self) -> str:
        return self.corpus.fingerprint

    @property
    def complete(self) -> bool:
        return self._ti >= len(self._order) and self._pending_query is None

    @property
    def pending(self) -> str | None:
        return self._pending_query.word if self._pending_query else None

    def pending_query(self) -> Query | None:
        """The outstanding query, if any. Does not advance the session."""
        return self._pending_query

    @property
    def abstracts_done(self) -> int:
        """Training abstracts whose every token has been processed."""
        return self._ti

    # -- the training loop -------------------------------------------------

    def next_query(self) -> Query | None:
        """Advance to the next unclassified word and return it as a query.

        Tokens already on either list are skipped (counted as seen, never
        re-queried). Returns None once every token of every training abstract
        has been processed.
        """
        if self._pending_query is not None:
            raise ProtocolError("decision required first")
        while self._ti < len(self._order):
            token = self._streams[self._ti][self._pos]
            if self.lists.contains(token.normalized):
                self.per_abstract_stats[self._ti].tokens_seen += 1
                self._advance()
            else:
                self._pending_query = self._query_at_cursor()
                return self._pending_query
        return None

    def classify(self, word: str, decision: Decision, source: str = "human"):
        """Apply the decision for the pending word and move past it."""
        if self._pending_query is None:
            raise ProtocolError(f"no decision pending, cannot classify {word!r}")
        if word != self._pending_query.word:
            raise ProtocolError(
                f"word {word!r} is not the pending word {self._pending_query.word!r}"
            )
        self.lists.add(word, decision)
        self.query_log.append(
            QueryLogEntry(
                word=word,
                decision=decision,
                training_position=self._ti,
                source=source,
            )
        )
        stats = self.per_abstract_stats[self._ti]
        stats.tokens_seen += 1
        stats.queries_asked += 1
        self._pending_query = None
        self._advance()

    # -- cursor helpers ----------------------------------------------------

    def _advance(self):
        self._pos += 1
        self._normalize_cursor()

    def _normalize_cursor(self):
        while self._ti < len(self._order) and self._pos >= len(self._streams[self._ti]):
            self._ti += 1
            self._pos = 0

    def _query_at_cursor(self, expected: str | None = None) -> Query:
        stream = self._streams[self._ti]
        token = stream[self._pos]
        if expected is not None and token.normalized != expected:
            raise StoreError(
                f"pending word {expected!r} does not match token "
                f"{token.normalized!r} at the stored cursor"
            )
        i = self._pos
        return Query(
            word=token.normalized,
            surface=token.surface,
            abstract_id=self.corpus[self._order[self._ti]].id,
            training_position=self._ti,
            context_before=tuple(t.surface for t in stream[max(0, i - CONTEXT_WINDOW) : i]),
            context_after=tuple(t.surface for t in stream[i + 1 : i + 1 + CONTEXT_WINDOW]),
        )

    # -- serialization -----------------------------------------------------

    def to_payload(self) -> dict:
        return {
            "corpus_fingerprint": self.corpus.fingerprint,
            "corpus_n": self.corpus.n,
            "separators": sorted(self.separators.chars),
            "training": {
                "indices": sorted(self.training.indices),
                "m": self.training.m,
                "seed": self.training.seed,
            },
            "accept": sorted(self.lists.accept),
            "non_accept": sorted(self.lists.non_accept),
            "cursor": [self._ti, self._pos],
            "pending": self.pending,
            "query_log": [
                {
                    "word": entry.word,
                    "decision": entry.decision.value,
                    "training_position": entry.training_position,
                    "source": entry.source,
                }
                for entry in self.query_log
            ],
            "stats": [[s.tokens_seen, s.queries_asked] for s in self.per_abstract_stats],
        }

    @classmethod
    def resume(cls, corpus: Corpus, payload: dict) -> "TrainingSession":
        """Rebuild a session from :meth:`to_payload` output, same corpus."""
        if payload["corpus_fingerprint"] != corpus.fingerprint:
            raise StoreError("session was trained on a different corpus")
        if payload["corpus_n"] != corpus.n:
            raise StoreError("session corpus size does not match")
        training = TrainingSet(
            indices=frozenset(payload["training"]["indices"]),
            m=payload["training"]["m"],
            seed=payload["training"]["seed"],
        )
        separators = SeparatorSet(frozenset(payload["separators"]))
        lists = WordLists(
            accept=set(payload["accept"]),
            non_accept=set(payload["non_accept"]),
        )
        query_log = [
            QueryLogEntry(
                word=entry["word"],
                decision=Decision.from_code(entry["decision"]),
                training_position=entry["training_position"],
                source=entry["source"],
            )
            for entry in payload["query_log"]
        ]
        stats = [AbstractStats(tokens_seen=t, queries_asked=q) for t, q in payload["stats"]]
        ti, pos = payload["cursor"]
        return cls(
            corpus=corpus,
            training=training,
            separators=separators,
            lists=lists,
            query_log=query_log,
            per_abstract_stats=stats,
            cursor=(ti, pos),
            pending=payload["pending"],
        )


Oracle = Callable[[str], Decision]


def lexicon_oracle(rejected_words: set[str]) -> Oracle:
    """An automated classifier: reject listed words, accept everything else."""
    rejected = {w.casefold() for w in rejected_words}

    def oracle(word: str) -> Decision:
        return Decision.REJECT if word in rejected else Decision.ACCEPT

    return oracle


def run_with_oracle(session: TrainingSession, oracle: Oracle) -> TrainingSession:
    """Drive the session to completion with an automated classifier."""
    while (query := session.next_query()) is not None:
        session.classify(query.word, oracle(query.word), source="oracle")
    return session
