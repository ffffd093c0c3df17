"""Training-effectiveness measurements.

Two questions are answered here: how quickly does the query burden fall off
as training advances (the per-abstract query-rate series and its trend
slopes), and how stable are the top-ranked keywords and combos when the
training-set size changes (pairwise top-k overlap across runs).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Sequence

from .classifier import Oracle, TrainingSession, run_with_oracle
from .combos import build_combo_accept_list, count_combos
from .corpus import Corpus
from .errors import SessionIncompleteError
from .frequency import count_keywords
from .tokenizer import DEFAULT_SEPARATORS, SeparatorSet


@dataclass(frozen=True)
class QueryRatePoint:
    training_position: int
    tokens_seen: int
    queries_asked: int
    percentage: float


@dataclass
class QueryRateSeries:
    points: list[QueryRatePoint]
    cumulative: bool = False

    def percentages(self) -> list[float]:
        return [p.percentage for p in self.points]

    def to_tsv(self) -> str:
        lines = ["position\ttokens_seen\tqueries_asked\tpercentage"]
        for p in self.points:
            lines.append(
                f"{p.training_position}\t{p.tokens_seen}\t{p.queries_asked}\t{p.percentage}"
            )
        return "\n".join(lines) + "\n"

    def to_plot_data(self) -> str:
        """Line-oriented ``x y`` pairs for external plotting tools."""
        return "".join(f"{p.training_position} {p.percentage}\n" for p in self.points)


def _point(position: int, tokens: int, queries: int) -> QueryRatePoint:
    percentage = 100.0 * queries / tokens if tokens else 0.0
    return QueryRatePoint(position, tokens, queries, percentage)


def partial_query_rate_points(session: TrainingSession) -> list[QueryRatePoint]:
    """Per-abstract points for the training abstracts finished so far."""
    done = session.abstracts_done
    return [
        _point(i, s.tokens_seen, s.queries_asked)
        for i, s in enumerate(session.per_abstract_stats[:done])
    ]


def query_rate_series(session: TrainingSession, cumulative: bool = False) -> QueryRateSeries:
    """One point per training abstract: share of its tokens that raised a query.

    With ``cumulative`` set, each point instead uses running totals of queries
    and tokens up to that abstract. Zero-token abstracts report 0 by
    convention. The session must be complete.
    """
    if not session.complete:
        raise SessionIncompleteError("query-rate series requires a completed session")
    if not cumulative:
        return QueryRateSeries(partial_query_rate_points(session))
    points = []
    total_tokens = 0
    total_queries = 0
    for i, s in enumerate(session.per_abstract_stats):
        total_tokens += s.tokens_seen
        total_queries += s.queries_asked
        points.append(_point(i, total_tokens, total_queries))
    return QueryRateSeries(points, cumulative=True)


def trend_slope(series: QueryRateSeries, window: int = 5) -> list[tuple[int, float]]:
    """Least-squares slope of percentage over each sliding window.

    Returns (window_start_position, slope) for every window of the given
    width, in order. ``window`` must be at least 2 and no longer than the
    series.
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")
    points = series.points
    if len(points) < window:
        raise ValueError(f"series has {len(points)} points, shorter than window {window}")
    slopes = []
    for start in range(len(points) - window + 1):
        chunk = points[start : start + window]
        xs = [float(p.training_position) for p in chunk]
        ys = [p.percentage for p in chunk]
        slope, _intercept = statistics.linear_regression(xs, ys)
        slopes.append((chunk[0].training_position, slope))
    return slopes


@dataclass
class StabilityReport:
    """Pairwise top-k agreement between runs with different training sizes."""

    k: int
    m_values: list[int]
    keyword_overlap: list[list[float]]
    combo_overlap: list[list[float]]

    def to_tsv(self) -> str:
        lines = ["m1\tm2\tkeyword_overlap\tcombo_overlap"]
        for i, m1 in enumerate(self.m_values):
            for j in range(i, len(self.m_values)):
                lines.append(
                    f"{m1}\t{self.m_values[j]}\t"
                    f"{self.keyword_overlap[i][j]}\t{self.combo_overlap[i][j]}"
                )
        return "\n".join(lines) + "\n"


def _overlap(keys_a: Sequence[str], keys_b: Sequence[str]) -> float:
    depth = min(len(keys_a), len(keys_b))
    if depth == 0:
        return 1.0  # nothing ranked on either side: vacuous agreement
    return len(set(keys_a[:depth]) & set(keys_b[:depth])) / depth


def topk_stability(
    corpus: Corpus,
    m_values: Sequence[int],
    k: int,
    seed: int,
    oracle: Oracle,
    separators: SeparatorSet = DEFAULT_SEPARATORS,
) -> StabilityReport:
    """Train once per m value and compare the resulting top-k rankings.

    Each run samples its own training set (same seed), finishes under the
    oracle, and counts keywords and combos over the full corpus. Overlap is
    the shared fraction of the two top-k key sets, clamped to the shorter
    table where fewer than k entries exist.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    keyword_tops: list[list[str]] = []
    combo_tops: list[list[str]] = []
    for m in m_values:
        session = run_with_oracle(
            TrainingSession.start(corpus, m, seed, separators), oracle
        )
        accept = session.lists.accept
        keyword_tops.append(count_keywords(corpus, accept, separators).top_keys(k))
        combo_tops.append(
            count_combos(corpus, build_combo_accept_list(accept), separators).top_keys(k)
        )

    size = len(m_values)
    kw_matrix = [[_overlap(keyword_tops[i], keyword_tops[j]) for j in range(size)] for i in range(size)]
    combo_matrix = [[_overlap(combo_tops[i], combo_tops[j]) for j in range(size)] for i in range(size)]
    return StabilityReport(
        k=k,
        m_values=list(m_values),
        keyword_overlap=kw_matrix,
        combo_overlap=combo_matrix,
    )
