"""How fast the classification burden falls off during training.

The query rate of a training abstract is the share of its tokens that had to
be asked about. As the lists grow, later abstracts are mostly pre-classified,
so the rate collapses toward zero and its trend line flattens.
"""

from pathlib import Path

from kwextract import (
    TrainingSession,
    lexicon_oracle,
    load_corpus,
    query_rate_series,
    run_with_oracle,
    trend_slope,
)

DATA = Path(__file__).resolve().parent.parent / "data"

corpus = load_corpus(DATA / "zipf100")
stoplist = {w for w in (DATA / "stoplist.txt").read_text().split() if w}

session = run_with_oracle(
    TrainingSession.start(corpus, m=30, seed=7), lexicon_oracle(stoplist)
)
series = query_rate_series(session)

print("query rate per training abstract:")
for point in series.points:
    bar = "#" * round(point.percentage / 2)
    print(f"  {point.training_position:2d} {point.percentage:6.2f}% {bar}")

print()
print("sliding trend slopes (window 5, percentage points per abstract):")
for start, slope in trend_slope(series, window=5):
    print(f"  window at {start:2d}: {slope:+.3f}")

cumulative = query_rate_series(session, cumulative=True)
print()
print(f"cumulative rate after all 30 abstracts: {cumulative.points[-1].percentage:.2f}%")
