"""Train the accept / non-accept lists on the bundled corpus.

A lexicon oracle stands in for the human: listed words are rejected,
everything else is accepted. Each distinct word of the 15 sampled training
abstracts is classified exactly once; re-encounters are skipped silently.
"""

from pathlib import Path

from kwextract import TrainingSession, lexicon_oracle, load_corpus, run_with_oracle

DATA = Path(__file__).resolve().parent.parent / "data"

corpus = load_corpus(DATA / "zipf100")
stoplist = {w for w in (DATA / "stoplist.txt").read_text().split() if w}

session = TrainingSession.start(corpus, m=15, seed=7)
print(f"corpus: N = {corpus.n}, training on abstracts {session.training.ordered()}")

run_with_oracle(session, lexicon_oracle(stoplist))

print(f"words classified: {len(session.query_log)}")
print(f"accepted: {len(session.lists.accept)}, rejected: {len(session.lists.non_accept)}")
print()
print("first ten decisions:")
for entry in session.query_log[:10]:
    print(f"  {entry.word:<16} -> {entry.decision.name.lower()}")
print()
print("per-abstract burden (tokens seen / queries asked):")
for i, stats in enumerate(session.per_abstract_stats):
    print(f"  abstract {i:2d}: {stats.tokens_seen:4d} tokens, {stats.queries_asked:3d} queries")
