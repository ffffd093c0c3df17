"""The full pipeline: train, then rank keywords and combo words.

Counting covers all N abstracts, not just the training subset, and a word or
combo counts at most once per abstract, so no frequency can exceed N.
"""

from pathlib import Path

from kwextract import (
    TrainingSession,
    build_combo_accept_list,
    count_combos,
    count_keywords,
    lexicon_oracle,
    load_corpus,
    run_with_oracle,
)

DATA = Path(__file__).resolve().parent.parent / "data"

corpus = load_corpus(DATA / "zipf100")
stoplist = {w for w in (DATA / "stoplist.txt").read_text().split() if w}

session = run_with_oracle(
    TrainingSession.start(corpus, m=15, seed=7), lexicon_oracle(stoplist)
)
accept = session.lists.accept
print(f"accept list: {len(accept)} words; combo list holds "
      f"{len(accept) * (len(accept) - 1)} ordered pairs (never materialized)")
print()

keywords = count_keywords(corpus, accept)
combos = count_combos(corpus, build_combo_accept_list(accept))

print("top 15 keywords")
print(keywords.to_tsv(top=15))
print("top 15 combo words")
print(combos.to_tsv(top=15))
