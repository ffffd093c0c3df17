"""Do the top-ranked tables depend on how many abstracts were used to train?

One run per training size, same seed, then pairwise overlap of the top-15
key sets. On the bundled corpus every overlap is 1.0: fifteen abstracts are
already enough to see every word that matters.
"""

from pathlib import Path

from kwextract import lexicon_oracle, load_corpus, topk_stability

DATA = Path(__file__).resolve().parent.parent / "data"

corpus = load_corpus(DATA / "zipf100")
stoplist = {w for w in (DATA / "stoplist.txt").read_text().split() if w}

m_values = [15, 30, 50]
report = topk_stability(
    corpus, m_values, k=15, seed=7, oracle=lexicon_oracle(stoplist)
)

print(f"top-{report.k} overlap across training sizes {report.m_values}")
print()
print(report.to_tsv())

header = "        " + "".join(f"M={m:<6}" for m in m_values)
print("keyword overlap matrix")
print(header)
for i, m in enumerate(m_values):
    cells = "".join(f"{report.keyword_overlap[i][j]:<8}" for j in range(len(m_values)))
    print(f"M={m:<6}{cells}")
