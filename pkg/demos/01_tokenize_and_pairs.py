"""How abstracts are split into tokens and adjacent word pairs.

Separators are single characters (punctuation plus whitespace); a maximal run
of them ends one token and starts the next. Splitting never breaks adjacency,
which is why hyphenated phrases still count as combos.
"""

from kwextract import DEFAULT_SEPARATORS, bigrams, tokenize

SAMPLES = [
    "Energy-aware routing protocols for ad-hoc networks.",
    "Real-time scheduling; (low) latency'd links",
    "Sensor, SENSOR and sensor are one word",
]

for text in SAMPLES:
    tokens = tokenize(text)
    print(f"text:     {text!r}")
    print(f"surfaces: {[t.surface for t in tokens]}")
    print(f"words:    {[t.normalized for t in tokens]}")
    print(f"pairs:    {list(bigrams(tokens))}")
    print()

print("separator characters:", "".join(sorted(DEFAULT_SEPARATORS.chars)))
print("plus every whitespace character")

custom = DEFAULT_SEPARATORS.extended("!?")
print()
print("with '!' added:", [t.normalized for t in tokenize("wait! what?", custom)])
print("default keeps it:", [t.normalized for t in tokenize("wait! what?")])
