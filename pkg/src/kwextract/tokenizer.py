"""Separator-based tokenization of abstract text.

Text is split at maximal runs of separator characters; everything between
separators is a token. Tokens are matched case-insensitively through their
casefolded form, while the original surface spelling is kept for display.
Adjacent-pair streams for combo counting come from the same token sequence:
separators split words but never break adjacency, so "real-time" and
"energy, consumption" both yield an adjacent pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Core separator characters. Whitespace is always treated as a separator in
# addition to these (handled dynamically, since Unicode whitespace is open-ended).
CORE_SEPARATOR_CHARS = frozenset(",.;-'<>()[]/\":")

# Typographic quote variants that show up in text pasted from PDFs.
TYPOGRAPHIC_QUOTE_CHARS = frozenset("`‘’“”")

ComboKey = tuple[str, str]


@dataclass(frozen=True)
class SeparatorSet:
    """The characters that delimit tokens.

    ``chars`` holds the explicit separator characters; any character for which
    ``str.isspace()`` is true is a separator as well.
    """

    chars: frozenset[str]

    def __post_init__(self):
        missing = CORE_SEPARATOR_CHARS - self.chars
        if missing:
            raise ValueError(
                f"separator set must include the core characters, missing: {sorted(missing)}"
            )
        bad = [c for c in self.chars if len(c) != 1]
        if bad:
            raise ValueError(f"separators must be single characters, got: {bad}")

    def is_separator(self, ch: str) -> bool:
        return ch in self.chars or ch.isspace()

    def extended(self, extra: Iterable[str]) -> "SeparatorSet":
        """A new set with ``extra`` characters added."""
        return SeparatorSet(self.chars | frozenset(extra))


DEFAULT_SEPARATORS = SeparatorSet(CORE_SEPARATOR_CHARS | TYPOGRAPHIC_QUOTE_CHARS)


@dataclass(frozen=True)
class Token:
    """One word occurrence inside an abstract."""

    surface: str
    normalized: str
    abstract_ordinal: int
    position: int


def tokenize(
    text: str,
    separators: SeparatorSet = DEFAULT_SEPARATORS,
    *,
    abstract_ordinal: int = 0,
) -> list[Token]:
    """Split ``text`` into tokens at maximal separator runs.

    Empty fragments are discarded, positions are 0-based and consecutive, and
    each token's ``normalized`` form is the casefold of its surface. Empty
    input yields an empty list.
    """
    tokens: list[Token] = []
    start = None
    position = 0

    def flush(end: int):
        nonlocal start, position
        if start is not None:
            surface = text[start:end]
            tokens.append(
                Token(
                    surface=surface,
                    normalized=surface.casefold(),
                    abstract_ordinal=abstract_ordinal,
                    position=position,
                )
            )
            position += 1
            start = None

    for i, ch in enumerate(text):
        if separators.is_separator(ch):
            flush(i)
        elif start is None:
            start = i
    flush(len(text))
    return tokens


def bigrams(tokens: Iterable[Token]) -> Iterator[ComboKey]:
    """Yield adjacent normalized word pairs from one abstract's token stream.

    Pairs with equal components are yielded too; they simply never match a
    combo accept list, which contains only pairs of distinct words. Fewer than
    two tokens yield nothing.
    """
    it = iter(tokens)
    try:
        prev = next(it)
    except StopIteration:
        return
    for tok in it:
        yield (prev.normalized, tok.normalized)
        prev = tok
