"""Self-extraction of secondary keywords and combo words from abstract corpora.

Pipeline: load a directory of plain-text abstracts, classify the words of a
randomly sampled training subset into accept / non-accept lists (interactively
or with an automated lexicon oracle), then count per-abstract-deduplicated
document frequencies of the accepted words and of adjacent two-word
combinations over the whole corpus, with ranked tables and training-decay
metrics as output.
"""

from .classifier import (
    Decision,
    Query,
    QueryLogEntry,
    TrainingSession,
    WordLists,
    lexicon_oracle,
    run_with_oracle,
)
from .combos import (
    ComboAcceptList,
    build_combo_accept_list,
    count_combos,
    verify_membership_equivalence,
)
from .corpus import Abstract, Corpus, TrainingSet, load_corpus, select_training_set
from .errors import (
    CorpusError,
    KwextractError,
    ProtocolError,
    SessionIncompleteError,
    StoreError,
)
from .frequency import FrequencyTable, TableEntry, count_keywords, sort_table
from .metrics import (
    QueryRatePoint,
    QueryRateSeries,
    StabilityReport,
    query_rate_series,
    topk_stability,
    trend_slope,
)
from .tokenizer import (
    DEFAULT_SEPARATORS,
    SeparatorSet,
    Token,
    bigrams,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "Abstract",
    "ComboAcceptList",
    "Corpus",
    "CorpusError",
    "DEFAULT_SEPARATORS",
    "Decision",
    "FrequencyTable",
    "KwextractError",
    "ProtocolError",
    "Query",
    "QueryLogEntry",
    "QueryRatePoint",
    "QueryRateSeries",
    "SeparatorSet",
    "SessionIncompleteError",
    "StabilityReport",
    "StoreError",
    "TableEntry",
    "Token",
    "TrainingSession",
    "TrainingSet",
    "WordLists",
    "bigrams",
    "build_combo_accept_list",
    "count_combos",
    "count_keywords",
    "lexicon_oracle",
    "load_corpus",
    "query_rate_series",
    "run_with_oracle",
    "select_training_set",
    "sort_table",
    "tokenize",
    "topk_stability",
    "trend_slope",
    "verify_membership_equivalence",
]
