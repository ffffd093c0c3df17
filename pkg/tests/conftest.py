import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the shared oracles module

from kwextract.corpus import load_corpus

REPO_ROOT = Path(__file__).parent.parent
DATA_DIR = REPO_ROOT / "data"
BUNDLED_CORPUS_DIR = DATA_DIR / "zipf100"
BUNDLED_STOPLIST = DATA_DIR / "stoplist.txt"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def bundled_corpus():
    return load_corpus(BUNDLED_CORPUS_DIR)


@pytest.fixture(scope="session")
def bundled_stoplist() -> set[str]:
    lines = BUNDLED_STOPLIST.read_text(encoding="utf-8").splitlines()
    return {line.strip().casefold() for line in lines if line.strip()}
