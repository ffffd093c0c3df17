"""Workspace configuration shared by the CLI and the HTTP service.

A workspace is a directory holding ``corpus/``, ``lists/``, ``sessions/`` and
``results/`` plus a ``config.json`` with the defaults below. The config file
is plain user-editable JSON, not a versioned store document.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import KwextractError
from .tokenizer import DEFAULT_SEPARATORS, SeparatorSet

CONFIG_FILENAME = "config.json"


@dataclass
class WorkspaceConfig:
    corpus_dir: str = "corpus"
    separator_override: str = ""  # extra separator characters, concatenated
    default_m: int = 15
    default_seed: int = 7
    default_top_k: int = 15

    def __post_init__(self):
        if self.default_top_k < 1:
            raise KwextractError("default_top_k must be >= 1")
        if self.default_m < 1:
            raise KwextractError("default_m must be >= 1")


def config_path(workspace: str | Path) -> Path:
    return Path(workspace) / CONFIG_FILENAME


def load_config(workspace: str | Path) -> WorkspaceConfig:
    path = config_path(workspace)
    if not path.exists():
        return WorkspaceConfig()
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise KwextractError(f"cannot read workspace config {path}: {exc}") from exc
    known = {f for f in WorkspaceConfig.__dataclass_fields__}
    unknown = set(data) - known
    if unknown:
        raise KwextractError(f"unknown config keys in {path}: {sorted(unknown)}")
    try:
        return WorkspaceConfig(**data)
    except TypeError as exc:
        raise KwextractError(f"bad workspace config {path}: {exc}") from exc


def save_config(config: WorkspaceConfig, workspace: str | Path):
    path = config_path(workspace)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(
        json.dumps(asdict(config), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def resolve_corpus_dir(config: WorkspaceConfig, workspace: str | Path) -> Path:
    corpus_dir = Path(config.corpus_dir)
    if corpus_dir.is_absolute():
        return corpus_dir
    return Path(workspace) / corpus_dir


def build_separators(config: WorkspaceConfig) -> SeparatorSet:
    if not config.separator_override:
        return DEFAULT_SEPARATORS
    return DEFAULT_SEPARATORS.extended(config.separator_override)
