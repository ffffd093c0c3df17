"""Versioned on-disk storage for word lists, sessions, tables, and reports.

Documents are canonical JSON: UTF-8, two-space indent, keys sorted, sets
stored as sorted arrays, trailing newline. Equal in-memory values therefore
always produce byte-identical files, which golden tests and the resume
machinery rely on. Writes go through a temp file and an atomic rename.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from .classifier import WordLists
from .errors import StoreError
from .frequency import FrequencyTable, TableEntry
from .metrics import QueryRatePoint, QueryRateSeries, StabilityReport

SCHEMA_VERSION = 1

KIND_WORD_LISTS = "word_lists"
KIND_SESSION = "session"
KIND_TABLE = "frequency_table"
KIND_SERIES = "series"
KIND_REPORT = "stability_report"
KINDS = (KIND_WORD_LISTS, KIND_SESSION, KIND_TABLE, KIND_SERIES, KIND_REPORT)

WORKSPACE_SUBDIRS = ("corpus", "lists", "sessions", "results")


@dataclass(frozen=True)
class StoredDocument:
    schema_version: int
    kind: str
    payload: dict


def canonical_json(value) -> str:
    return json.dumps(value, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def save_document(document: StoredDocument, path: str | Path):
    """Write atomically; the parent directory must already exist."""
    path = Path(path)
    if not path.parent.is_dir():
        raise StoreError(f"directory does not exist: {path.parent}")
    body = canonical_json(
        {
            "schema_version": document.schema_version,
            "kind": document.kind,
            "payload": document.payload,
        }
    )
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_text(body, encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise StoreError(f"cannot write {path}: {exc}") from exc


def load_document(path: str | Path, expected_kind: str) -> StoredDocument:
    """Read, check version and kind, and re-validate the payload invariants."""
    path = Path(path)
    try:
        raw = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StoreError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise StoreError(f"{path} is not valid JSON: {exc}") from exc

    for field in ("schema_version", "kind", "payload"):
        if field not in data:
            raise StoreError(f"{path} is missing the {field!r} field")
    if data["schema_version"] != SCHEMA_VERSION:
        raise StoreError(
            f"{path} has unknown schema_version {data['schema_version']!r}"
        )
    if data["kind"] != expected_kind:
        raise StoreError(
            f"{path} holds a {data['kind']!r} document, expected {expected_kind!r}"
        )
    _validate_payload(data["kind"], data["payload"], path)
    return StoredDocument(
        schema_version=data["schema_version"], kind=data["kind"], payload=data["payload"]
    )


def init_workspace_dirs(root: str | Path):
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    for name in WORKSPACE_SUBDIRS:
        (root / name).mkdir(exist_ok=True)


# -- payload validation ----------------------------------------------------


def _check(condition: bool, path: Path, message: str):
    if not condition:
        raise StoreError(f"{path}: {message}")


def _validate_word_lists(payload: dict, path: Path):
    accept = payload.get("accept")
    non_accept = payload.get("non_accept")
    _check(isinstance(accept, list) and isinstance(non_accept, list), path,
           "word lists must be arrays")
    overlap = set(accept) & set(non_accept)
    _check(not overlap, path, f"accept and non-accept lists overlap: {sorted(overlap)[:5]}")
    _check(all(isinstance(w, str) and w for w in accept + non_accept), path,
           "list members must be non-empty strings")


def _validate_session(payload: dict, path: Path):
    for field in ("corpus_fingerprint", "corpus_n", "separators", "training",
                  "accept", "non_accept", "cursor", "query_log", "stats"):
        _check(field in payload, path, f"session payload missing {field!r}")
    _validate_word_lists(payload, path)
    _check(len(payload["stats"]) == payload["training"]["m"], path,
           "one stats slot per training abstract required")
    for tokens, queries in payload["stats"]:
        _check(0 <= queries <= tokens, path, "queries_asked must not exceed tokens_seen")
    words = [entry["word"] for entry in payload["query_log"]]
    _check(len(words) == len(set(words)), path, "a word may be queried only once")
    classified = set(payload["accept"]) | set(payload["non_accept"])
    _check(set(words) <= classified, path, "every logged word must be classified")


def _validate_table(payload: dict, path: Path):
    _check("n_abstracts" in payload and "entries" in payload, path,
           "table payload needs n_abstracts and entries")
    n = payload["n_abstracts"]
    entries = payload["entries"]
    keys = [key for key, _display, _count in entries]
    _check(len(keys) == len(set(keys)), path, "table keys must be unique")
    previous = None
    for key, _display, count in entries:
        _check(0 <= count <= n, path, f"count for {key!r} outside [0, {n}]")
        if previous is not None:
            prev_key, prev_count = previous
            _check(
                count < prev_count or (count == prev_count and key > prev_key),
                path,
                "entries must sort by count descending, key ascending",
            )
        previous = (key, count)


def _validate_series(payload: dict, path: Path):
    _check("points" in payload, path, "series payload needs points")
    for position, tokens, queries, percentage in payload["points"]:
        _check(0 <= queries <= tokens, path, f"bad counts at position {position}")
        _check(0.0 <= percentage <= 100.0, path,
               f"percentage out of range at position {position}")


def _validate_report(payload: dict, path: Path):
    for field in ("k", "m_values", "keyword_overlap", "combo_overlap"):
        _check(field in payload, path, f"report payload missing {field!r}")
    for matrix in (payload["keyword_overlap"], payload["combo_overlap"]):
        for row in matrix:
            for value in row:
                _check(0.0 <= value <= 1.0, path, "overlap values must be in [0, 1]")


_VALIDATORS = {
    KIND_WORD_LISTS: _validate_word_lists,
    KIND_SESSION: _validate_session,
    KIND_TABLE: _validate_table,
    KIND_SERIES: _validate_series,
    KIND_REPORT: _validate_report,
}


def _validate_payload(kind: str, payload: dict, path: Path):
    validator = _VALIDATORS.get(kind)
    if validator is None:
        raise StoreError(f"{path}: unknown document kind {kind!r}")
    validator(payload, path)


# -- typed helpers -----------------------------------------------------------


def save_word_lists(lists: WordLists, path: str | Path):
    payload = {"accept": sorted(lists.accept), "non_accept": sorted(lists.non_accept)}
    save_document(StoredDocument(SCHEMA_VERSION, KIND_WORD_LISTS, payload), path)


def load_word_lists(path: str | Path) -> WordLists:
    doc = load_document(path, KIND_WORD_LISTS)
    return WordLists(
        accept=set(doc.payload["accept"]), non_accept=set(doc.payload["non_accept"])
    )


def save_session(session, path: str | Path):
    save_document(StoredDocument(SCHEMA_VERSION, KIND_SESSION, session.to_payload()), path)


def load_session_payload(path: str | Path) -> dict:
    """The stored session payload; attach it to its corpus via
    :meth:`kwextract.classifier.TrainingSession.resume`."""
    return load_document(path, KIND_SESSION).payload


def save_table(table: FrequencyTable, path: str | Path):
    payload = {
        "n_abstracts": table.n_abstracts,
        "entries": [[e.key, e.display, e.count] for e in table.entries],
    }
    save_document(StoredDocument(SCHEMA_VERSION, KIND_TABLE, payload), path)


def load_table(path: str | Path) -> FrequencyTable:
    doc = load_document(path, KIND_TABLE)
    return FrequencyTable(
        entries=[TableEntry(key, display, count) for key, display, count in doc.payload["entries"]],
        n_abstracts=doc.payload["n_abstracts"],
    )


def save_series(series: QueryRateSeries, path: str | Path):
    payload = {
        "cumulative": series.cumulative,
        "points": [
            [p.training_position, p.tokens_seen, p.queries_asked, p.percentage]
            for p in series.points
        ],
    }
    save_document(StoredDocument(SCHEMA_VERSION, KIND_SERIES, payload), path)


def load_series(path: str | Path) -> QueryRateSeries:
    doc = load_document(path, KIND_SERIES)
    return QueryRateSeries(
        points=[QueryRatePoint(*row) for row in doc.payload["points"]],
        cumulative=doc.payload.get("cumulative", False),
    )


def save_report(report: StabilityReport, path: str | Path):
    payload = {
        "k": report.k,
        "m_values": report.m_values,
        "keyword_overlap": report.keyword_overlap,
        "combo_overlap": report.combo_overlap,
    }
    save_document(StoredDocument(SCHEMA_VERSION, KIND_REPORT, payload), path)


def load_report(path: str | Path) -> StabilityReport:
    doc = load_document(path, KIND_REPORT)
    return StabilityReport(
        k=doc.payload["k"],
        m_values=doc.payload["m_values"],
        keyword_overlap=doc.payload["keyword_overlap"],
        combo_overlap=doc.payload["combo_overlap"],
    )
