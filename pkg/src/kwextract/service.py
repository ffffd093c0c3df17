"""Local HTTP facade over the training session, for the browser companion.

One service instance owns at most one training session at a time. Every
decision is written to the workspace before the response goes out, so killing
the process right after a 200 never loses a classified word; on restart the
active session file is picked up and the client resumes at the exact pending
word. Bodies are the same canonical JSON the persistence layer writes.

Endpoints (all under /api):
  GET  /api/health
  GET  /api/session                  the active session, if any (for reloads)
  POST /api/sessions                 {"m": int, "seed": int?}
  GET  /api/sessions/{id}/next
  POST /api/sessions/{id}/decision   {"word": str, "accept": bool}
  GET  /api/results?target=keywords|combos|series&top=k
  GET  /api/export?target=keywords|combos&top=k      (TSV download)

Anything outside /api serves the static UI assets, when configured.
"""

from __future__ import annotations

import mimetypes
import sys
import threading
import uuid
from functools import partial
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

import json

from .classifier import Decision, TrainingSession
from .combos import build_combo_accept_list, count_combos
from .corpus import Corpus, load_corpus
from .errors import KwextractError
from .frequency import FrequencyTable, count_keywords
from .metrics import partial_query_rate_points
from .persistence import canonical_json, load_session_payload, save_session, save_word_lists
from .workspace import build_separators, load_config, resolve_corpus_dir

ACTIVE_SESSION_FILENAME = "active.json"

FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>kwextract service</title></head>
<body><h1>kwextract service</h1>
<p>No UI assets are configured (start with --ui-dir to serve the browser
client). The JSON API is available under <code>/api</code>.</p>
</body></html>
"""


class ApiError(Exception):
    def __init__(self, status: int, message: str, **extra):
        super().__init__(message)
        self.status = status
        self.body = {"error": message, **extra}


class KeywordService:
    """Session owner and request logic, independent of the HTTP transport."""

    def __init__(self, workspace: str | Path, ui_dir: str | Path | None = None):
        self.workspace = Path(workspace)
        self.ui_dir = Path(ui_dir) if ui_dir else None
        self.config = load_config(self.workspace)
        self.separators = build_separators(self.config)
        self._lock = threading.RLock()
        self.corpus: Corpus | None = None
        self.session: TrainingSession | None = None
        self.session_id: str | None = None

        corpus_dir = resolve_corpus_dir(self.config, self.workspace)
        try:
            self.corpus = load_corpus(corpus_dir)
        except KwextractError:
            self.corpus = None  # degraded mode: API reports "no corpus"

        if self.corpus is not None:
            self._try_resume()

    # -- persistence ------------------------------------------------------

    @property
    def _session_path(self) -> Path:
        return self.workspace / "sessions" / ACTIVE_SESSION_FILENAME

    def _try_resume(self):
        path = self._session_path
        if not path.exists():
            return
        try:
            payload = load_session_payload(path)
            self.session = TrainingSession.resume(self.corpus, payload)
            self.session_id = uuid.uuid4().hex
        except KwextractError as exc:
            print(f"warning: ignoring stale session file {path}: {exc}", file=sys.stderr)

    def _persist(self):
        self._session_path.parent.mkdir(parents=True, exist_ok=True)
        save_session(self.session, self._session_path)

    def _persist_lists(self):
        lists_dir = self.workspace / "lists"
        lists_dir.mkdir(parents=True, exist_ok=True)
        name = f"lists_m{self.session.m}_seed{self.session.training.seed}.json"
        save_word_lists(self.session.lists, lists_dir / name)

    # -- session API --------------------------------------------------------

    def _progress(self) -> dict:
        session = self.session
        return {
            "abstracts_done": session.abstracts_done,
            "abstracts_total": session.m,
            "words_classified": len(session.query_log),
            "accept_count": len(session.lists.accept),
            "reject_count": len(session.lists.non_accept),
        }

    def _state(self) -> str:
        if self.session.complete:
            return "complete"
        if self.session.pending is not None:
            return "awaiting_decision"
        return "advancing"

    def _api_session(self) -> dict:
        return {
            "session_id": self.session_id,
            "state": self._state(),
            "progress": self._progress(),
        }

    def current_session(self) -> tuple[int, dict]:
        """Lets a reloading browser rediscover the session it was driving."""
        with self._lock:
            if self.session is None:
                return 200, {"active": False}
            return 200, {"active": True, "session": self._api_session()}

    def create_session(self, body: dict) -> tuple[int, dict]:
        with self._lock:
            if self.corpus is None:
                raise ApiError(422, "no corpus loaded")
            if self.session is not None and not self.session.complete:
                raise ApiError(409, "a session is already active")
            m = body.get("m")
            seed = body.get("seed", self.config.default_seed)
            if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m <= self.corpus.n:
                raise ApiError(400, f"m must be an integer in [1, {self.corpus.n}]")
            if not isinstance(seed, int) or isinstance(seed, bool):
                raise ApiError(400, "seed must be an integer")
            self.session = TrainingSession.start(self.corpus, m, seed, self.separators)
            self.session_id = uuid.uuid4().hex
            self._persist()
            return 201, self._api_session()

    def _require_session(self, session_id: str):
        if self.session is None or session_id != self.session_id:
            raise ApiError(404, "unknown session")

    def next_word(self, session_id: str) -> tuple[int, dict]:
        with self._lock:
            self._require_session(session_id)
            session = self.session
            if not session.complete and session.pending_query() is None:
                if session.next_query() is None:
                    # advancing consumed the trailing tokens; the session just
                    # became complete, which is worth making durable
                    self._persist()
                    self._persist_lists()
            if session.complete:
                return 200, {"complete": True, "progress": self._progress()}
            query = session.pending_query()
            return 200, {
                "word": query.word,
                "surface": query.surface,
                "context_before": " ".join(query.context_before),
                "context_after": " ".join(query.context_after),
                "abstract_id": query.abstract_id,
                "progress": self._progress(),
            }

    def decide(self, session_id: str, body: dict) -> tuple[int, dict]:
        with self._lock:
            self._require_session(session_id)
            session = self.session
            if session.complete:
                raise ApiError(409, "session is complete", pending=None)
            word = body.get("word")
            accept = body.get("accept")
            if not isinstance(word, str) or not isinstance(accept, bool):
                raise ApiError(400, "body must carry a word string and an accept boolean")
            if session.pending_query() is None:
                session.next_query()
            if session.complete:
                raise ApiError(409, "session is complete", pending=None)
            pending = session.pending
            if word != pending:
                raise ApiError(409, "stale decision", pending=pending)
            session.classify(word, Decision.ACCEPT if accept else Decision.REJECT,
                             source="human")
            self._persist()
            if session.complete:
                self._persist_lists()
            return 200, {"state": self._state(), "progress": self._progress()}

    # -- results ------------------------------------------------------------

    def _completed_session(self) -> TrainingSession:
        if self.session is None or not self.session.complete:
            raise ApiError(409, "training incomplete")
        return self.session

    def _table(self, target: str) -> FrequencyTable:
        session = self._completed_session()
        accept = session.lists.accept
        if target == "keywords":
            return count_keywords(self.corpus, accept, self.separators)
        return count_combos(self.corpus, build_combo_accept_list(accept), self.separators)

    def _parse_top(self, params: dict) -> int:
        raw = params.get("top", [str(self.config.default_top_k)])[0]
        try:
            top = int(raw)
        except ValueError:
            raise ApiError(400, f"top must be an integer, got {raw!r}") from None
        if top < 1:
            raise ApiError(400, "top must be >= 1")
        return top

    def results(self, params: dict) -> tuple[int, dict]:
        with self._lock:
            target = params.get("target", [""])[0]
            if target == "series":
                if self.session is None:
                    raise ApiError(409, "training incomplete")
                points = partial_query_rate_points(self.session)
                return 200, {
                    "points": [
                        [p.training_position, p.tokens_seen, p.queries_asked, p.percentage]
                        for p in points
                    ],
                    "complete": self.session.complete,
                }
            if target not in ("keywords", "combos"):
                raise ApiError(400, f"unknown target {target!r}")
            top = self._parse_top(params)
            table = self._table(target)
            return 200, {
                "target": target,
                "n_abstracts": table.n_abstracts,
                "entries": [[e.key, e.display, e.count] for e in table.entries[:top]],
            }

    def export_tsv(self, params: dict) -> tuple[int, str]:
        with self._lock:
            target = params.get("target", [""])[0]
            if target not in ("keywords", "combos"):
                raise ApiError(400, f"unknown target {target!r}")
            top = self._parse_top(params)
            return 200, self._table(target).to_tsv(top)

    # -- static assets --------------------------------------------------------

    def static_asset(self, path: str) -> tuple[bytes, str] | None:
        if self.ui_dir is None:
            if path in ("/", "/index.html"):
                return FALLBACK_PAGE.encode("utf-8"), "text/html; charset=utf-8"
            return None
        name = path.lstrip("/") or "index.html"
        file_path = (self.ui_dir / name).resolve()
        if not str(file_path).startswith(str(self.ui_dir.resolve())):
            return None
        if not file_path.is_file():
            return None
        content_type = mimetypes.guess_type(str(file_path))[0] or "application/octet-stream"
        if content_type.startswith("text/") or content_type == "application/javascript":
            content_type += "; charset=utf-8"
        return file_path.read_bytes(), content_type


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def __init__(self, *args, service: KeywordService, quiet: bool = True, **kwargs):
        self.service = service
        self.quiet = quiet
        super().__init__(*args, **kwargs)

    def log_message(self, format, *args):  # noqa: A002 - stdlib signature
        if not self.quiet:
            super().log_message(format, *args)

    # -- plumbing ----------------------------------------------------------

    def _send_json(self, status: int, body: dict):
        data = canonical_json(body).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _send_bytes(self, status: int, data: bytes, content_type: str):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length", 0))
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            raise ApiError(400, "request body must be JSON") from None
        if not isinstance(body, dict):
            raise ApiError(400, "request body must be a JSON object")
        return body

    def _dispatch(self, method: str):
        parsed = urlparse(self.path)
        segments = [s for s in parsed.path.split("/") if s]
        params = parse_qs(parsed.query)
        try:
            if segments[:1] == ["api"]:
                status, body = self._route_api(method, segments[1:], params)
                if isinstance(body, str):  # TSV export
                    self._send_bytes(
                        status, body.encode("utf-8"), "text/tab-separated-values; charset=utf-8"
                    )
                else:
                    self._send_json(status, body)
                return
            if method == "GET":
                asset = self.service.static_asset(parsed.path)
                if asset is not None:
                    self._send_bytes(200, asset[0], asset[1])
                    return
            raise ApiError(404, "not found")
        except ApiError as exc:
            self._send_json(exc.status, exc.body)

    def _route_api(self, method: str, segments: list[str], params: dict):
        service = self.service
        if method == "GET" and segments == ["health"]:
            return 200, {"status": "ok", "corpus_loaded": service.corpus is not None}
        if method == "GET" and segments == ["session"]:
            return service.current_session()
        if method == "POST" and segments == ["sessions"]:
            return service.create_session(self._read_body())
        if len(segments) == 3 and segments[0] == "sessions":
            session_id, action = segments[1], segments[2]
            if method == "GET" and action == "next":
                return service.next_word(session_id)
            if method == "POST" and action == "decision":
                return service.decide(session_id, self._read_body())
        if method == "GET" and segments == ["results"]:
            return service.results(params)
        if method == "GET" and segments == ["export"]:
            return service.export_tsv(params)
        raise ApiError(404, "not found")

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")


def make_server(
    service: KeywordService,
    host: str = "127.0.0.1",
    port: int = 8080,
    quiet: bool = True,
) -> ThreadingHTTPServer:
    """Bind the HTTP server; raises OSError if the port is taken."""
    handler = partial(_Handler, service=service, quiet=quiet)
    return ThreadingHTTPServer((host, port), handler)
