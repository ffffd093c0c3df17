"""Command-line surface for the extraction pipeline.

Subcommands:
  ingest  validate a corpus directory and record it in the workspace
  train   run a classification session (interactive terminal or lexicon oracle)
  report  rank keywords / combos / the query-rate series from a finished session
  sweep   compare top-k rankings across several training sizes
  serve   start the local HTTP service for the browser client

Every command is deterministic given the workspace state, its flags, and the
seed; outputs are UTF-8 and byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .classifier import Decision, TrainingSession, lexicon_oracle, run_with_oracle
from .combos import build_combo_accept_list, count_combos
from .corpus import load_corpus
from .errors import KwextractError
from .frequency import count_keywords
from .metrics import query_rate_series, topk_stability
from .persistence import (
    init_workspace_dirs,
    load_session_payload,
    save_session,
    save_word_lists,
)
from .service import KeywordService, make_server
from .tokenizer import tokenize
from .workspace import (
    build_separators,
    config_path,
    load_config,
    resolve_corpus_dir,
    save_config,
)


def entrypoint():
    sys.exit(main())


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KwextractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kwextract",
        description="Extract and rank secondary keywords and combo words from abstracts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="load and register a corpus directory")
    p_ingest.add_argument("corpus_dir", help="directory of .txt abstracts, one per file")
    _add_workspace(p_ingest)
    p_ingest.set_defaults(func=cmd_ingest)

    p_train = sub.add_parser("train", help="build the accept / non-accept lists")
    p_train.add_argument("--m", type=int, help="training-set size (default from config)")
    p_train.add_argument("--seed", type=int, help="sampling seed (default from config)")
    p_train.add_argument("--mode", choices=["terminal", "oracle"], default="terminal")
    p_train.add_argument("--lexicon", help="oracle mode: file of rejected words, one per line")
    p_train.add_argument("--resume", help="continue a previously saved session file")
    p_train.add_argument("--out", help="session file to write (default under sessions/)")
    _add_workspace(p_train)
    p_train.set_defaults(func=cmd_train)

    p_report = sub.add_parser("report", help="rank keywords and combos over the corpus")
    p_report.add_argument("--session", required=True, help="completed session file")
    p_report.add_argument(
        "--target",
        choices=["keywords", "combos", "both", "series"],
        default="both",
    )
    p_report.add_argument("--top", type=int, help="table depth (default from config)")
    p_report.add_argument("--include-zero", action="store_true",
                          help="keep never-matched combos in the combo table")
    p_report.add_argument("--cumulative", action="store_true",
                          help="series: use running totals instead of per-abstract rates")
    p_report.add_argument("--format", choices=["tsv", "plot"], default="tsv",
                          help="series: output format")
    p_report.add_argument("--out", help="write to file instead of standard output")
    _add_workspace(p_report)
    p_report.set_defaults(func=cmd_report)

    p_sweep = sub.add_parser("sweep", help="top-k stability across training sizes")
    p_sweep.add_argument("--m", required=True, help="comma-separated sizes, e.g. 15,30,50")
    p_sweep.add_argument("--k", type=int, help="table depth compared (default from config)")
    p_sweep.add_argument("--seed", type=int, help="sampling seed (default from config)")
    p_sweep.add_argument("--lexicon", required=True, help="rejected-words file for the oracle")
    p_sweep.add_argument("--out", help="write to file instead of standard output")
    _add_workspace(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_serve = sub.add_parser("serve", help="start the local HTTP service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui-dir", help="directory of built UI assets to serve at /")
    p_serve.add_argument("--verbose", action="store_true", help="log requests")
    _add_workspace(p_serve)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def _add_workspace(parser: argparse.ArgumentParser):
    parser.add_argument("-w", "--workspace", default=".", help="workspace directory")


def _load_workspace_corpus(args):
    if not config_path(args.workspace).exists():
        raise KwextractError(
            f"no corpus ingested: run 'kwextract ingest' first (missing {config_path(args.workspace)})"
        )
    config = load_config(args.workspace)
    corpus_dir = resolve_corpus_dir(config, args.workspace)
    return load_corpus(corpus_dir), config


def _load_lexicon(path: str) -> set[str]:
    lexicon_path = Path(path)
    if not lexicon_path.is_file():
        raise KwextractError(f"lexicon file does not exist: {lexicon_path}")
    words = set()
    for line in lexicon_path.read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if word:
            words.add(word.casefold())
    return words


# -- commands ------------------------------------------------------------


def cmd_ingest(args) -> int:
    corpus = load_corpus(args.corpus_dir)
    init_workspace_dirs(args.workspace)
    config = load_config(args.workspace)
    config.corpus_dir = str(Path(args.corpus_dir).resolve())
    save_config(config, args.workspace)
    separators = build_separators(config)

    print(f"N = {corpus.n}")
    for abstract in corpus:
        tokens = tokenize(abstract.text, separators, abstract_ordinal=abstract.ordinal)
        print(f"{abstract.ordinal}\t{abstract.id}\t{len(tokens)}")
    return 0


def cmd_train(args) -> int:
    corpus, config = _load_workspace_corpus(args)
    separators = build_separators(config)
    m = args.m if args.m is not None else config.default_m
    seed = args.seed if args.seed is not None else config.default_seed

    if args.resume:
        session = TrainingSession.resume(corpus, load_session_payload(args.resume))
        m, seed = session.m, session.training.seed
    else:
        session = TrainingSession.start(corpus, m, seed, separators)

    init_workspace_dirs(args.workspace)
    out = Path(args.out) if args.out else (
        Path(args.workspace) / "sessions" / f"session_m{m}_seed{seed}.json"
    )

    if args.mode == "oracle":
        if not args.lexicon:
            print("error: oracle mode requires --lexicon", file=sys.stderr)
            return 1
        run_with_oracle(session, lexicon_oracle(_load_lexicon(args.lexicon)))
    else:
        finished = _terminal_loop(session, out)
        if not finished:
            save_session(session, out)
            print(f"\ninterrupted; partial session saved to {out}")
            print(f"resume with: kwextract train --resume {out}")
            return 1

    save_session(session, out)
    _save_lists(session, args.workspace)
    print(f"training complete: {len(session.query_log)} words classified "
          f"({len(session.lists.accept)} accepted, {len(session.lists.non_accept)} rejected)")
    print(f"session saved to {out}")
    return 0


def _save_lists(session: TrainingSession, workspace: str):
    name = f"lists_m{session.m}_seed{session.training.seed}.json"
    save_word_lists(session.lists, Path(workspace) / "lists" / name)


def _terminal_loop(session: TrainingSession, out: Path) -> bool:
    """Prompt per pending word; 1 accepts, 0 rejects. Returns False on interrupt."""
    try:
        # a resumed session may already carry the question it was stopped at
        while (query := session.pending_query() or session.next_query()) is not None:
            before = " ".join(query.context_before)
            after = " ".join(query.context_after)
            print(f"\n[{query.training_position + 1}/{session.m}] {query.abstract_id}")
            print(f"  ... {before} >>{query.surface}<< {after} ...")
            while True:
                answer = input(f"classify {query.word!r} [1=accept, 0=reject]: ").strip()
                if answer in ("0", "1"):
                    break
                print("please enter 1 (accept) or 0 (reject)")
            session.classify(query.word, Decision.from_code(int(answer)), source="human")
            save_session(session, out)  # durable before the next query
        return True
    except (KeyboardInterrupt, EOFError):
        return False


def cmd_report(args) -> int:
    corpus, config = _load_workspace_corpus(args)
    separators = build_separators(config)
    session = TrainingSession.resume(corpus, load_session_payload(args.session))
    if not session.complete:
        print("error: training incomplete", file=sys.stderr)
        return 1
    top = args.top if args.top is not None else config.default_top_k
    if top < 1:
        print(f"error: --top must be >= 1, got {top}", file=sys.stderr)
        return 1

    accept = session.lists.accept
    sections = []
    if args.target in ("keywords", "both"):
        sections.append(count_keywords(corpus, accept, separators).to_tsv(top))
    if args.target in ("combos", "both"):
        table = count_combos(
            corpus, build_combo_accept_list(accept), separators,
            include_zero=args.include_zero,
        )
        sections.append(table.to_tsv(top))
    if args.target == "series":
        series = query_rate_series(session, cumulative=args.cumulative)
        sections.append(series.to_plot_data() if args.format == "plot" else series.to_tsv())

    output = "\n".join(sections)
    _emit(output, args.out)
    return 0


def cmd_sweep(args) -> int:
    corpus, config = _load_workspace_corpus(args)
    separators = build_separators(config)
    try:
        m_values = [int(part) for part in args.m.split(",") if part.strip()]
    except ValueError:
        print(f"error: --m must be comma-separated integers, got {args.m!r}", file=sys.stderr)
        return 1
    if not m_values:
        print("error: --m lists no sizes", file=sys.stderr)
        return 1
    k = args.k if args.k is not None else config.default_top_k
    seed = args.seed if args.seed is not None else config.default_seed
    oracle = lexicon_oracle(_load_lexicon(args.lexicon))
    report = topk_stability(corpus, m_values, k, seed, oracle, separators)
    _emit(report.to_tsv(), args.out)
    return 0


def cmd_serve(args) -> int:
    service = KeywordService(args.workspace, ui_dir=args.ui_dir)
    try:
        server = make_server(service, args.host, args.port, quiet=not args.verbose)
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    print(f"serving on http://{args.host}:{args.port} (workspace: {service.workspace})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
