import json

import pytest

from kwextract.cli import main
from kwextract.classifier import Decision, TrainingSession, lexicon_oracle, run_with_oracle
from kwextract.corpus import load_corpus
from kwextract.persistence import load_session_payload, load_word_lists, save_session

TEXTS = {
    "a1.txt": "Sensor networks use sensor nodes. The nodes route data.",
    "a2.txt": "Routing protocols for sensor networks save energy.",
    "a3.txt": "Energy-aware routing, data fusion and the base station.",
    "a4.txt": "The base station collects data from the sensor nodes.",
}
STOPLIST = "the\nfor\nand\nuse\nfrom\n"


@pytest.fixture
def workspace(tmp_path):
    corpus_dir = tmp_path / "abstracts"
    corpus_dir.mkdir()
    for name, text in TEXTS.items():
        (corpus_dir / name).write_text(text, encoding="utf-8")
    (tmp_path / "stop.txt").write_text(STOPLIST, encoding="utf-8")
    ws = tmp_path / "ws"
    ws.mkdir()
    return ws, corpus_dir


def run(args):
    return main([str(a) for a in args])


class TestIngest:
    def test_summary_output(self, workspace, capsys):
        ws, corpus_dir = workspace
        assert run(["ingest", corpus_dir, "-w", ws]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "N = 4"
        assert lines[1].startswith("0\ta1\t")
        assert len(lines) == 5

    def test_creates_workspace_layout(self, workspace):
        ws, corpus_dir = workspace
        run(["ingest", corpus_dir, "-w", ws])
        for sub in ("corpus", "lists", "sessions", "results"):
            assert (ws / sub).is_dir()
        config = json.loads((ws / "config.json").read_text())
        assert config["corpus_dir"] == str(corpus_dir.resolve())

    def test_empty_directory_fails(self, workspace, tmp_path, capsys):
        ws, _ = workspace
        empty = tmp_path / "empty"
        empty.mkdir()
        assert run(["ingest", empty, "-w", ws]) == 1
        assert "empty corpus" in capsys.readouterr().err

    def test_singleton(self, tmp_path, capsys):
        corpus_dir = tmp_path / "one"
        corpus_dir.mkdir()
        (corpus_dir / "x.txt").write_text("just one abstract")
        assert run(["ingest", corpus_dir, "-w", tmp_path / "ws"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "N = 1"


@pytest.fixture
def ingested(workspace, capsys):
    ws, corpus_dir = workspace
    run(["ingest", corpus_dir, "-w", ws])
    capsys.readouterr()
    return ws, corpus_dir


class TestTrain:
    def test_oracle_mode_writes_session_and_lists(self, ingested, workspace, tmp_path, capsys):
        ws, corpus_dir = ingested
        code = run(["train", "--m", 3, "--seed", 7, "--mode", "oracle",
                    "--lexicon", tmp_path / "stop.txt", "-w", ws])
        assert code == 0
        assert "training complete" in capsys.readouterr().out
        session_file = ws / "sessions" / "session_m3_seed7.json"
        assert session_file.exists()
        lists = load_word_lists(ws / "lists" / "lists_m3_seed7.json")
        corpus = load_corpus(corpus_dir)
        resumed = TrainingSession.resume(corpus, load_session_payload(session_file))
        assert resumed.complete
        assert resumed.lists == lists

    def test_m_larger_than_corpus_fails(self, ingested, tmp_path, capsys):
        ws, _ = ingested
        code = run(["train", "--m", 500, "--seed", 1, "--mode", "oracle",
                    "--lexicon", tmp_path / "stop.txt", "-w", ws])
        assert code == 1
        assert "must be in [1, 4]" in capsys.readouterr().err

    def test_oracle_without_lexicon_fails(self, ingested, capsys):
        ws, _ = ingested
        assert run(["train", "--m", 2, "--mode", "oracle", "-w", ws]) == 1
        assert "requires --lexicon" in capsys.readouterr().err

    def test_missing_lexicon_file_fails(self, ingested, capsys):
        ws, _ = ingested
        code = run(["train", "--m", 2, "--mode", "oracle",
                    "--lexicon", "nope.txt", "-w", ws])
        assert code == 1
        assert "does not exist" in capsys.readouterr().err

    def test_without_ingest_fails(self, tmp_path, capsys):
        assert run(["train", "--m", 1, "--mode", "oracle",
                    "--lexicon", "x", "-w", tmp_path]) == 1
        assert "no corpus ingested" in capsys.readouterr().err

    def test_terminal_mode_accept_reject(self, ingested, monkeypatch, capsys):
        ws, corpus_dir = ingested
        answers = iter(["1", "oops", "", "0"] + ["1"] * 100)
        monkeypatch.setattr("builtins.input", lambda prompt="": next(answers))
        assert run(["train", "--m", 1, "--seed", 3, "--mode", "terminal", "-w", ws]) == 0
        out = capsys.readouterr().out
        assert "please enter 1" in out  # invalid answers reprompt
        session = TrainingSession.resume(
            load_corpus(corpus_dir),
            load_session_payload(ws / "sessions" / "session_m1_seed3.json"),
        )
        assert session.complete
        assert len(session.lists.non_accept) == 1  # the single "0" answer

    def test_terminal_interrupt_saves_partial_then_resume_matches(
        self, ingested, tmp_path, monkeypatch, capsys
    ):
        ws, corpus_dir = ingested
        corpus = load_corpus(corpus_dir)
        oracle = lexicon_oracle(set())
        reference = run_with_oracle(TrainingSession.start(corpus, 2, 5), oracle)

        calls = {"n": 0}

        def scripted(prompt=""):
            calls["n"] += 1
            if calls["n"] > 3:
                raise KeyboardInterrupt
            return "1"

        monkeypatch.setattr("builtins.input", scripted)
        session_file = ws / "sessions" / "session_m2_seed5.json"
        assert run(["train", "--m", 2, "--seed", 5, "--mode", "terminal", "-w", ws]) == 1
        assert "interrupted" in capsys.readouterr().out
        partial = TrainingSession.resume(corpus, load_session_payload(session_file))
        assert not partial.complete
        assert len(partial.query_log) == 3

        monkeypatch.setattr("builtins.input", lambda prompt="": "1")
        code = run(["train", "--resume", session_file, "--mode", "terminal", "-w", ws])
        assert code == 0
        finished = TrainingSession.resume(corpus, load_session_payload(session_file))
        assert finished.to_payload()["accept"] == reference.to_payload()["accept"]


@pytest.fixture
def trained(ingested, tmp_path, capsys):
    ws, corpus_dir = ingested
    run(["train", "--m", "3", "--seed", "7", "--mode", "oracle",
         "--lexicon", str(tmp_path / "stop.txt"), "-w", str(ws)])
    capsys.readouterr()
    return ws, ws / "sessions" / "session_m3_seed7.json"


class TestReport:
    def test_keywords_table_shape(self, trained, capsys):
        ws, session = trained
        assert run(["report", "--session", session, "--target", "keywords",
                    "--top", 5, "-w", ws]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "rank\tkeyword\tfrequency"
        assert len(lines) <= 6
        assert lines[1].split("\t")[0] == "1"

    def test_top_zero_fails(self, trained, capsys):
        ws, session = trained
        assert run(["report", "--session", session, "--top", 0, "-w", ws]) == 1
        assert "--top must be >= 1" in capsys.readouterr().err

    def test_incomplete_session_fails(self, ingested, capsys):
        ws, corpus_dir = ingested
        corpus = load_corpus(corpus_dir)
        partial = TrainingSession.start(corpus, 2, 5)
        partial.classify(partial.next_query().word, Decision.ACCEPT)
        path = ws / "sessions" / "partial.json"
        save_session(partial, path)
        assert run(["report", "--session", path, "-w", ws]) == 1
        assert "training incomplete" in capsys.readouterr().err

    def test_both_targets_emit_two_sections(self, trained, capsys):
        ws, session = trained
        assert run(["report", "--session", session, "--target", "both", "-w", ws]) == 0
        out = capsys.readouterr().out
        assert out.count("rank\tkeyword\tfrequency") == 2

    def test_series_tsv_and_plot(self, trained, capsys):
        ws, session = trained
        assert run(["report", "--session", session, "--target", "series", "-w", ws]) == 0
        tsv = capsys.readouterr().out
        assert tsv.splitlines()[0] == "position\ttokens_seen\tqueries_asked\tpercentage"
        assert len(tsv.splitlines()) == 4  # header + one point per training abstract

        assert run(["report", "--session", session, "--target", "series",
                    "--format", "plot", "-w", ws]) == 0
        plot = capsys.readouterr().out
        assert plot.splitlines()[0].startswith("0 ")

    def test_byte_identical_runs(self, trained, tmp_path):
        ws, session = trained
        out1, out2 = tmp_path / "r1.tsv", tmp_path / "r2.tsv"
        run(["report", "--session", session, "--target", "both", "--out", out1, "-w", ws])
        run(["report", "--session", session, "--target", "both", "--out", out2, "-w", ws])
        assert out1.read_bytes() == out2.read_bytes()

    def test_include_zero_expands_combo_table(self, trained, capsys):
        ws, session = trained
        run(["report", "--session", session, "--target", "combos", "--top", 10_000,
             "-w", ws])
        plain = len(capsys.readouterr().out.splitlines())
        run(["report", "--session", session, "--target", "combos", "--top", 10_000,
             "--include-zero", "-w", ws])
        with_zero = len(capsys.readouterr().out.splitlines())
        assert with_zero > plain


class TestSweep:
    def test_single_m_gives_unit_matrix(self, trained, tmp_path, capsys):
        ws, _ = trained
        assert run(["sweep", "--m", "2", "--k", 5, "--seed", 1,
                    "--lexicon", tmp_path / "stop.txt", "-w", ws]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["m1\tm2\tkeyword_overlap\tcombo_overlap", "2\t2\t1.0\t1.0"]

    def test_repeated_m_same_seed_is_one(self, trained, tmp_path, capsys):
        ws, _ = trained
        run(["sweep", "--m", "3,3", "--k", 5, "--seed", 9,
             "--lexicon", tmp_path / "stop.txt", "-w", ws])
        rows = capsys.readouterr().out.splitlines()[1:]
        assert all(row.endswith("1.0\t1.0") for row in rows)

    def test_m_above_n_fails(self, trained, tmp_path, capsys):
        ws, _ = trained
        assert run(["sweep", "--m", "2,999", "--k", 5, "--seed", 1,
                    "--lexicon", tmp_path / "stop.txt", "-w", ws]) == 1
        assert "must be in [1, 4]" in capsys.readouterr().err

    def test_bad_m_list_fails(self, trained, tmp_path, capsys):
        ws, _ = trained
        assert run(["sweep", "--m", "2,x", "--k", 5, "--seed", 1,
                    "--lexicon", tmp_path / "stop.txt", "-w", ws]) == 1
        assert "comma-separated integers" in capsys.readouterr().err
