import io
import json
import logging

import pytest

from src.cli.main import main
from src.core.core import __version__
from src.core.exceptions import ConfigurationError, InvariantViolationError
from src.jobs import JOBS, CoeffsJob
from src.jobs.selftest import SELFTEST_MAP, list_checks, select_checks


CASCADE = {
    "m": 2, "kind": "cascade", "degree": 4,
    "nodes": [
        {"series": {"builtin": "polynomial", "terms": [{"word": "x1 x1", "coeff": "1"}]}},
        {"series": {"builtin": "polynomial", "terms": [{"word": "x1", "coeff": "1"}]}},
    ],
}

FEEDBACK = {
    "m": 1, "kind": "additive", "degree": 3, "M": [["1"]],
    "nodes": [{"series": {"terms": [
        {"word": "", "coeff": "2"},
        {"word": "x1", "coeff": "1/2"},
        {"word": "x0 x1", "coeff": "-1"},
    ]}}],
}


@pytest.fixture
def write_doc(tmp_path):
    def factory(doc, name="rede.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)
    return factory


def _json_rows(text):
    payload = json.loads(text)
    assert payload["version"] == __version__
    return payload["rows"]


# =================================================================
# coeffs / compose
# =================================================================

def test_coeffs_text_lists_nonzero_coefficients(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(CASCADE)]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == f"# cfnet {__version__}"
    assert len(lines) == 4
    assert "x0 x1 x0 x1" in out and "x0 x0 x1 x1" in out


def test_coeffs_json_keeps_zero_rows(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(CASCADE), "--output", "json"]) == 0
    rows = _json_rows(capsys.readouterr().out)
    assert len(rows) == 31
    assert rows[0] == {"output": 1, "word": "", "coeff": "0"}
    by_word = {row["word"]: row["coeff"] for row in rows}
    assert by_word["x0 x0 x1 x1"] == "2"
    assert by_word["x0 x1 x0 x1"] == "1"


def test_coeffs_csv_has_version_header(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(FEEDBACK), "--output", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("# cfnet")
    assert lines[1] == "output,word,coeff"
    assert lines[2] == "1,,2"


def test_coeffs_is_deterministic(write_doc, capsys):
    path = write_doc(FEEDBACK)
    main(["coeffs", "--input", path, "--output", "json"])
    first = capsys.readouterr().out
    main(["coeffs", "--input", path, "--output", "json"])
    assert capsys.readouterr().out == first


def test_coeffs_rows_reimport_as_polynomial_terms(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(FEEDBACK), "--output", "json"]) == 0
    rows = _json_rows(capsys.readouterr().out)
    terms = [{"word": row["word"], "coeff": row["coeff"]} for row in rows if row["coeff"] != "0"]
    open_loop = {"m": 1, "kind": "additive", "degree": 3, "M": [["0"]],
                 "nodes": [{"series": {"builtin": "polynomial", "terms": terms}}]}
    assert main(["coeffs", "--input", write_doc(open_loop, "d.json"), "--output", "json"]) == 0
    assert _json_rows(capsys.readouterr().out) == rows


def test_degree_flag_overrides_document(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(CASCADE), "--degree", "2", "--output", "json"]) == 0
    rows = _json_rows(capsys.readouterr().out)
    assert len(rows) == 7
    assert all(row["coeff"] == "0" for row in rows)


def test_coeffs_trace_shows_derivative_chain(write_doc, capsys):
    assert main(["coeffs", "--input", write_doc(CASCADE), "--trace", "x0 x0 x1 x1", "--output", "json"]) == 0
    rows = _json_rows(capsys.readouterr().out)
    assert [row["functional"] for row in rows] == [
        "1 ⊗ x1x1", "x1 ⊗ x1", "2*x1x1 ⊗ 1", "2*x1 ⊗ 1", "2*1 ⊗ 1",
    ]
    assert [row["letter"] for row in rows] == ["", "x0", "x0", "x1", "x1"]
    assert rows[-1]["value"] == "2"


def test_compose_command(write_doc, capsys):
    assert main(["compose", "--input", write_doc(CASCADE), "--output", "json"]) == 0
    rows = {row["word"]: row["coeff"] for row in _json_rows(capsys.readouterr().out)}
    assert rows["x0 x0 x1 x1"] == "2"
    assert sum(1 for value in rows.values() if value != "0") == 2


def test_compose_needs_cascade_document(write_doc, capsys):
    assert main(["compose", "--input", write_doc(FEEDBACK)]) == 1
    assert "cascade" in capsys.readouterr().err


# =================================================================
# simulate / verify
# =================================================================

def test_simulate_emits_trajectories(write_doc, capsys):
    args = ["simulate", "--input", write_doc(FEEDBACK), "--T", "0.1", "--v", "0.1", "--steps", "10",
            "--output", "csv"]
    assert main(args) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1] == "t,y_1"
    assert len(lines) == 2 + 11
    assert lines[2] == "0.0,2.0"


def test_verify_emits_error_table(write_doc, capsys):
    args = ["verify", "--input", write_doc(FEEDBACK), "--T", "0.2", "--v", "0.1", "--Ns", "1,3",
            "--output", "json"]
    assert main(args) == 0
    rows = _json_rows(capsys.readouterr().out)
    assert [row["N"] for row in rows] == [1, 3]
    assert rows[1]["error"] < rows[0]["error"]


def test_cascade_takes_a_single_input_value(write_doc, capsys):
    path = write_doc(CASCADE)
    assert main(["simulate", "--input", path, "--v", "0.1,0.2"]) == 1
    assert main(["simulate", "--input", path, "--v", "0.1", "--steps", "5", "--output", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "t,y_1,y_2"


# =================================================================
# Códigos de saída
# =================================================================

def test_zero_steps_is_an_input_error(write_doc):
    assert main(["simulate", "--input", write_doc(FEEDBACK), "--steps", "0"]) == 1


def test_missing_input_file_is_an_input_error(tmp_path, capsys):
    assert main(["coeffs", "--input", str(tmp_path / "nada.json")]) == 1
    assert "cfnet: error" in capsys.readouterr().err


def test_invalid_document_is_an_input_error(write_doc, capsys):
    doc = dict(FEEDBACK, kind="feedback")
    assert main(["coeffs", "--input", write_doc(doc)]) == 1
    assert "kind: expected one of" in capsys.readouterr().err


def test_negative_degree_is_an_input_error(write_doc):
    assert main(["coeffs", "--input", write_doc(FEEDBACK), "--degree", "-1"]) == 1


def test_unknown_output_index_is_an_input_error(write_doc):
    assert main(["coeffs", "--input", write_doc(FEEDBACK), "--outputs", "2"]) == 1


def test_unexpected_failure_is_an_internal_error(write_doc, monkeypatch):
    def broken(self, spec, context):
        raise RuntimeError("boom")

    monkeypatch.setattr(CoeffsJob, "transform", broken)
    assert main(["coeffs", "--input", write_doc(FEEDBACK)]) == 2


# =================================================================
# selftest
# =================================================================

def test_selftest_list(capsys):
    assert main(["selftest", "--list"]) == 0
    out = capsys.readouterr().out
    for key in SELFTEST_MAP:
        assert key in out
    assert len(list_checks()) == len(SELFTEST_MAP)


def test_selftest_selected_checks_pass(capsys):
    assert main(["selftest", "--checks", "composition", "lie_chain", "multiplicative_loop",
                 "--output", "json"]) == 0
    rows = _json_rows(capsys.readouterr().out)
    assert [row["check"] for row in rows] == ["composition", "lie_chain", "multiplicative_loop"]
    assert {row["status"] for row in rows} == {"PASS"}


def test_selftest_failure_exits_with_two(monkeypatch, capsys):
    def failing():
        raise AssertionError("forced")

    monkeypatch.setitem(SELFTEST_MAP["trivial"], "func", failing)
    assert main(["selftest", "--checks", "trivial", "--output", "json"]) == 2
    rows = _json_rows(capsys.readouterr().out)
    assert rows[0]["status"] == "FAIL"
    assert rows[0]["detail"] == "forced"


def test_unknown_selftest_check_is_rejected():
    with pytest.raises(ConfigurationError):
        select_checks(["nope"])
    assert main(["selftest", "--checks", "nope"]) == 1


def test_every_check_passes_in_process():
    stream = io.StringIO()
    table = JOBS["selftest"]().run(output_format="text", stream=stream)
    assert table["status"].tolist() == ["PASS"] * len(SELFTEST_MAP)
    assert stream.getvalue().startswith(f"# cfnet {__version__}")


# =================================================================
# Logging de execução
# =================================================================

def test_job_run_logs_elapsed_time(caplog):
    caplog.set_level(logging.INFO, logger="cfnet")
    CoeffsJob().run(output_format="json", stream=io.StringIO(), input=json.dumps(FEEDBACK))
    assert any(r.name == "cfnet" and r.getMessage().startswith("run concluída em") for r in caplog.records)


def test_failed_job_run_logs_failure(caplog, monkeypatch):
    def broken(self, spec, context):
        raise RuntimeError("boom")

    monkeypatch.setattr(CoeffsJob, "transform", broken)
    caplog.set_level(logging.INFO, logger="cfnet")
    with pytest.raises(InvariantViolationError):
        CoeffsJob().run(output_format="json", stream=io.StringIO(), input=json.dumps(FEEDBACK))
    assert any(r.levelno == logging.ERROR and r.getMessage().startswith("run falhou após")
               for r in caplog.records)
