import json
from fractions import Fraction

import pytest

from relosc.cli import main, parse_matrix
from relosc.errors import ParseError


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def free5(tmp_path):
    return write(tmp_path, "f5.json", {"N": 5, "a": [-1, -1, -1], "b": [0, 0, 0, 0]})


@pytest.fixture
def one(tmp_path):
    return write(tmp_path, "one.json", {"N": 2, "a": [], "b": ["1/1"]})


@pytest.fixture
def neg(tmp_path):
    return write(tmp_path, "neg.json", {"N": 2, "a": [], "b": ["-1/1"]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_matrix_float_mode(free5):
    h, exact = parse_matrix(free5)
    assert h.N == 5 and not exact


def test_parse_matrix_exact_mode(one):
    h, exact = parse_matrix(one)
    assert exact
    assert h.b == (Fraction(1),)


def test_parse_matrix_errors(tmp_path):
    with pytest.raises(ParseError):
        parse_matrix(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    with pytest.raises(ParseError):
        parse_matrix(str(bad))
    bad.write_text('{"N": 2, "a": []}')
    with pytest.raises(ParseError):
        parse_matrix(str(bad))
    bad.write_text('{"N": 2, "a": [], "b": ["1/0"]}')
    with pytest.raises(ParseError):
        parse_matrix(str(bad))


def test_spectrum_command(capsys, free5):
    code, out, err = run(capsys, "spectrum", free5)
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 4
    assert len(doc["eigenvalues"]) == 4
    assert "eigenvalues" in err


def test_count_command_agrees(capsys, free5):
    code, out, _ = run(capsys, "count", free5, "--lambda", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 2 and doc["oracle"] == 2 and doc["agree"] is True


def test_count_exact_mode_inferred(capsys, one):
    code, out, _ = run(capsys, "count", one, "--lambda", "1/2")
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "exact"
    assert doc["lambda"] == "1/2"
    assert doc["count"] == 0


def test_count_margin_guard_reports_null(capsys, one):
    # lambda within 1e-6 of the eigenvalue 1: the oracle abstains
    code, out, _ = run(capsys, "count", one, "--lambda", "1.0000001")
    assert code == 0
    doc = json.loads(out)
    assert doc["oracle"] is None and doc["agree"] is None


def test_relative_command(capsys, one, neg):
    code, out, _ = run(
        capsys, "relative", one, neg, "--lambda0", "0", "--lambda1", "0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["relative_count"] == 1
    assert doc["pairings_agree"] is True
    assert doc["oracle"] == 1 and doc["agree"] is True


def test_flow_command_json(capsys, one, neg):
    code, out, _ = run(capsys, "flow", one, neg, "--steps", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["path"] == "linear"
    assert doc["grid"] == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert [row[0] for row in doc["branches"]] == pytest.approx([1, 0.5, 0, -0.5, -1])


def test_flow_command_csv_and_two_phase(capsys, one, neg):
    code, out, _ = run(capsys, "flow", one, neg, "--steps", "2", "--two-phase", "--csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert [float(r[1]) for r in rows] == pytest.approx([1.0, -1.0, -1.0])


def test_invalid_matrix_exits_2(capsys, tmp_path):
    bad = write(tmp_path, "bad.json", {"N": 3, "a": [1], "b": [0, 0]})
    code, _, err = run(capsys, "count", bad, "--lambda", "0")
    assert code == 2
    assert "relosc:" in err


def test_bad_usage_exits_2(capsys):
    code, _, _ = run(capsys, "count")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_bad_steps_exits_2(capsys, one, neg):
    code, _, _ = run(capsys, "flow", one, neg, "--steps", "0")
    assert code == 2


def test_mode_override(capsys, one, monkeypatch):
    monkeypatch.setenv("RELOSC_MODE", "float")
    code, out, _ = run(capsys, "count", one, "--lambda", "1/2")
    assert code == 0
    assert json.loads(out)["mode"] == "float"
    monkeypatch.setenv("RELOSC_MODE", "bogus")
    assert run(capsys, "count", one, "--lambda", "0")[0] == 2


def test_verify_command_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--suite", "thm11", "--trials", "5", "--seed", "3")
    code2, out2, _ = run(capsys, "verify", "--suite", "thm11", "--trials", "5", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["ok"] is True
    assert doc["suites"]["thm11"]["failures"] == []
