import io
import json

import pytest

from momentseq.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, parse_range, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if text and "--format" not in argv else text)


def test_envelope_fields():
    code, rep = call("gen", "--seq", "euler", "--count", "6")
    assert code == EXIT_OK
    assert {"tool", "version", "command", "parameters", "timestamp", "status", "results"} <= set(rep)
    assert rep["results"]["terms"] == ["1", "1", "1", "2", "5", "16"]


def test_hankel_determinant():
    code, rep = call("hankel", "--seq", "springer", "--shift", "1", "--size", "3")
    assert code == EXIT_OK and rep["results"]["determinant"] == "-96"


def test_violation_exit_code():
    code, rep = call("hankel", "--seq", "euler", "--psd", "--size", "5")
    assert code == EXIT_VIOLATION and rep["status"] == "violation"
    assert rep["results"]["witness"]["det"] == "-1"


def test_extract_from_values():
    code, rep = call("cf", "extract", "--values", "1,1,2,5,14,42,132", "--terms", "6")
    assert code == EXIT_OK and rep["results"]["alphas"] == ["1"] * 6


def test_invert_contraction_obstruction():
    code, rep = call("cf", "invert-contraction", "--family", "euler-shifted", "--depth", "6")
    assert rep["results"]["status"] == "obstruction"
    assert rep["results"]["obstruction_index"] == 6


def test_shift_command():
    code, rep = call("cf", "shift", "--alpha0", "1", "--gammas", "0,0,0", "--betas=-4,-16", "--c", "1")
    assert code == EXIT_OK and rep["results"]["gammas"] == ["1", "1", "1"]


def test_enumerate_and_scan():
    code, rep = call("enumerate", "snakes", "--n", "0..5")
    assert [r["count"] for r in rep["results"]["rows"]] == [1, 1, 3, 11, 57, 361]
    code, rep = call("--jobs", "1", "scan", "logconvexity", "--max", "20")
    assert code == EXIT_OK and rep["results"]["status"] == "all-hold"


def test_verify_lerch():
    code, rep = call("verify", "lerch", "--n", "0..2")
    assert code == EXIT_OK and len(rep["results"]["records"]) == 6


def test_text_and_csv_formats():
    code, text = call("--format", "text", "gen", "--seq", "tangent", "--count", "3")
    assert text.startswith("status: pass")
    code, text = call("--format", "csv", "enumerate", "alternating", "--n", "0..3")
    assert text.splitlines()[0] == "count,n"


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run(["gen", "--seq", "nope"])
    assert exc.value.code == EXIT_USAGE
    assert run(["cf", "extract", "--seq", "euler", "--terms", "5"], stdout=io.StringIO()) == EXIT_USAGE
    assert run(["gen"], stdout=io.StringIO()) == EXIT_USAGE
    assert run([], stdout=io.StringIO()) == EXIT_USAGE


def test_parse_range():
    assert parse_range("0..3") == [0, 1, 2, 3]
    assert parse_range("2,5") == [2, 5]
