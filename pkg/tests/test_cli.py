import json
import subprocess
import sys
from pathlib import Path

import pytest

from ringlab import cli, suites
from ringlab.library import catalog_names
from ringlab.report import Report, emit_report

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsysbinary, *argv):
    code = cli.main(list(argv))
    out, err = capsysbinary.readouterr()
    return code, out, err.decode()


def run_json(capsysbinary, *argv):
    code, out, err = run(capsysbinary, *argv, "--format", "json")
    return code, json.loads(out)


@pytest.mark.parametrize("argv, code", [
    (("check", str(FIXTURES / "z4_example.ring")), 0),
    (("radical", "catalog:t2_m2"), 0),
    (("check", str(FIXTURES / "unclosed_call.ring")), 2),
    (("check", str(FIXTURES / "unknown_name.ring")), 2),
    (("check", str(FIXTURES / "missing_equals.ring")), 2),
    (("check", str(FIXTURES / "corrupted_table.ring")), 2),
    (("check", str(FIXTURES / "no_such_file.ring")), 2),
    (("check", "catalog:no_such_entry"), 2),
    (("verify-theorems", "catalog:z4_2", "--suite", "bogus"), 2),
    (("classify", "catalog:z6_z6", "--phi", "nope"), 2),
    (("classify", "catalog:t2_m2"), 2),
    (("radical", "catalog:t2_m2", "--object", "Q"), 2),
    (("check", "catalog:t2_m2", "--order-cap", "8"), 3),
    (("classify", "catalog:z6_z6", "--search-budget", "1"), 3),
])
def test_exit_codes(capsysbinary, argv, code):
    assert run(capsysbinary, *argv)[0] == code


def test_error_message_names_position(capsysbinary):
    code, _, err = run(capsysbinary, "check", str(FIXTURES / "unclosed_call.ring"))
    assert code == 2 and "SpecSyntaxError" in err and "1" in err and "12" in err


def test_discrepancy_exits_one(capsysbinary, monkeypatch):
    def broken(rec, E):
        rec.check("seeded", True, False, ())

    monkeypatch.setitem(suites.SUITES, "rad", broken)
    code, report = run_json(capsysbinary, "verify-theorems", "catalog:z4_2", "--suite", "rad")
    assert code == 1
    (suite,) = report["suites"]
    assert suite["failures"] and suite["failures"][0]["check"] == "seeded"


def test_corrupted_table_report(capsysbinary):
    code, report = run_json(capsysbinary, "check", str(FIXTURES / "corrupted_table.ring"))
    assert code == 2
    (suite,) = report["suites"]
    assert suite["name"] == "axioms" and len(suite["failures"]) == 3
    assert all(len(f["witness"]) == 3 and f["instance"] == "R" for f in suite["failures"])


def test_t2_m2_radical(capsysbinary):
    code, report = run_json(capsysbinary, "radical", "catalog:t2_m2")
    assert code == 0
    (obj,) = report["objects"]
    assert obj["order"] == 128 and len(obj["radical"]) == 2
    assert obj["criterion_agrees"] is True


def test_z6_primes_forms(capsysbinary):
    code, report = run_json(capsysbinary, "ideals", "catalog:z6_z6", "--prime", "--phi", "auto")
    assert code == 0
    text = json.dumps(report)
    assert text.count('"SUM"') == 2 and text.count('"GRAPH"') == 2


def test_empty_suite_shape():
    report = Report("verify-theorems", "<memory>", suites=[suites.run_suite("psi", [])])
    assert json.loads(emit_report(report, "json"))["suites"] == [{"name": "psi", "cases": 0, "failures": []}]
    assert b"suite psi: PASS (0 cases, 0 failures)" in emit_report(report)


def test_verify_single_suite(capsysbinary):
    code, report = run_json(capsysbinary, "verify-theorems", "catalog:z4_2", "--suite", "rad")
    assert code == 0 and [s["name"] for s in report["suites"]] == ["rad"]
    assert report["suites"][0]["cases"] > 0


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_json_is_byte_identical(capsysbinary, name):
    first = run(capsysbinary, "radical", f"catalog:{name}", "--format", "json")
    second = run(capsysbinary, "radical", f"catalog:{name}", "--format", "json")
    assert first[0] == 0 and first == second


@pytest.mark.parametrize("golden, argv", [
    ("golden_radical_t2_m2.json", ("radical", "catalog:t2_m2")),
    ("golden_primes_z6_z6.json", ("ideals", "catalog:z6_z6", "--prime", "--phi", "auto")),
])
def test_golden(capsysbinary, golden, argv):
    code, out, _ = run(capsysbinary, *argv, "--format", "json")
    assert code == 0 and out == (FIXTURES / golden).read_bytes()


def test_text_output_is_line_oriented(capsysbinary):
    code, out, _ = run(capsysbinary, "verify-theorems", "catalog:z4_2", "--suite", "psi")
    lines = out.decode().splitlines()
    assert lines[0] == "command: verify-theorems" and lines[1] == "source: catalog:z4_2"
    assert any(l.startswith("suite psi: PASS") for l in lines)


def test_stdin_and_subprocess():
    text = (FIXTURES / "z4_example.ring").read_text()
    proc = subprocess.run([sys.executable, "-m", "ringlab.cli", "nilradical", "-", "--format", "json"],
                          input=text.encode(), capture_output=True)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["source"] == "<stdin>"


def test_timing_flag(capsysbinary):
    code, report = run_json(capsysbinary, "check", "catalog:z4_2", "--timing")
    assert code == 0 and report["elapsed_ms"] >= 0
    _, report = run_json(capsysbinary, "check", "catalog:z4_2")
    assert report["elapsed_ms"] is None
