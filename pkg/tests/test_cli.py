import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from roughlat import document
from roughlat.cli import main
from roughlat.frame import GCFrame

CORPUS = Path(__file__).parent / "corpus"


@pytest.fixture
def algebra(tmp_path):
    path = tmp_path / "alg.json"
    assert main(["gen", "--kind", "algebra", "--size", "3", "--seed", "4", "--signature", "HBGC", "-o", str(path)]) == 0
    return path


@pytest.fixture
def frame_doc(tmp_path):
    path = tmp_path / "frame.json"
    path.write_text(json.dumps({
        "type": "frame", "elements": ["a", "b", "c"],
        "order": [["a", "a"], ["b", "b"], ["c", "c"]],
        "relation": [["a", "b"], ["b", "c"], ["a", "c"]],
    }))
    return path


def test_gen_is_deterministic(capsys):
    main(["gen", "--kind", "frame", "--size", "5", "--seed", "9"])
    first = capsys.readouterr().out
    main(["gen", "--kind", "frame", "--size", "5", "--seed", "9"])
    assert capsys.readouterr().out == first
    assert isinstance(document.parse(first), GCFrame)


def test_gen_bad_size(capsys):
    assert main(["gen", "--kind", "lattice", "--size", "50"]) == 2
    assert "error:" in capsys.readouterr().err


def test_validate(algebra, capsys):
    assert main(["validate", str(algebra)]) == 0
    out = capsys.readouterr().out
    assert "GaloisPair" in out and out.strip().endswith("ok")
    assert main(["validate", str(algebra), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.json")]) == 2


def test_canonical_and_complex(algebra, tmp_path, capsys):
    out = tmp_path / "can.json"
    assert main(["canonical", str(algebra), "-o", str(out)]) == 0
    fr = document.load(out)
    assert all(name.startswith("^") for name in fr.carrier)
    assert main(["complex", str(out), "--signature", "HBGC"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["type"] == "algebra"
    assert {"join", "meet", "implication", "coimplication"} <= set(rec)
    # the complex algebra of the canonical frame is isomorphic to the original
    assert len(rec["elements"]) == len(document.load(algebra).base.carrier)


def test_complex_without_arrows(frame_doc, capsys):
    assert main(["complex", str(frame_doc)]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert "implication" not in rec and len(rec["elements"]) == 8


@pytest.mark.parametrize("method", ["canonical", "spatial"])
def test_represent(algebra, method, capsys):
    assert main(["represent", str(algebra), "--method", method]) == 0
    assert capsys.readouterr().out.strip().endswith("ok")


def test_approx(frame_doc, capsys):
    assert main(["approx", str(frame_doc), "--set", "c", "--op", "upper"]) == 0
    assert capsys.readouterr().out.strip() == "a,b"
    assert main(["approx", str(frame_doc), "--set", "c", "--op", "lower"]) == 0
    assert capsys.readouterr().out.strip() == "a"
    assert main(["approx", str(frame_doc), "--set", "zz", "--op", "lower"]) == 2


def test_check(capsys):
    path = str(CORPUS / "meet_counterexample.json")
    assert main(["check", path, "--identity", "f(x | y) = f(x) | f(y)"]) == 0
    assert capsys.readouterr().out.startswith("Valid")
    assert main(["check", path, "--identity", "f(x & y) = f(x) & f(y)", "--json"]) == 1
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["assignment"] == {"x": "{p0}", "y": "{p1}"}
    assert main(["check", path, "--identity", "x -> y <- z = x"]) == 2


def test_suite(capsys):
    assert main(["suite", "galois-laws", "--count", "10", "--size", "3", "--json"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary == {"suite": "galois-laws", "count": 10, "passed": 10, "failed": 0, "first_failure": None}


def test_suite_parallel_matches_serial(capsys):
    main(["suite", "star-equivalence", "--count", "12", "--size", "4", "--json"])
    serial = capsys.readouterr().out
    main(["suite", "star-equivalence", "--count", "12", "--size", "4", "--json", "--jobs", "2"])
    assert capsys.readouterr().out == serial


def test_console_script(algebra):
    exe = shutil.which("roughlat")
    cmd = [exe] if exe else [sys.executable, "-m", "roughlat.cli"]
    res = subprocess.run(cmd + ["validate", str(algebra)], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr


def test_suite_failure_reports_witness(monkeypatch, capsys):
    from roughlat import suites

    def always_fails(spec):
        inst = suites.gen_algebra(spec)
        return False, "planted law", "planted witness", inst

    monkeypatch.setitem(suites.SUITES, "galois-laws", ("algebra", always_fails))
    assert main(["suite", "galois-laws", "--count", "3", "--size", "2"]) == 1
    out = capsys.readouterr().out
    assert "0/3 passed" in out and "planted law" in out
