"""Tests for the degcx command line."""
import json
from pathlib import Path

import pytest

from cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def write_ideal(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_degree_complex_direct(capsys, write_ideal):
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    code, out = run(capsys, "degree-complex", edge, "--gamma=-1,0")
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 2, "kind": "irrelevant", "facets": []}
    code, out = run(capsys, "degree-complex", edge, "--gamma", "0,0")
    assert json.loads(out)["facets"] == [[1], [2]]


def test_degree_complex_unit_is_void(capsys, write_ideal):
    unit = write_ideal("unit.txt", "n=3; 1")
    code, out = run(capsys, "degree-complex", unit, "--gamma", "0,0,0")
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "void"


def test_degree_complex_power_of_sum(capsys, write_ideal):
    example = json.loads((FIXTURES / "worked_example.json").read_text())
    i_file = write_ideal("i.txt", example["I"])
    j_file = write_ideal("j.txt", example["J"])
    gamma = ",".join(map(str, example["gamma"]))
    args = ["degree-complex", i_file, j_file, "--formula", "power-of-sum", "--split", "4", "--s", "3", "--gamma", gamma]
    code, out = run(capsys, *args)
    assert code == EXIT_OK
    assert json.loads(out)["facets"] == example["complexes"]["(I+J)^3"]

    code, out = run(capsys, *args, "--m2")
    expected = [
        line
        for line in (FIXTURES / "macaulay2" / "worked_example.m2").read_text().splitlines()
        if line and not line.startswith("--")
    ]
    assert out.splitlines() == expected


def test_degree_complex_direct_symbolic_power(capsys, write_ideal):
    triangle = write_ideal("triangle.txt", "n=3; x1*x2, x2*x3, x1*x3")
    code, out = run(capsys, "degree-complex", triangle, "--gamma", "1,1,1", "--s", "2", "--mode", "symbolic")
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "void"
    code, out = run(capsys, "degree-complex", triangle, "--gamma", "1,1,1", "--s", "2")
    assert json.loads(out)["kind"] != "void"


def test_degree_complex_usage_errors(capsys, write_ideal):
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    assert main(["degree-complex", edge, "--formula", "sum", "--gamma", "0,0"]) == EXIT_USAGE
    assert main(["degree-complex", edge, edge, "--formula", "product", "--gamma", "0,0"]) == EXIT_USAGE
    assert main(["degree-complex", edge, "--gamma", "0,0,0"]) == EXIT_USAGE
    bad = write_ideal("bad.txt", "n=2; x1*y2")
    assert main(["degree-complex", bad, "--gamma", "0,0"]) == EXIT_USAGE
    assert main(["degree-complex", str(Path(edge).parent / "missing.txt"), "--gamma", "0,0"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE


def test_cohomology_scan_reg_depth(capsys, write_ideal):
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    code, out = run(capsys, "cohomology", edge, "--scan")
    assert code == EXIT_OK
    assert len(json.loads(out)) == 3
    code, out = run(capsys, "cohomology", edge, "--gamma", "0,0")
    assert json.loads(out) == [{"p": 1, "gamma": [0, 0], "dim": 1}]
    code, out = run(capsys, "cohomology", edge, "--gamma", "0,0", "--p", "0")
    assert json.loads(out) == [{"p": 0, "gamma": [0, 0], "dim": 0}]
    code, out = run(capsys, "reg", edge)
    assert json.loads(out) == {"reg": 1, "p": 1, "gamma": [0, 0]}
    code, out = run(capsys, "depth", edge)
    assert json.loads(out)["depth"] == 1
    assert main(["cohomology", edge]) == EXIT_USAGE


def test_reg_of_symbolic_power(capsys, write_ideal):
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    code, out = run(capsys, "reg", edge, "--symbolic", "2")
    assert json.loads(out)["reg"] == 3


def test_scan_guard_exit(capsys, write_ideal, monkeypatch):
    monkeypatch.setenv("DEGCX_MAX_LATTICE", "2")
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    assert main(["cohomology", edge, "--scan"]) == EXIT_USAGE


def test_unit_ideal_reg_is_an_error(write_ideal):
    assert main(["reg", write_ideal("unit.txt", "n=2; 1")]) == EXIT_USAGE


def test_symbolic_power_and_primes(capsys, write_ideal):
    triangle = write_ideal("triangle.txt", "n=3; x1*x2, x2*x3, x1*x3")
    code, out = run(capsys, "symbolic-power", triangle, "--s", "2")
    assert code == EXIT_OK
    assert json.loads(out) == {"ideal": "n=3; x2^2*x3^2, x1*x2*x3, x1^2*x3^2, x1^2*x2^2"}
    code, out = run(capsys, "minimal-primes", triangle)
    assert json.loads(out) == [[1, 2], [1, 3], [2, 3]]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == EXIT_OK
    listing = json.loads(out)
    assert listing["3.9"]["alias"] == "power-of-sum"
    assert {"3.5", "3.12", "4.10", "4.12", "5.2"} <= set(listing)
    code, out = run(capsys, "verify", "worked-example")
    assert code == EXIT_OK
    assert json.loads(out)["failures"] == []
    code, out = run(capsys, "verify", "3.9", "--seed", "7", "--instances", "3")
    assert code == EXIT_OK
    assert json.loads(out)["theorem"] == "3.9"
    assert json.loads(out)["seed"] == 7
    code, out = run(capsys, "verify", "power-of-sum", "--instances", "2", "--max-n", "5")
    assert json.loads(out)["theorem"] == "3.9"
    assert main(["verify", "bogus"]) == EXIT_USAGE
    assert main(["verify"]) == EXIT_USAGE


def test_verify_failure_exit(capsys, monkeypatch):
    from services import verifier as harness

    def broken(self, report, count):
        report.failures.append({"instance": "forced"})

    monkeypatch.setattr(harness.CHECKS["worked-example"], "runner", broken)
    code, out = run(capsys, "verify", "worked-example")
    assert code == EXIT_FAILURE
    assert json.loads(out)["failures"] == [{"instance": "forced"}]


def test_settings_flag(capsys, tmp_path, write_ideal, monkeypatch):
    monkeypatch.setenv("DEGCX_MAX_LATTICE", "50000")
    settings = tmp_path / "local.settings.json"
    settings.write_text(json.dumps({"Values": {"DEGCX_MAX_LATTICE": 2}}))
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    assert main(["--settings", str(settings), "cohomology", edge, "--scan"]) == EXIT_USAGE


def test_verify_regularity_at_full_size(capsys, monkeypatch):
    monkeypatch.setenv("DEGCX_MAX_LATTICE", "2000")
    code, out = run(capsys, "verify", "4.12", "--max-n", "8", "--max-s", "3", "--instances", "2")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["theorem"] == "4.12"
    assert report["notes"]["desk_example"] == [1, 3, 5]


def test_spaced_negative_gamma(capsys, write_ideal):
    edge = write_ideal("edge.txt", "n=2; x1*x2")
    code, out = run(capsys, "degree-complex", edge, "--gamma", "-1,0")
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "irrelevant"
    code, out = run(capsys, "cohomology", edge, "--gamma", "-1,0", "--p", "1")
    assert json.loads(out) == [{"p": 1, "gamma": [-1, 0], "dim": 1}]
    assert main(["degree-complex", edge, "--gamma", "--formula", "direct"]) == EXIT_USAGE
