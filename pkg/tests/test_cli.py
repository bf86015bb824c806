"""Command line driver: reports, fixtures, determinism and exit codes."""
from __future__ import annotations

import json
from pathlib import Path

import pytest

from monoidkit.cli import canonical_json, emit_fixture, main, run

FIXTURES = Path(__file__).parent / "fixtures"
CONFIGS = sorted(FIXTURES.glob("*.config.json"))


def result(report, task):
    return next(t["result"] for t in report.to_json()["tasks"] if t["task"] == task)


def write_config(tmp_path, config):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(config))
    return str(path)


def test_sym2_monoid_report():
    rep = run({"weights": {"builtin": "sym", "n": 2}, "tasks": [{"task": "monoid"}]})
    assert result(rep, "monoid")["ideal"] == "XY-Z^2"


def test_sym2_resolve_report():
    rep = run({"weights": {"builtin": "sym", "n": 2}, "tasks": [{"task": "resolve"}]})
    res = result(rep, "resolve")
    # cocharacter coordinates on the cover lattice are (0,1),(1,1),(2,1), the transposes of the character-side labels (1,0),(1,1),(1,2)
    assert res["rays"] == [["0", "1"], ["1", "1"], ["2", "1"]]
    assert res["jacobian_exponent"] == "2"


def test_torus_basic_decomposition_report():
    rep = run({"weights": {"builtin": "std", "n": 1},
               "tasks": [{"task": "padic-check", "check": "basic-decomposition", "q": 3}]})
    res = result(rep, "padic-check")
    assert res["f2_coefficients"] == {"0": "3/2"} and res["f1_coefficients"] == {"-1": "1/2"}


def test_satake_half_powers():
    rep = run({"weights": {"builtin": "std", "n": 2}, "tasks": [{"task": "satake", "q": 3, "depth": 1}]})
    (elem,) = [x for x in result(rep, "satake")["elements"] if x["lambda"] == ["1", "0"]]
    assert [(t["mu"], t["q_half_power"], t["coefficient"]) for t in elem["satake"]] == [
        (["0", "1"], "1", "1"), (["1", "0"], "1", "1")]


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda p: p.name)
def test_fixture_regenerates_exactly(cfg, tmp_path):
    report = run(json.loads(cfg.read_text()))
    text = emit_fixture(report, tmp_path / "out.json")
    assert text == cfg.with_name(cfg.name.replace(".config.json", ".report.json")).read_text()


def test_rerun_is_byte_identical(tmp_path):
    cfg = json.loads(CONFIGS[0].read_text())
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    emit_fixture(run(cfg), a)
    emit_fixture(run(cfg), b)
    assert a.read_bytes() == b.read_bytes()


def test_emit_to_bad_path_raises(tmp_path):
    with pytest.raises(OSError):
        emit_fixture(run({"weights": {"builtin": "sym", "n": 1}, "tasks": [{"task": "monoid"}]}),
                     tmp_path / "missing" / "out.json")


def test_failures_are_isolated():
    rep = run({"weights": {"builtin": "sym", "n": 2},
               "tasks": [{"task": "padic-check", "q": 4}, {"task": "monoid"}]})
    statuses = [t["status"] for t in rep.to_json()["tasks"]]
    assert statuses == ["usage-error", "ok"]


def test_canonical_json_sorted():
    assert canonical_json({"b": 1, "a": ["1/2"]}) == '{\n  "a": [\n    "1/2"\n  ],\n  "b": 1\n}\n'


def test_main_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["monoid", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["tasks"][0]["result"]["ideal"] == "XY-Z^2"
    assert main(["padic", "--q", "4"]) == 1
    assert main(["satake", "--depth", "99"]) == 1
    assert main(["run", "--config", str(tmp_path / "nope.json")]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_main_run_with_config(tmp_path, capsys):
    path = write_config(tmp_path, {"weights": {"builtin": "sym", "n": 3},
                                   "tasks": [{"task": "monoid"}, {"task": "cone"}]})
    assert main(["run", "--config", path, "--task", "monoid"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert [t["task"] for t in rep["tasks"]] == ["monoid"]
    assert rep["tasks"][0]["result"]["presentation"]["equations"] == ["X1X4-X2X3=X5^3"]


def test_identity_failure_exit_code(tmp_path, capsys):
    # a degree-0 fit of the Sym^2 diagonal cannot succeed
    path = write_config(tmp_path, {"weights": {"builtin": "sym", "n": 2},
                                   "tasks": [{"task": "partition-table", "depth": 8, "period": 1, "degree": 0}]})
    assert main(["run", "--config", path]) == 2


def test_selftest_subset(capsys):
    assert main(["selftest", "--task", "1,13"]) == 0
    out = capsys.readouterr().out
    assert "criterion  1 PASS" in out and "criterion 13 PASS" in out
