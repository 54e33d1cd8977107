import json
import math
from pathlib import Path

import pytest

from superfg.cli import run
from superfg.report import RunReport, Verdict

DATA = Path(__file__).resolve().parent.parent / "data"


def data(name):
    return str(DATA / name)


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def statuses(report):
    return {v["name"]: v["status"] for v in report["verdicts"]}


def test_mutate_a2_pentagon(capsys):
    code, report = invoke(capsys, "mutate", "--seed", data("a2.json"), "--at", "1", "--times", "5", "--period", "5")
    assert code == 0
    assert report["command"] == "mutate"
    assert report["outputs"]["sequence"] == [1, 2, 1, 2, 1]
    assert report["outputs"]["return_step"] == 5
    assert report["outputs"]["returns_up_to_swap"]
    assert report["outputs"]["a_sequence"] == ["2", "3", "2", "1", "1", "2", "3"]
    assert set(statuses(report).values()) == {"pass"}


def test_mutate_b2_does_not_return_after_five(capsys):
    code, report = invoke(capsys, "mutate", "--seed", data("b2.json"), "--times", "5")
    assert code == 0
    assert not report["outputs"]["returns_up_to_swap"]
    assert statuses(report)["orbit_return"] == "skipped"
    code, report = invoke(capsys, "mutate", "--seed", data("b2.json"), "--times", "5", "--period", "5")
    assert code == 1
    assert statuses(report)["orbit_return"] == "fail"


def test_verify_bracket_seed_file(capsys):
    code, report = invoke(capsys, "verify-bracket", "--seed", data("super_a2.json"))
    assert code == 0
    assert statuses(report) == {
        "bracket_at_1": "pass",
        "horizontal_at_1": "pass",
        "bracket_at_2": "pass",
        "horizontal_at_2": "pass",
    }


def test_verify_bracket_literal_mode_fails(capsys):
    code, report = invoke(capsys, "verify-bracket", "--seed", data("super_a2.json"), "--mode", "paper_literal")
    assert code == 1
    assert statuses(report)["bracket_at_1"] == "fail"
    assert statuses(report)["horizontal_at_1"] == "skipped"


def test_verify_bracket_suite_is_deterministic(capsys):
    code, first = invoke(capsys, "verify-bracket", "--trials", "3", "--rng-seed", "7")
    assert code == 0
    _, second = invoke(capsys, "verify-bracket", "--trials", "3", "--rng-seed", "7")
    assert first["outputs"] == second["outputs"]
    assert first["digest"] == second["digest"]


def test_verify_double(capsys):
    code, report = invoke(capsys, "verify-double", "--seed", data("super_a2.json"), "--trials", "3")
    assert code == 0
    assert 3.5 <= report["outputs"]["convergence_ratio"] <= 4.5
    assert statuses(report)["dirac"] == "pass"


def test_quantum_pentagon(capsys):
    code, report = invoke(capsys, "quantum-pentagon", "--order", "8")
    assert code == 0
    assert statuses(report)["pentagon"] == "pass"


def test_eliminate(capsys):
    code, report = invoke(capsys, "eliminate", "--system", data("vertical.json"))
    assert code == 0
    assert report["outputs"]["variables"] == ["u2", "u3"]
    assert report["outputs"]["genus"] == 0
    assert report["outputs"]["subtraction_free"]


@pytest.mark.parametrize("support", ["0,0;3,0;0,3", data("support.json")])
def test_newton_genus(capsys, support):
    code, report = invoke(capsys, "newton-genus", "--support", support)
    assert code == 0
    assert report["outputs"]["genus"] == 1
    assert report["outputs"]["boundary_count"] == 9


def test_bcfw(capsys):
    code, report = invoke(capsys, "bcfw", "--matrix", data("boundary.json"), "--anchor", "1,2", "--window", "1,2,3")
    assert code == 0
    assert len(report["outputs"]["cofactors"]) == 3
    assert report["outputs"]["non_positive_minors"] == []


def test_hexagon_symmetric_point(capsys):
    code, report = invoke(capsys, "hexagon", "--uvw", "1,1,1")
    assert code == 0
    assert report["outputs"]["total"] == pytest.approx(math.pi ** 4 / 72, rel=1e-9)
    assert report["outputs"]["on_locus"]


def test_hexagon_chart(capsys):
    code, report = invoke(capsys, "hexagon", "--chart", data("chart.json"), "--chen")
    assert code == 0
    assert len(report["outputs"]["chen_period"]) == 2
    assert math.isfinite(report["outputs"]["total"])


def test_gfun(capsys):
    code, report = invoke(capsys, "gfun", "--letters", "2,3", "--depth", "2")
    assert code == 0
    assert statuses(report)["methods_agree"] == "pass"
    code, report = invoke(capsys, "gfun", "--letters", "2")
    assert report["outputs"]["value"][0] == pytest.approx(-math.log(2), abs=1e-10)
    code, report = invoke(capsys, "gfun", "--letters", "3", "--depth", "4")
    assert code == 0
    assert report["outputs"]["value"][0] == pytest.approx(math.log(2 / 3) ** 4 / 24, abs=1e-8)
    assert statuses(report)["methods_agree"] == "skipped"


def test_dual(capsys):
    code, report = invoke(capsys, "dual", "--seed", data("super_a2.json"))
    assert code == 0
    assert report["outputs"]["W"] == [[0, 1]]
    assert report["outputs"]["exchange"]["epsilon"] == [[0, 1], [-1, 0]]


def test_usage_errors(capsys, tmp_path):
    assert run([]) == 2
    assert run(["bogus"]) == 2
    assert run(["hexagon", "--uvw", "1,1,1", "--nope", "3"]) == 2
    assert run(["hexagon"]) == 2
    assert run(["mutate", "--seed", str(tmp_path / "missing.json")]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run(["eliminate", "--system", str(broken)]) == 2
    assert run(["gfun", "--letters", "2,3", "--depth", "3"]) == 2
    assert run(["mutate", "--seed", data("a2.json"), "--times", "3", "--period", "5"]) == 2
    capsys.readouterr()


def test_run_report():
    report = RunReport("demo", {"x": 1})
    report.check("a", True)
    report.skip("b", "not applicable")
    assert report.exit_code == 0
    report.check("c", False, "residual 1e-3")
    assert report.exit_code == 1
    data = json.loads(str(report))
    assert [v["status"] for v in data["verdicts"]] == ["pass", "skipped", "fail"]
    assert data["digest"] == json.loads(str(RunReport("other", {"x": 1})))["digest"]
    with pytest.raises(ValueError):
        Verdict("d", "maybe")
