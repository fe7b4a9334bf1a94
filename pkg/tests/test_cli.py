import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from lgsegre.checks import CHECKS
from lgsegre.cli import main, run_command

HERE = Path(__file__).parent
GOLDEN = sorted((HERE / "golden").glob("*.json"))


def _argv(argv):
    return [str(HERE / a) if a.endswith(".json") else a for a in argv]


def _strip_timing_line(text):
    return re.sub(r'\n\s*"timing_ms": \d+,?', "", text)


def _without_timing(text):
    data = json.loads(text)
    data.pop("timing_ms", None)
    return data


@pytest.mark.parametrize("path", GOLDEN, ids=[p.stem for p in GOLDEN])
def test_golden_outputs(path):
    case = json.loads(path.read_text())
    code, text = run_command(_argv(case["argv"]))
    assert code == 0
    assert _without_timing(text) == case["output"]


def test_critical_values_for_sl2():
    code, text = run_command(["critical", "--n", "1", "--h", "1,-1"])
    assert code == 0 and json.loads(text)["f_values"] == ["2", "-2"]


def test_ratmap_example():
    code, text = run_command(["verify", "ratmap", "--n", "2", "--h", "3,-2,-1", "--samples", "100", "--seed", "7"])
    report = json.loads(text)
    assert code == 0 and report["passed"] and report["sample_count"] == 100


def test_segre_example():
    code, text = run_command(["verify", "segre", "--n", "1"])
    assert code == 0 and json.loads(text)["details"]["mode"] == "ideal-equality"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["verify", "nope"],
        ["critical", "--n", "2", "--h", "1,1,-1"],
        ["critical", "--n", "2", "--h", "1,1,-2"],
        ["critical", "--n", "2", "--h", "1,-1"],
        ["verify", "hessian", "--n", "2", "--h", "1,1,-2"],
        ["verify", "adjugate", "--samples", "0"],
        ["orbit", "info", "--n", "0"],
        ["groebner", "/nonexistent/ideal.json"],
        ["critical", "--h", "0.5,-0.5"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, text = run_command(argv)
    assert code == 2
    assert json.loads(text)["error"] == "usage"


def test_cap_exceeded_exits_3():
    code, text = run_command(["groebner", str(HERE / "data" / "twisted_cubic.json"), "--cap", "0"])
    assert code == 3 and json.loads(text)["error"] == "resource-cap"


def test_failed_verification_exits_1(monkeypatch):
    import lgsegre.checks as checks

    monkeypatch.setattr(checks, "incidence_member", lambda pair: False)
    code, text = run_command(["verify", "incidence", "--n", "1", "--samples", "2"])
    assert code == 1 and json.loads(text)["witnesses"]


@pytest.mark.parametrize("name", sorted(CHECKS) + ["all"])
def test_verify_is_byte_identical_across_runs(name):
    argv = ["verify", name, "--n", "2", "--samples", "5", "--seed", "11"]
    outs = [run_command(argv) for _ in range(2)]
    assert outs[0][0] == outs[1][0] == 0
    assert _strip_timing_line(outs[0][1]) == _strip_timing_line(outs[1][1])


def test_main_prints_and_returns_code(capsys):
    assert main(["orbit", "info", "--n", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 1


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "lgsegre", "critical", "--n", "1", "--h", "1,-1"],
        capture_output=True, text=True, check=False,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["f_values"] == ["2", "-2"]
