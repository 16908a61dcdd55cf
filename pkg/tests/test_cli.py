import json
import subprocess
import sys

import pytest

import gvcurves.assembly as assembly
from gvcurves.cli import main
from gvcurves.gvbasis import GVSpectrum


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_homfly(capsys):
    code, out = run(capsys, "homfly", "--n", "5")
    assert code == 0
    assert "q^4{(q^-1-q)^4 + 4(q^-1-q)^2 + 3}" in out.out
    code, out = run(capsys, "homfly", "--n", "2", "--json")
    data = json.loads(out.out)
    assert data["specialization"] == "q{(q^-1-q) + (q^-1-q)^-1}" and data["pole_order"] == 1


def test_contrib_json(capsys):
    code, out = run(capsys, "contrib", "--partition", "4,2", "--base-genus", "2", "--json")
    data = json.loads(out.out)
    assert code == 0
    assert data["spectrum"] == {"n": {"3": -1, "4": 4, "5": -4, "6": 1}, "unknown": None}
    assert data["hilb_series"].startswith("1 - 6q^2")


def test_strata_table(capsys):
    code, out = run(capsys, "strata", "--base-genus", "2")
    assert code == 0
    lines = out.out.splitlines()
    assert any(line.split()[0] == "2,2,1,1" and line.split()[-1] == "968" for line in lines)
    assert lines[-1].split() == ["sum", "1"]


def test_degeneracy(capsys):
    code, out = run(capsys, "degeneracy", "--weights", "3,2,1", "--genus", "2", "--degL2", "6", "--json")
    data = json.loads(out.out)
    assert data["euler_Z"] == -196 and data["rank"] == 6
    assert data["ch"]["3"] == "66 pt|pt|pt"


def test_higgs_and_gw(capsys):
    _, out = run(capsys, "higgs", "--base-genus", "2", "--json")
    assert json.loads(out.out)["spectrum"]["n"] == {"2": -2, "3": 8, "4": -18, "5": 8, "6": -1}
    _, out = run(capsys, "gw", "--base-genus", "3", "--json")
    assert json.loads(out.out)["degree2"]["n"]["3"] == -8


def test_full(capsys):
    code, out = run(capsys, "full", "--base-genus", "2", "--json")
    assert code == 0
    assert json.loads(out.out)["total"]["n"] == {"2": -2, "3": 8}
    code, out = run(capsys, "full", "--base-genus", "3")
    assert code == 0 and "unknown" in out.out and "match at every determined g: yes" in out.out


def test_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(assembly, "extract_gw_gv", lambda g: (GVSpectrum({2: 1}), GVSpectrum({3: 1})))
    code, out = run(capsys, "full", "--base-genus", "2")
    assert code == 2
    assert "mismatch" in out.err


@pytest.mark.parametrize(
    "argv",
    [
        ["homfly"],
        ["contrib", "--partition", "4,x", "--base-genus", "2"],
        ["nosuchcommand"],
    ],
)
def test_usage_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_domain_errors_exit_1(capsys):
    code, out = run(capsys, "strata", "--base-genus", "3")
    assert code == 1 and "base genus 2" in out.err
    code, out = run(capsys, "contrib", "--partition", "3,2", "--base-genus", "2")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gvcurves", "gw", "--base-genus", "2", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degree2"]["n"] == {"2": -2, "3": 8}
