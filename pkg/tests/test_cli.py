import json
import subprocess
import sys
from pathlib import Path

import pytest

from ratknot.cli import dispatch, main

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    (["lens", "info", "5", "2"], "lens_info_5_2.out"),
    (["unknot", "mountain", "5", "3", "--orient", "K1", "--depth", "0"], "unknot_mountain_5_3.out"),
    (["bennequin", "--sl", "-7/5", "--chi", "1", "-r", "5"], "bennequin_sl.out"),
]


@pytest.mark.parametrize("argv, name", GOLDEN_CASES)
def test_golden_bytes(argv, name):
    res = dispatch(argv)
    assert res.exit_code == 0
    assert res.render().encode() == (GOLDEN / name).read_bytes()


def test_golden_through_subprocess():
    argv, name = GOLDEN_CASES[2]
    out = subprocess.run([sys.executable, "-m", "ratknot", *argv], capture_output=True, check=True)
    assert out.stdout == (GOLDEN / name).read_bytes()


def _json(argv):
    res = dispatch(argv)
    return res.exit_code, json.loads(res.render().splitlines()[0])


def test_bennequin_violation_exit_code():
    code, payload = _json(["bennequin", "--sl", "1", "--chi", "1", "-r", "1"])
    assert code == 2 and payload["status"] == "violated" and payload["slack"] == "-2/1"
    code, payload = _json(["bennequin", "--sl", "-1", "--chi", "1", "-r", "1"])
    assert code == 0 and payload["sharp"] is True


def test_invariants_commands():
    _, payload = _json(["invariants", "pushoff", "--tb", "-4/5", "--rot", "3/5", "-r", "5"])
    assert payload["sl"] == "-7/5"
    code, payload = _json(["invariants", "stabilize", "transverse", "--sl", "-1/5", "-r", "5", "--times", "2"])
    assert code == 0 and payload["sl"] == "-21/5"


def test_cable_and_resolve():
    code, payload = _json(["cable", "--chi", "1", "-r", "2", "-s", "1", "-p", "2", "-q", "3", "--sl", "-3/2"])
    assert code == 0 and payload["chi_new"] == -1 and payload["sl_new"] == "-1/1"
    code, payload = _json(["resolve", "--chi", "0", "-r", "3", "--slopes", "1,2", "--coeffs", "2,4"])
    assert code == 0 and payload["chi_new"] == -6


def test_unknot_commands():
    _, payload = _json(["unknot", "classify", "5", "2"])
    assert sorted(payload["unknots"]) == ["-K0", "-K1", "K0", "K1"]
    _, payload = _json(["unknot", "sl", "5", "3", "--orient", "-K1", "--depth", "1"])
    assert payload["sl"] == ["-1/5", "-11/5"]


def test_foliation_commands(tmp_path):
    good = tmp_path / "g.txt"
    good.write_text("N a e +\nN b e +\nN H h -\nN P e -\nE a H\nE b H\nE H P\nE H ∂\n")
    code, payload = _json(["foliation", "check", str(good), "-r", "1", "--chi", "2"])
    assert code == 0
    code, _ = _json(["foliation", "check", str(good), "-r", "1", "--chi", "3"])
    assert code == 2
    res = dispatch(["foliation", "simplify", str(good), "-r", "1"])
    assert res.exit_code == 0
    assert "N P" not in res.render()


@pytest.mark.parametrize(
    "argv",
    [
        ["lens", "info", "4", "2"],
        ["lens", "info", "5"],
        ["unknot", "mountain", "4", "1"],
        ["bennequin", "--sl", "x", "--chi", "1", "-r", "1"],
        ["foliation", "check", "/nonexistent/file"],
        ["cable", "--chi", "1", "-r", "2", "-s", "1", "-p", "2", "-q", "1"],
        ["nonsense"],
    ],
)
def test_errors_are_one_line(argv, capsys):
    assert main(argv) == 1
    err = capsys.readouterr().err
    assert err.count("\n") == 1 and "Traceback" not in err
