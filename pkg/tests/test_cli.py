import json
import subprocess
import sys

import pytest

from higher_arf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, json.loads(out) if out.strip() else None, err


def test_liftable(capsys):
    code, out, _ = run(capsys, "liftable", "-g", "0", "-p", "5,5,5", "-m", "2")
    assert code == 0 and out["liftable"] is True and "reason" not in out
    code, out, _ = run(capsys, "liftable", "-g", "0", "-p", "2,3,7", "-m", "2")
    assert code == 1 and out == {"signature": {"genus": 0, "orders": [2, 3, 7]}, "m": 2,
                                 "liftable": False, "reason": "gcd"}


def test_components_brute_force(capsys):
    code, out, _ = run(capsys, "components", "-g", "2", "-p", "-", "-m", "2", "--brute-force")
    assert code == 0
    assert [c["delta"] for c in out["components"]] == [0, 1]
    assert out["sizes"] == [10, 6]
    assert {c["teich_dimension"] for c in out["components"]} == {6}


def test_orbits_and_count(capsys):
    code, out, _ = run(capsys, "orbits", "-g", "1", "-p", "5", "-m", "4")
    assert sorted((o["delta"], o["size"]) for o in out["orbits"]) == [(1, 12), (2, 3), (4, 1)]
    code, out, _ = run(capsys, "arf-count", "-g", "4", "-m", "3")
    assert out["count"] == 6561 and out["types"] == [0]


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "-g", "1", "-p", "5", "-m", "4", "--alpha", "0", "--beta", "2")
    assert out["normal_form"] == {"alpha": [2], "beta": [0]}
    assert out["twist_word"] == ["T3"] and out["delta"] == 2


def test_verify_numeric(capsys):
    code, out, _ = run(capsys, "verify-numeric", "-g", "0", "-p", "5,5,5", "-m", "2", "--samples", "20")
    assert code == 0
    assert out["sequential"] and out["allPassed"] and out["canonicalProductLevel"] == 1


def test_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "liftable", "-g", "0", "-p", "2,3,6", "-m", "2")
    assert code == 2 and out is None
    assert json.loads(err)["error"] == "NotHyperbolic"
    code, out, err = run(capsys, "normalize", "-g", "1", "-p", "5", "-m", "4", "--alpha", "0,1", "--beta", "0")
    assert code == 2 and json.loads(err)["error"] == "LengthMismatch"


def test_table_output(capsys):
    assert main(["arf-count", "-g", "1", "-p", "5", "-m", "2", "--table"]) == 0
    assert "count: 4" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higher_arf", "liftable", "-g", "1", "-p", "5", "-m", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["liftable"]


def test_missing_arguments_exit():
    with pytest.raises(SystemExit):
        main(["liftable", "-m", "2"])
