import json
import subprocess
import sys

import pytest

from trigal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_classify_m11_example(capsys):
    code, doc = run_cli(capsys, "classify", "--n", "12", "--m", "1", "--p", "3")
    assert code == 0
    assert doc["group"] == "M11@12"
    assert doc["clause"] == 3


def test_classify_trivial_example(capsys):
    code, doc = run_cli(capsys, "classify", "--n", "2", "--m", "1", "--p", "5")
    assert code == 0
    assert doc["group"] == "S2"
    assert doc["clause"] == "trivial"


def test_classify_explain_includes_newton_witness(capsys):
    code, doc = run_cli(
        capsys, "classify", "--n", "12", "--m", "1", "--p", "3", "--explain"
    )
    assert code == 0
    assert doc["gauss"] == {"separable": 4, "inseparable": 3, "strange": True}
    wit = doc["newton_witnesses"][0]
    assert wit["specialization"] == "x^12 + t^-1*x^1 + 1"
    assert wit["cycles"] == [1, 11]


def test_factor_command(capsys):
    code, doc = run_cli(
        capsys, "factor", "--field", "2",
        "--poly", "1,1,0,0,0,0,0,0,0,0,0,0,1",
    )
    assert code == 0
    assert doc["pattern"] == [3, 4, 5]
    assert doc["unit"] == "1"
    assert doc["seed"] == 0


def test_factor_seed_does_not_change_output(capsys):
    _, d1 = run_cli(capsys, "factor", "--field", "3^2", "--poly", "c,2,0,1", "--seed", "1")
    _, d2 = run_cli(capsys, "factor", "--field", "3^2", "--poly", "c,2,0,1", "--seed", "9")
    assert d1["factors"] == d2["factors"]


def test_sample_identify(capsys):
    code, doc = run_cli(
        capsys, "sample", "--n", "11", "--m", "1", "--field", "2",
        "--trials", "200", "--identify",
    )
    assert code == 0
    assert doc["identification"]["minimal"] == "S11"
    assert doc["seed"] == 0
    assert doc["accepted"] <= 200


def test_sectional_command(capsys):
    code, doc = run_cli(
        capsys, "sectional", "--exponents", "1,5,6", "--field", "5^2",
        "--trials", "300", "--seed", "2",
    )
    assert code == 0
    assert doc["exponents"] == [1, 5, 6]
    assert doc["degree"] == 6
    assert doc["seed"] == 2


def test_table2_exit_zero(capsys):
    code, doc = run_cli(capsys, "table2")
    assert code == 0
    assert doc["all_match"] is True
    assert len(doc["rows"]) == 23


def test_cycletypes_command(capsys):
    code, doc = run_cli(capsys, "cycletypes", "--group", "PGL(2,5)")
    assert code == 0
    assert doc["order"] == 120
    assert [6] in doc["types"]


def test_verify_identities(capsys):
    code, doc = run_cli(capsys, "verify-identities")
    assert code == 0
    assert doc["all_hold"] is True
    assert len(doc["symbolic"]) == 6
    assert all(doc["numeric"].values())


def test_byte_identical_invocations(capsys):
    main(["classify", "--n", "24", "--m", "1", "--p", "2", "--explain"])
    first = capsys.readouterr().out
    main(["classify", "--n", "24", "--m", "1", "--p", "2", "--explain"])
    second = capsys.readouterr().out
    assert first == second
    main(["sample", "--n", "6", "--m", "1", "--field", "2^2", "--trials", "50"])
    s1 = capsys.readouterr().out
    main(["sample", "--n", "6", "--m", "1", "--field", "2^2", "--trials", "50"])
    assert s1 == capsys.readouterr().out


def test_keys_are_sorted(capsys):
    _, _ = run_cli(capsys, "classify", "--n", "7", "--m", "2", "--p", "3")
    main(["classify", "--n", "7", "--m", "2", "--p", "3"])
    out = capsys.readouterr().out
    parsed = json.loads(out)
    assert out == json.dumps(parsed, sort_keys=True, indent=2) + "\n"


def test_computational_error_exit_one(capsys):
    code = main(["classify", "--n", "12", "--m", "2", "--p", "3"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 1
    assert doc["error"]["kind"] == "NotCoprime"


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--n", "12"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trigal.cli", "classify", "--n", "8", "--m", "1", "--p", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["group"] == "AGL(1,8)"
