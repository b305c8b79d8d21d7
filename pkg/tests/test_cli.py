"""End-to-end CLI behavior: reports, determinism, and exit codes."""

import json

import pytest

from cobalt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_grass_report(capsys):
    code, report = run_json(capsys, "grass", "--n", "4", "--d", "2",
                            "--verify", "all")
    assert code == 0
    assert report["schema"] == 1
    assert report["rank"] == 6
    assert [c["name"] for c in report["checks"]] == \
        ["complex", "identities", "pairing", "products"]
    assert all(c["pass"] for c in report["checks"])
    assert [2, 1] in report["basis"]


def test_grass_single_check_and_full_box(capsys):
    code, report = run_json(capsys, "grass", "--n", "3", "--d", "3",
                            "--verify", "all")
    assert code == 0
    # no restriction target exists at d == n, so that check is skipped
    assert [c["name"] for c in report["checks"]] == \
        ["identities", "pairing", "products"]
    code, report = run_json(capsys, "grass", "--n", "5", "--d", "2",
                            "--verify", "pairing")
    assert code == 0
    assert report["checks"] == [{"name": "pairing", "pass": True}]


def test_fgl_report(capsys):
    code, report = run_json(capsys, "fgl", "--law", "multiplicative",
                            "--N", "4", "--check", "--p-series", "2",
                            "--landweber", "2", "2")
    assert code == 0
    assert report["coefficients"]["1,1"] == "-beta"
    assert report["axioms"]["ok"] is True
    assert report["p_series"]["coefficients"] == {"1": "2", "2": "-beta"}
    assert report["landweber_generators"]["sequence"] == ["2", "-beta", "0"]


def test_fgl_universal_rational(capsys):
    code, report = run_json(capsys, "fgl", "--law", "universal-q",
                            "--N", "4", "--check")
    assert code == 0
    assert report["coefficients"]["1,1"] == "-2*m1"


def test_landweber_exact_and_failing(capsys):
    code, report = run_json(capsys, "landweber", "--law", "multiplicative",
                            "--primes", "2,3", "--height", "3",
                            "--window", "-6:6")
    assert code == 0
    assert report["exact"] is True
    statuses = [s["status"] for s in report["verdicts"]["2"]["stages"]]
    assert statuses == ["regular", "regular", "quotient_vanishes",
                        "quotient_vanishes"]

    code, report = run_json(capsys, "landweber", "--law", "additive",
                            "--primes", "2", "--height", "1",
                            "--window", "0:4")
    assert code == 1
    assert report["exact"] is False
    assert report["verdicts"]["2"]["stages"][1]["status"] == "fails"


def test_landweber_module_file(capsys, tmp_path):
    module = tmp_path / "mod.json"
    module.write_text(json.dumps({
        "ring": {"base": "Z", "generators": [], "relations": []},
        "generators": [{"name": "e", "adams_degree": 0}],
        "relations": [{"e": 2}],
    }))
    code, report = run_json(capsys, "landweber", "--law", "additive",
                            "--module", str(module), "--primes", "2",
                            "--height", "0", "--window", "0:2")
    assert code == 1
    assert report["verdicts"]["2"]["stages"][0]["status"] == "fails"


def test_landweber_custom_law_file(capsys, tmp_path):
    law = tmp_path / "law.json"
    law.write_text(json.dumps({
        "ring": {"base": "Z",
                 "generators": [{"name": "beta", "adams_degree": 1,
                                 "invertible": True}],
                 "relations": []},
        "order": 4,
        "exact": True,
        "coefficients": [{"i": 1, "j": 1, "value": "-beta"}],
    }))
    code, report = run_json(capsys, "landweber", "--law", str(law),
                            "--primes", "2", "--height", "2",
                            "--window", "-4:4")
    assert code == 0
    assert report["exact"] is True


def test_custom_law_must_satisfy_axioms(capsys, tmp_path):
    law = tmp_path / "law.json"
    law.write_text(json.dumps({
        "ring": {"base": "Q", "generators": [], "relations": []},
        "order": 5,
        "coefficients": [{"i": 2, "j": 1, "value": 1}],
    }))
    code, out = run(capsys, "landweber", "--law", str(law),
                    "--primes", "2", "--height", "1", "--window", "0:2")
    assert code == 2


def test_oriented_report(capsys):
    code, report = run_json(capsys, "oriented", "--n", "4", "--d", "2",
                            "--thom")
    assert code == 0
    assert report["thom_class"] == {"x^0": "x2", "x^1": "-x1", "x^2": "1"}
    assert report["zero_section"]["ok"] is True


def test_oriented_custom_coefficients(capsys, tmp_path):
    coeff = tmp_path / "coeff.json"
    coeff.write_text(json.dumps({
        "base": "Z",
        "generators": [{"name": "b", "adams_degree": 1,
                        "invertible": True}],
        "relations": []}))
    code, report = run_json(capsys, "oriented", "--coeff", str(coeff),
                            "--n", "3", "--d", "1")
    assert code == 0
    assert report["rank"] == 3
    assert report["coefficient_ring"]["generators"] == ["b", "b_inv"]


def test_hopf_report(capsys):
    code, report = run_json(capsys, "hopf", "--N", "3")
    assert code == 0
    assert report["comult"]["b1"] == "bL1 + bR1"
    assert report["right_unit"]["m1"] == "m1 - b1"
    assert report["axioms"]["pass"] is True


def test_hopf_induced(capsys, tmp_path):
    doc = tmp_path / "law.json"
    doc.write_text(json.dumps({
        "ring": {"base": "Q",
                 "generators": [{"name": "beta", "adams_degree": 1,
                                 "invertible": True}],
                 "relations": []},
        "law": "multiplicative"}))
    code, report = run_json(capsys, "hopf", "--N", "3",
                            "--induced", str(doc))
    assert code == 0
    assert report["collapse_identifies_units"] is True
    assert "-beta_L + 2*b1 + beta_R" in report["induced"]["relations"]


def test_cobordism_json_and_csv(capsys):
    code, report = run_json(capsys, "cobordism", "--field", "Q",
                            "--window", "-4:0,-2:0", "--verify")
    assert code == 0
    assert report["field"] == "Q"
    assert report["verification"]["pass"] is True
    grid = dict(zip(report["p_values"],
                    [dict(zip(report["q_values"], row))
                     for row in report["cells"]]))
    assert grid[-4][-2] == "Q^2"
    assert grid[-1][0] == "k*(x)Q"
    assert grid[0][0] == "Q"

    code, out = run(capsys, "cobordism", "--field", "F7",
                    "--window", "-4:0,-2:0", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",") == ["p\\q", "-2", "-1", "0"]
    assert len(lines) == 6
    assert lines[1].split(",") == ["-4", "Q^2", "0", "0"]


def test_verify_all_deterministic(capsys):
    code1, out1 = run(capsys, "verify-all", "--seed", "7")
    code2, out2 = run(capsys, "verify-all", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["pass"] is True
    assert report["within_budget"] is True
    assert len(report["checks"]) == 10
    assert "timing_ms" not in report
    assert all("timing_ms" not in c for c in report["checks"])


def test_verify_all_timings_flag(capsys):
    code, report = run_json(capsys, "verify-all", "--timings")
    assert code == 0
    assert "timing_ms" in report
    assert all("timing_ms" in c for c in report["checks"])


def test_usage_and_input_errors(capsys):
    code, out = run(capsys, "grass", "--n", "99", "--d", "2")
    assert code == 2
    code, out = run(capsys, "landweber", "--law", "additive",
                    "--window", "5:1")
    assert code == 2
    code, out = run(capsys, "cobordism", "--field", "X",
                    "--window", "0:1,0:1")
    assert code == 2
    code, out = run(capsys, "cobordism", "--field", "Q",
                    "--window", "0:1")
    assert code == 2
    code, out = run(capsys, "landweber", "--law", "/nonexistent.json")
    assert code == 2
    with pytest.raises(SystemExit) as err:
        main(["grass", "--n", "4", "--d", "2", "--no-such-flag"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 2


def test_negative_window_value_after_space(capsys):
    code, report = run_json(capsys, "landweber", "--law", "multiplicative",
                            "--primes", "2", "--height", "1",
                            "--window", "-3:3")
    assert code == 0
    assert report["window"] == [-3, 3]
