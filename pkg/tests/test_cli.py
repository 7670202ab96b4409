"""Command-line interface: exit codes, output formatting, env overrides."""

import json

from skewlog.cli import run


def test_no_command_is_usage_error(capsys):
    assert run([]) == 2
    assert "usage" in capsys.readouterr().err.lower()


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    out = capsys.readouterr().out
    assert out.strip()


def test_eval_li2(capsys):
    assert run(["eval", "li2", "--x", "-1"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == "value=-0.8224670334241132"


def test_eval_li2_out_of_domain(capsys):
    assert run(["eval", "li2", "--x", "2"]) == 2
    assert "error" in capsys.readouterr().err


def test_eval_harmonic(capsys):
    assert run(["eval", "harmonic", "--n", "4"]) == 0
    assert capsys.readouterr().out.strip() == "value=2.0833333333333335"


def test_eval_skew_mu(capsys):
    assert run(["eval", "skew-mu", "--n", "2", "--mu", "0.5"]) == 0
    assert capsys.readouterr().out.strip() == "value=0.75"


def test_eval_series_reports_full_result(capsys):
    assert run(["eval", "series", "--id", "GF_CENTERED", "--t", "1"]) == 0
    out = capsys.readouterr().out
    assert "value=" in out and "error_bound=" in out
    assert "terms=" in out and "status=CONVERGED" in out


def test_eval_series_accepts_catalog_alias(capsys):
    assert run(["eval", "series", "--id", "EQ13_LHS", "--t", "-1"]) == 0
    out1 = capsys.readouterr().out
    assert run(["eval", "series", "--id", "CENTERED_SQ", "--t", "-1"]) == 0
    assert capsys.readouterr().out == out1


def test_eval_series_divergent_input(capsys):
    assert run(["eval", "series", "--id", "GF_SKEW", "--t", "1"]) == 2
    assert "domain" in capsys.readouterr().err.lower()


def test_eval_closed_pole(capsys):
    assert run(["eval", "closed", "--id", "EQ12", "--t", "0.999999999999"]) == 2
    assert "pole" in capsys.readouterr().err.lower()


def test_eval_unknown_id(capsys):
    assert run(["eval", "series", "--id", "NOPE", "--t", "0.5"]) == 2


def test_eval_integral(capsys):
    assert run(["eval", "integral-g", "--z", "0.5"]) == 0
    out = capsys.readouterr().out
    assert "value=" in out and "status=CONVERGED" in out


def test_verify_single(capsys):
    assert run(["verify", "--id", "EQ15"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out.replace("FAIL=0", "")


def test_verify_unknown_id_lists_choices(capsys):
    assert run(["verify", "--id", "EQ999"]) == 2
    err = capsys.readouterr().err
    assert "EQ15" in err  # error message enumerates valid identities


def test_verify_tight_tolerance_fails(capsys):
    assert run(["verify", "--id", "EQ13", "--tol", "1e-18"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_all_json_to_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(["verify", "--all", "--format", "json", "--out", str(target)]) == 0
    parsed = json.loads(target.read_text())
    assert set(parsed) == {"metadata", "notes", "records", "summary"}
    assert len(parsed["notes"]) == 3
    capsys.readouterr()


def test_report_csv(capsys):
    assert run(["report", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "identity,params,lhs,rhs,residual,tolerance,verdict"
    assert all(line.endswith("PASS") for line in lines[1:] if line)


def test_constants_output(capsys):
    assert run(["constants"]) == 0
    out = capsys.readouterr().out
    assert "LOG2=0.69314718055994529" in out
    assert "ZETA3=1.2020569031595942" in out
    lines = [l for l in out.splitlines() if l]
    assert lines == sorted(lines)


def test_list_is_stable(capsys):
    assert run(["list"]) == 0
    first = capsys.readouterr().out
    assert run(["list"]) == 0
    assert capsys.readouterr().out == first
    assert "series GF_SKEW eq=EQ2" in first
    assert "closed " in first and "identity " in first


def test_env_max_terms_bad_value(monkeypatch, capsys):
    monkeypatch.setenv("SKEWLOG_MAX_TERMS", "zero")
    assert run(["eval", "li2", "--x", "0.5"]) == 2
    assert "SKEWLOG_MAX_TERMS" in capsys.readouterr().err


def test_env_max_terms_small_cap(monkeypatch, capsys):
    monkeypatch.setenv("SKEWLOG_MAX_TERMS", "20")
    assert run(["eval", "series", "--id", "GF_SKEW", "--t", "0.99",
                "--tol", "1e-14"]) == 0
    assert "status=MAX_TERMS" in capsys.readouterr().out


def test_missing_required_argument(capsys):
    assert run(["eval", "li2"]) == 2
    capsys.readouterr()


def test_broken_pipe_is_quiet():
    # piping a long report into a short-lived reader must not traceback
    import subprocess
    import sys

    proc = subprocess.run(
        f"{sys.executable} -m skewlog.cli report --format csv | head -1",
        shell=True, capture_output=True, text=True, timeout=120,
    )
    assert proc.stdout.startswith("identity,params")
    assert "Traceback" not in proc.stderr
