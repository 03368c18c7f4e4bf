import json
import subprocess
import sys

import pytest

from distp3.cli import main
from distp3.report import dumps, fixture_names, load_fixture, run_document, strip_timing

from conftest import GOLDEN


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_every_fixture_has_a_golden_report():
    assert sorted(p.stem for p in GOLDEN.glob("*.json")) == fixture_names()


@pytest.mark.parametrize("name", fixture_names())
def test_golden_reports(name):
    result, _ = run_document(load_fixture(name))
    assert dumps(strip_timing(result)) == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


@pytest.mark.parametrize("name", fixture_names())
def test_reports_are_deterministic(name):
    a, _ = run_document(load_fixture(name))
    b, _ = run_document(load_fixture(name))
    assert dumps(strip_timing(a)) == dumps(strip_timing(b))


def test_analyze_expressions_and_json(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "analyze", "--json", str(out), "--", "-z1*z2 - z0*z3", "-z1*z3", "z0*z1", "z0^2 + z1^2")
    assert code == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert (report["deg_C"], report["p_a_C"], report["len_U"]) == (1, 0, 2)
    assert report["chern"] == {"c1": 1, "c2": 2, "c3": 2}
    assert report["stability"]["verdict"] == "stable"
    assert report["hilbert_polynomial"] == ["3/1", "1/1"]
    assert set(report["timing"]) == {"exterior", "groebner", "invariants"}
    assert "deg C, p_a, len U 1, 0, 2" in text


def test_analyze_fixtures_in_parallel_keeps_order(capsys, tmp_path):
    out = tmp_path / "many.json"
    names = ["quartic_line_deg2", "isolated_points_deg1", "chain_of_lines_deg1"]
    code, _, _ = run(capsys, "analyze", "--fixture", *names, "--jobs", "2", "--json", str(out))
    assert code == 0
    reports = json.loads(out.read_text(encoding="utf-8"))
    assert [r["deg_C"] for r in reports] == [4, 0, 3]
    assert reports[2]["classification"].startswith("split 𝒪⊕𝒪(1)")


def test_analyze_validation_error_exit_code(capsys, tmp_path):
    out = tmp_path / "e.json"
    code, text, _ = run(capsys, "analyze", "--fixture", "two_lines_point_deg1_printed", "--json", str(out))
    assert code == 1
    err = json.loads(out.read_text(encoding="utf-8"))["error"]
    assert err["code"] == "euler_condition_violated"
    assert err["witness"] == "-2*z0*z2*z3 + 2*z1*z2*z3"


def test_analyze_parse_error(capsys, tmp_path):
    out = tmp_path / "e.json"
    code, _, _ = run(capsys, "analyze", "--json", str(out), "--", "z1", "-z0", "z3", "-z2 +")
    assert code == 1
    assert json.loads(out.read_text(encoding="utf-8"))["error"]["position"] == 5


def test_analyze_divisorial_locus_is_rejected(capsys):
    code, text, _ = run(capsys, "analyze", "--", "z0*z1", "-z0*z0", "z0*z3", "-z0*z2")
    assert code == 1 and "divisorial" in text


def test_analyze_file_and_skip_groebner(capsys, tmp_path):
    doc = tmp_path / "form.json"
    doc.write_text(json.dumps({"format": "dist3/1", "coefficients": ["z1", "-z0", "z3", "-z2"]}))
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "analyze", "--file", str(doc), "--skip-groebner", "--json", str(out))
    report = json.loads(out.read_text(encoding="utf-8"))
    assert code == 0 and report["hilbert_polynomial"] is None and report["martinet"] == "2"


def test_generate_rational(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, _, _ = run(capsys, "generate", "rational", "--a", "2", "--b", "2", "--seed", "7", "--json", str(out))
    result = json.loads(out.read_text(encoding="utf-8"))
    assert code == 0
    assert result["report"]["chern"] == {"c1": 0, "c2": 2, "c3": 4} == result["report"]["expected_chern"]
    assert result["form"]["provenance"]["algorithm"] == "numpy-PCG64"


def test_generate_logarithmic(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, _, _ = run(capsys, "generate", "logarithmic", "--degrees", "1,1,2", "--seed", "7", "--json", str(out))
    chern = json.loads(out.read_text(encoding="utf-8"))["report"]["chern"]
    assert code == 0 and (chern["c2"], chern["c3"]) == (1, 2)


def test_generate_random_degree_zero(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, _, _ = run(capsys, "generate", "random", "--degree", "0", "--seed", "1", "--json", str(out))
    report = json.loads(out.read_text(encoding="utf-8"))["report"]
    assert code == 0 and (report["dim_Z"], report["chern"]["c2"]) in {(-1, 2), (1, 1)}


def test_generate_is_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "generate", "random", "--degree", "2", "--seed", "5", "--json", str(a))
    run(capsys, "generate", "random", "--degree", "2", "--seed", "5", "--json", str(b))
    load = lambda p: json.loads(p.read_text(encoding="utf-8"))
    assert load(a)["form"] == load(b)["form"]
    assert strip_timing(load(a)["report"]) == strip_timing(load(b)["report"])


def test_verify_commands(capsys):
    code, text, _ = run(capsys, "verify", "elliptic", "--max", "200")
    assert code == 0 and "[[1], [2], [12]]" in text
    code, _, _ = run(capsys, "verify", "martinet", "--max", "5")
    assert code == 0
    code, text, _ = run(capsys, "verify", "all")
    assert code == 2 and "canonical_rational DISAGREES" in text
    code, _, err = run(capsys, "verify", "fermat")
    assert code == 1 and "unknown_claim" in err


def test_tables(capsys, tmp_path):
    code, text, _ = run(capsys, "tables", "1")
    assert code == 0 and len(text.strip().splitlines()) == 5
    out = tmp_path / "t.json"
    code, text, _ = run(capsys, "tables", "2", "--json", str(out))
    rows = json.loads(out.read_text(encoding="utf-8"))
    assert len(rows) == 8 and "*20*" in text
    code, text, _ = run(capsys, "tables", "0")
    assert len(text.strip().splitlines()) == 3
    code, text, _ = run(capsys, "tables", "3")
    assert "R(1,3)        0   3   8" in text
    assert "L(1,1,1)      1   0   0  also listed as (1, 1, 0)" in text


def test_console_entry_point_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "distp3.cli", "analyze", "--", "z1", "-z0", "z3", "-z2"],
                        capture_output=True, text=True)
    assert ok.returncode == 0
    bad = subprocess.run([sys.executable, "-m", "distp3.cli", "analyze", "z0", "0", "0", "0"],
                         capture_output=True, text=True)
    assert bad.returncode == 1
    usage = subprocess.run([sys.executable, "-m", "distp3.cli", "analyze", "--bogus"], capture_output=True, text=True)
    assert usage.returncode == 1
