import json

import pytest

from qlattice.arith import context
from qlattice.cli import SUITES, SuiteConfig, load_report, main, run
from qlattice.dump import build_matrix, dump_matrix, load_dump, write_dump
from qlattice.hkl import hkl_generator
from qlattice.schroedinger import heisenberg_matrix, psi_matrix


def _verify(tmp_path, *args):
    out = tmp_path / "report.json"
    code = main(["verify", *args, "--out", str(out)])
    return code, out


# -- configuration errors


@pytest.mark.parametrize("argv", [
    ["verify", "--r", "4"],
    ["verify", "--r", "2"],
    ["verify", "--r", "3", "--genus", "0"],
    ["verify", "--r", "3", "--suite", "bogus"],
    ["verify", "--r", "3", "--range", "Z=4"],
    ["verify", "--r", "3", "--range", "A=x"],
    ["verify", "--r", "3", "--dump", "psi:tau_alpha"],
    ["verify"],
    ["dump", "--r", "3", "psi:tau_alpha:E1F"],
])
def test_bad_arguments_exit_with_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_config_validates_directly():
    with pytest.raises(ValueError):
        SuiteConfig(9)
    with pytest.raises(ValueError):
        SuiteConfig(5, suites=("qcomb", "nope"))
    assert SuiteConfig(5).suites == SUITES


# -- verify


def test_schroedinger_integrality_at_five(tmp_path, capsys):
    code, out = _verify(tmp_path, "--r", "5", "--genus", "1", "--suite", "schroedinger-integrality")
    assert code == 0
    doc, reports = load_report(out)
    counts = {rep.params["generator"]: rep.detail["entries_checked"]
              for rep in reports if rep.check == "psi_vprime_integral"}
    assert counts == {g: 25 for g in ("tau_alpha1", "tau_alpha1^-1", "tau_beta1", "tau_beta1^-1")}
    assert doc["summary"]["status"] == "pass"
    assert "0 fail" in capsys.readouterr().err


def test_report_round_trips_and_is_sorted(tmp_path):
    code, out = _verify(tmp_path, "--r", "3", "--suite", "qcomb", "--suite", "appendix",
                        "--range", "A=5", "--range", "C_div_m=7")
    doc, reports = load_report(out)
    assert [rep.to_dict() for rep in reports] == doc["reports"]
    assert reports == sorted(reports, key=lambda rep: rep.sort_key())
    assert doc["config"]["ranges"] == {"A": 5, "C_div_m": 7}
    assert doc["config"]["suites"] == ["qcomb", "appendix"]
    status = doc["summary"]["status"]
    assert (status == "pass") == (code == 0)
    assert doc["summary"]["warn"] == 2
    assert {rep.suite for rep in reports} == {"qcomb", "appendix"}


def test_report_also_parses_from_text(tmp_path):
    _, out = _verify(tmp_path, "--r", "3", "--suite", "qcomb")
    doc, reports = load_report(out.read_text())
    assert doc["tool"] == "qlattice" and reports


def test_failures_give_exit_one_and_carry_witnesses(monkeypatch):
    from qlattice import cli
    from qlattice.report import CheckReport

    def broken(r, genus, ranges):
        return [CheckReport.failed("qcomb", "pascal", {"r": r}, {"n": 1, "k": 0}),
                CheckReport.passed("qcomb", "other", {"r": r})]

    monkeypatch.setitem(cli.RUNNERS, "qcomb", broken)
    code, doc = run(SuiteConfig(3, suites=("qcomb",)))
    assert code == 1 and doc["summary"] == {"pass": 1, "fail": 1, "warn": 0, "status": "fail"}
    assert all(rep["witness"] for rep in doc["reports"] if rep["status"] == "fail")


def test_workers_give_the_same_report():
    suites = ("qcomb", "grading", "mcg-relations")
    _, serial = run(SuiteConfig(3, suites=suites))
    _, parallel = run(SuiteConfig(3, suites=suites, workers=3))
    assert serial["reports"] == parallel["reports"]


def test_large_hkl_work_is_skipped_with_a_warning():
    code, doc = run(SuiteConfig(5, 2, suites=("hkl-equivariance",)))
    assert code == 0
    skipped = [rep for rep in doc["reports"] if "skipped" in (rep.get("detail") or {})]
    assert [rep["params"]["g"] for rep in skipped] == [2]


def test_quantum_group_suites_are_capped():
    code, doc = run(SuiteConfig(13, suites=("hopf",)))
    assert code == 0 and doc["summary"]["warn"] == 1


def test_full_run_genus_two_at_three(tmp_path):
    code, out = _verify(tmp_path, "--r", "3", "--genus", "2", "--suite", "all", "--workers", "4")
    doc, reports = load_report(out)
    assert code == 0, [r.check for r in reports if r.status == "fail"]
    assert {rep.suite for rep in reports} == set(SUITES)


def test_verify_writes_requested_dumps(tmp_path):
    code, out = _verify(tmp_path, "--r", "3", "--suite", "qcomb", "--dump", "psi:tau_alpha1:v")
    assert code == 0
    dumped = tmp_path / "dump_psi_tau_alpha1_v_r3_g1.json"
    header, m = load_dump(dumped)
    assert m == psi_matrix("tau_alpha1", 1, context(3), "v")


# -- dumps


def test_psi_tau_alpha_dump_at_three(tmp_path, capsys):
    assert main(["dump", "--r", "3", "psi:tau_alpha:v"]) == 0
    header, m = load_dump(json.loads(capsys.readouterr().out))
    ctx = context(3)
    assert [m.entry(i, i) for i in range(3)] == [ctx.one(), ctx.zeta_rat(1), ctx.one()]
    assert header["r"] == 3 and header["basis"] == "v" and header["normalization"]


def test_heisenberg_beta_dump_is_a_permutation(capsys):
    assert main(["dump", "--r", "3", "heisenberg:beta1:v"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["entries"]) == 3
    assert all(den == 1 and coeffs == [1, 0] for _, _, den, coeffs in doc["entries"])
    assert sorted(col for _, col, _, _ in doc["entries"]) == [0, 1, 2]


def test_hkl_tau_alpha_dump_is_sparse_27_by_27(tmp_path):
    out = tmp_path / "a.json"
    assert main(["dump", "--r", "3", "--out", str(out), "hkl:tau_alpha:E1F"]) == 0
    doc = json.loads(out.read_text())
    assert doc["dimension"] == 27 and len(doc["labels"]) == 27
    assert 0 < len(doc["entries"]) < 27 * 27
    rows = [(i, j) for i, j, _, _ in doc["entries"]]
    assert rows == sorted(rows)
    assert all(len(c) == 2 and isinstance(d, int) for _, _, d, c in doc["entries"])


@pytest.mark.parametrize("rep,gen,basis,g", [
    ("psi", "tau_beta", "vprime", 1),
    ("psi", "tau_gamma1^-1", "t", 2),
    ("heisenberg", "alpha1 beta2^-1", "t", 2),
    ("hkl", "tau_beta", "E1primeF", 1),
    ("hkl", "tau_gamma1", "E1F", 2),
])
def test_dumps_reload_to_fresh_matrices(tmp_path, rep, gen, basis, g):
    ctx = context(3)
    m = build_matrix(rep, gen, basis, 3, g)
    path = tmp_path / "m.json"
    write_dump(dump_matrix(m, rep, gen, basis, 3, g), path)
    header, back = load_dump(path)
    fresh = {"psi": lambda: psi_matrix(gen, g, ctx, basis),
             "heisenberg": lambda: heisenberg_matrix(gen, g, ctx, basis),
             "hkl": lambda: hkl_generator(gen, g, ctx, basis)}[rep]()
    assert back == fresh
    assert back.labels == fresh.labels
    assert (header["generator"], header["genus"]) == (gen, g)


def test_bad_dump_combinations():
    with pytest.raises(ValueError):
        build_matrix("hkl", "tau_alpha", "v", 3, 1)
    with pytest.raises(ValueError):
        build_matrix("psi", "tau_alpha", "E1F", 3, 1)
    with pytest.raises(ValueError):
        build_matrix("knot", "tau_alpha", "v", 3, 1)
