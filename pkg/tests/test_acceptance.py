"""Acceptance suite: eleven numbered criteria, one printed line each.

Criteria 1 to 10 are evaluated from a single in-process run of the full
verification suite (session-scoped, about 20 s); each test selects the
records belonging to its criterion and requires every one to pass at its
stated tolerance.  Criterion 11 exercises the command-line entry point
twice and byte-compares the emitted reports.
"""

import time

import pytest

from ptgauge.cli import main
from ptgauge.reporting import Report
from ptgauge.verification import (
    VerifyConfig,
    check_clifford_relations,
    run_verify_all,
)


@pytest.fixture(scope="session")
def report():
    return run_verify_all(VerifyConfig())


def _select(report, prefixes, exclude=()):
    recs = [r for r in report.records
            if any(r.name.startswith(p) for p in prefixes)
            and not any(r.name.startswith(e) for e in exclude)]
    assert recs, f"no records found for prefixes {prefixes}"
    return recs


def _assert_all(criterion, label, recs):
    failed = [r for r in recs if not r.passed]
    status = "FAIL" if failed else "PASS"
    print(f"[{status}] criterion {criterion}: {label} "
          f"({len(recs)} records)")
    assert not failed, [
        f"{r.name}: residual {r.residual:.3e} > tol {r.tolerance:.3e}"
        for r in failed]


def test_criterion_01_clifford_relations(report):
    t0 = time.perf_counter()
    scratch = Report(command="timing", config={})
    check_clifford_relations(scratch, VerifyConfig())
    elapsed = time.perf_counter() - t0
    recs = _select(report, ["clifford/"])
    _assert_all(1, "exact Clifford relations, span dimension 4", recs)
    assert elapsed < 1.0, f"clifford check took {elapsed:.2f} s"


def test_criterion_02_rotated_involution(report):
    recs = _select(report, ["rotated_involution/"])
    _assert_all(2, "rotated involution squares to I and is Hermitian "
                   "to 1e-12 over 20 angles", recs)


def test_criterion_03_abelian_gauge(report):
    recs = _select(report, ["abelian/"])
    _assert_all(3, "scalar gauge closed forms, polar identities, "
                   "weak pseudo-Hermiticity r1 <= 1e-8 with O(1) "
                   "naive-parity residual", recs)


def test_criterion_04_cartan_lts(report):
    recs = _select(report, ["cartan/ternary_closure", "cartan/binary_escape",
                            "cartan/dim_"])
    _assert_all(4, "ternary closure to 1e-12 over 1000 triples per "
                   "signature, binary escape, dimension rank counts", recs)


def test_criterion_05_closed_form_exponentials(report):
    recs = _select(report, ["cartan/closed_form_exponentials",
                            "cartan/so2_rotation_example",
                            "cartan/boost_example"])
    _assert_all(5, "closed-form exponentials match expm to 1e-10 "
                   "including both 2x2 worked examples", recs)


def test_criterion_06_parity_metric_relations(report):
    recs = _select(report, ["cartan/parity_metric_relations"])
    _assert_all(6, "parity and metric identities to 1e-10 over 500 "
                   "random draws", recs)


def test_criterion_07_matrix_schrodinger(report):
    recs = _select(report, ["matrix/"])
    _assert_all(7, "dual-build matrix spectra to 5e-2 at h = 0.05, "
                   "conjugate pairing, convergence order >= 1.8", recs)
    order = report.config["matrix_convergence_order"]
    print(f"       observed convergence order: {order:.2f}")


def test_criterion_08_jaynes_cummings(report):
    recs = _select(report, ["jc/"])
    _assert_all(8, "decoupled ladder spectrum exact, grid vs Fock "
                   "lowest six to 5e-2, truncation shift < 1e-6", recs)


def test_criterion_09_clifford_angle(report):
    recs = _select(report, ["point/phi_", "point/matrix_relation"])
    _assert_all(9, "rotation angle solution, reference value, matrix "
                   "relation at solved angle and failure at wrong angle",
                recs)


def test_criterion_10_point_spectra(report):
    recs = _select(report, ["point/delta_well", "point/sweep"])
    _assert_all(10, "delta-well bound state to 1e-12 with independent "
                    "grid oracle to 1e-3, sweep conjugate pairing", recs)


def test_criterion_11_verify_all_reproducible(tmp_path_factory, capsys):
    d1 = str(tmp_path_factory.mktemp("run1"))
    d2 = str(tmp_path_factory.mktemp("run2"))
    t0 = time.perf_counter()
    code1 = main(["verify-all", "--out-dir", d1])
    code2 = main(["verify-all", "--out-dir", d2])
    elapsed = time.perf_counter() - t0
    import pathlib
    f1 = sorted(pathlib.Path(d1).iterdir())
    f2 = sorted(pathlib.Path(d2).iterdir())
    same_names = [p.name for p in f1] == [p.name for p in f2]
    identical = same_names and all(
        a.read_bytes() == b.read_bytes() for a, b in zip(f1, f2))
    ok = code1 == 0 and code2 == 0 and identical and elapsed < 300
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"[{status}] criterion 11: verify-all exits 0 and is "
              f"byte-reproducible ({elapsed:.1f} s for two runs)")
    assert code1 == 0 and code2 == 0
    assert [p.name for p in f1] == [p.name for p in f2]
    assert identical
    assert elapsed < 300
