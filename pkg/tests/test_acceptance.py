"""Acceptance criteria, one test each, all at exact integer tolerance.

Each test prints a single ``ACCEPTANCE <k> PASS|FAIL`` line; the lines are
also collected and repeated in the pytest terminal summary.  Run the module
directly (``python tests/test_acceptance.py``) for the lines alone.
"""

import sys

import pytest

from strongres import verify

RESULTS: list[str] = []


def record(k: int, title: str, report) -> None:
    checks = report.checks.values()
    passed = sum(c.passed for c in checks)
    failed = sum(c.failed for c in checks)
    line = f"ACCEPTANCE {k} {'PASS' if report.ok else 'FAIL'}: {title} ({passed} checks passed, {failed} failed)"
    RESULTS.append(line)
    print(line)
    if not report.ok:
        print("\n".join(report.lines()))
    assert report.ok, "\n".join(report.lines())


@pytest.mark.slow
def test_criterion_1_oracle_equivalence():
    report = verify.verify_oracle(max_n=6)
    # connected labeled graphs on 2..6 vertices
    assert sum(c.passed for c in report.checks.values()) == 1 + 4 + 38 + 728 + 26704
    record(1, "dim_s by subset enumeration = alpha(G_SR), all connected labeled graphs n <= 6", report)


@pytest.mark.slow
def test_criterion_2_characterizations():
    report = verify.verify_characterizations(max_n=6)
    record(2, "pd_s = 2, n, n-1 characterizations, all connected labeled graphs n <= 6", report)


def test_criterion_3_closed_formulas():
    report = verify.verify_closed_formulas()
    expected_counts = {
        "pd_s(P_n) = 2": 11, "pd_s(C_n) = 3": 10, "pd_s(K_n) = n": 7,
        "pd_s(T) = number of leaves": 20, "pd_s(block graph) = n - c": 10,
        "pd_s(P_m x P_n) = 3": 9, "pd_s(W_1,4) = 3": 1, "pd_s(W_1,r) = ceil(r/2), r >= 5": 5,
        "pd_s(F_1,3) = pd_s(F_1,4) = 3": 2, "pd_s(F_1,r) = ceil(r/2), r >= 5": 5,
    }
    assert {k: report.checks[k].passed + report.checks[k].failed for k in expected_counts} == expected_counts
    record(3, "closed formulas for paths, cycles, complete, trees, block graphs, grids, wheels, fans", report)


def test_criterion_4_c1_family():
    report = verify.verify_c1_family()
    assert report.checks["pd_s(G(r,t)) = r + 1"].passed + report.checks["pd_s(G(r,t)) = r + 1"].failed == 8
    assert "G_SR(G(r,4)) = K_{r+1} + K_2" in report.checks
    record(4, "G(r,t): pd_s = r + 1, dim_s formula, G_SR(G(r,4)) components", report)


def test_criterion_5_srg_shapes():
    report = verify.verify_srg_shapes()
    wanted = ["(K_n)_SR = K_n", "(T)_SR = K_l(T)", "(C_2k)_SR = k K_2", "(C_2k+1)_SR = C_2k+1", "(Q_3)_SR = 4 K_2"]
    assert all(name in report.checks for name in wanted)
    assert report.checks["(T)_SR = K_l(T)"].passed + report.checks["(T)_SR = K_l(T)"].failed == 10
    record(5, "strong resolving graph shapes up to isomorphism", report)


def test_criterion_6_realizability():
    report = verify.verify_realizability()
    record(6, "comet, realization_A, realization_B attain prescribed (pd_s, dim_s)", report)


def test_criterion_7_unicyclic():
    groups = verify.unicyclic_corpora()
    assert len(groups["tau>=2"]) == 50
    assert len(groups["tau=1"]) > 0 and len(groups["all-majors"]) > 0
    report = verify.verify_unicyclic()
    record(7, "unicyclic: |tau| <= pd_s <= |tau| + 2, |tau| = 1 gives 3, all majors give |tau|", report)


def test_criterion_8_bounds():
    report = verify.verify_bounds(samples=300, seed=5, n_lo=4, n_hi=9)
    assert report.checks["omega(G_SR) <= pd_s"].passed + report.checks["omega(G_SR) <= pd_s"].failed == 300
    record(8, "omega(G_SR) <= pd_s <= min(dim_s + 1, n - D + 1) on 300 random graphs", report)


def test_criterion_9_heuristics():
    report = verify.verify_heuristics()
    for name in ("p1_partition verifies", "p2_partition verifies", "unicyclic_partition verifies"):
        assert report.checks[name].passed > 0
    record(9, "every P1, P2 and unicyclic partition passes the resolving-partition check", report)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
