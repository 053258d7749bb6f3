"""Acceptance criteria, one test per criterion.

Each criterion runs the corresponding seeded suites at the stated
sample counts, requires a 100% pass rate (tolerances are exact
equality throughout), enforces the stated wall-clock budget, and
prints one PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -v``.
"""

import time

import pytest

from modtriples.suites import SuiteConfig, run_suite

SEED = 20250810


def _run(criterion: str, budget_s: float, *suites: tuple[str, int], degree=4, height=10):
    started = time.perf_counter()
    failures = []
    total = 0
    for name, samples in suites:
        report = run_suite(
            SuiteConfig(
                seed=SEED, samples=samples, degree_bound=degree, height_bound=height,
                suites=(name,),
            )
        )
        total += len(report.records)
        failures.extend(r for r in report.records if r["verdict"] == "fail")
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < budget_s
    verdict = "PASS" if ok else "FAIL"
    print(f"[{criterion}] {verdict} ({total} checks, {elapsed:.1f}s of {budget_s:.0f}s budget)")
    for record in failures[:3]:
        print(f"    counterexample {record['id']}: {record['counterexample']}")
    assert not failures, f"{criterion}: {len(failures)} failed checks"
    assert elapsed < budget_s, f"{criterion}: {elapsed:.1f}s over the {budget_s:.0f}s budget"


def test_criterion_01_minimum_divisor_characterization():
    _run("criterion 1", 10.0, ("key-lem", 1000))


def test_criterion_02_separation():
    _run("criterion 2", 5.0, ("separation", 500))


def test_criterion_03_composition_closure_and_associativity():
    _run("criterion 3", 60.0, ("composition", 500), ("associativity", 200))


def test_criterion_04_minus_divisor_transfer():
    _run("criterion 4", 60.0, ("minus-transfer", 500))


def test_criterion_05_fixture_regression():
    _run("criterion 5", 5.0, ("fixtures", 1))


def test_criterion_06_bridge_isomorphisms():
    _run("criterion 6", 30.0, ("bridges", 500))


def test_criterion_07_signed_pair_embedding():
    _run("criterion 7", 30.0, ("saturation", 300))


def test_criterion_08_compactification_solver():
    _run("criterion 8", 30.0, ("compactify", 100))


def test_criterion_09_adjunction_transports():
    _run("criterion 9", 30.0, ("adjunctions", 200))


def test_criterion_10_kernel_factorization():
    _run("criterion 10", 20.0, ("kernel", 500), height=20)


def test_criterion_11_point_condition_and_equal_modulus():
    _run("criterion 11", 30.0, ("proper-image", 200), ("equal-modulus", 200))


def test_criterion_12_position_calculus():
    _run("criterion 12", 60.0, ("positions", 300))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
