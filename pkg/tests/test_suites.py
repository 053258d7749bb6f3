"""Suite runner plumbing: config validation, registry, record shape."""

import pytest

from modtriples import ParseError
from modtriples.suites import SUITES, SuiteConfig, run_suite


class TestConfig:
    def test_unknown_suite_rejected(self):
        with pytest.raises(ParseError):
            SuiteConfig(suites=("nope",))

    def test_bounds_validated(self):
        with pytest.raises(ParseError):
            SuiteConfig(samples=0)
        with pytest.raises(ParseError):
            SuiteConfig(degree_bound=0)
        with pytest.raises(ParseError):
            SuiteConfig(seed=-1)
        with pytest.raises(ParseError):
            SuiteConfig(seed=2**64)

    def test_all_expands_to_registry(self):
        assert SuiteConfig(suites=("all",)).resolved_suites() == tuple(SUITES)

    def test_subset_kept_in_order(self):
        cfg = SuiteConfig(suites=("separation", "key-lem"))
        assert cfg.resolved_suites() == ("separation", "key-lem")


class TestReport:
    def test_record_shape(self):
        report = run_suite(SuiteConfig(seed=5, samples=3, suites=("separation",)))
        data = report.to_json()
        assert data["schema"] == 1
        assert data["summary"]["total"] == len(data["records"]) == 3
        for record in data["records"]:
            assert set(record) == {"id", "inputs", "verdict", "counterexample"}
            assert record["verdict"] in ("pass", "fail")
            assert (record["counterexample"] is None) == (record["verdict"] == "pass")

    def test_suite_isolation(self):
        # a suite's records do not depend on which other suites run
        solo = run_suite(SuiteConfig(seed=9, samples=4, suites=("key-lem",))).records
        paired = run_suite(
            SuiteConfig(seed=9, samples=4, suites=("separation", "key-lem"))
        ).records
        tail = [r for r in paired if r["id"].startswith("key-lem")]
        assert solo == tail
