"""Verification harness: suite execution, report shape, determinism."""

import pytest

from binsum.verify import Bounds, CaseResult, VerificationReport, run_suite


def make_case(case_id, status):
    return CaseResult(case_id, (("k", "1"),), "ok", "ok", status, "cross-formula")


class TestReportShape:
    def test_status_reflects_failures(self):
        passing = VerificationReport("x", (make_case("a", "pass"),))
        failing = VerificationReport("x", (make_case("a", "pass"), make_case("b", "fail")))
        assert passing.status == "pass"
        assert failing.status == "fail"

    def test_experimental_never_gates(self):
        report = VerificationReport(
            "x", (make_case("a", "pass"), make_case("b", "experimental"))
        )
        assert report.status == "pass"
        assert report.counts == {"pass": 1, "fail": 0, "experimental": 1}

    def test_to_dict_shape(self):
        report = VerificationReport("x", (make_case("a", "pass"),))
        doc = report.to_dict()
        assert set(doc) == {"suite", "status", "counts", "wall_time", "cases"}
        case = doc["cases"][0]
        assert set(case) == {
            "case_id",
            "inputs",
            "expected",
            "actual",
            "status",
            "provenance",
        }
        assert doc["wall_time"] is None


class TestRunSuite:
    def test_formulas_small_grid(self):
        report = run_suite("formulas", Bounds(k_max=3, q_max=3, m_max=15, j_max=10))
        assert report.status == "pass"
        assert report.counts["fail"] == 0
        # rational-q cases are reported but do not gate
        assert report.counts["experimental"] == 2

    def test_identities(self):
        report = run_suite("identities", Bounds(j_max=12))
        assert report.status == "pass"

    def test_appendix(self):
        report = run_suite("appendix")
        assert report.status == "pass"

    def test_oeis_offline(self, tmp_path):
        report = run_suite("oeis", offline=True, cache_dir=str(tmp_path))
        assert report.status == "pass"
        ids = [case.case_id for case in report.cases]
        assert "oeis/A027471" in ids
        assert "oeis/A034839-triangle" in ids

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("everything")

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            run_suite("formulas", Bounds(k_max=-1))

    def test_cases_sorted(self):
        report = run_suite("appendix")
        ids = [case.case_id for case in report.cases]
        assert ids == sorted(ids)

    def test_deterministic(self):
        first = run_suite("identities", Bounds(j_max=6))
        second = run_suite("identities", Bounds(j_max=6))
        assert first.to_dict() == second.to_dict()
        assert first.to_json() == second.to_json()

    def test_timing_requested(self):
        report = run_suite("appendix", timing=True)
        assert isinstance(report.wall_time, float)
        assert report.to_dict()["wall_time"] is not None

    def test_oeis_online_failure_reported_not_raised(self, tmp_path, monkeypatch):
        import urllib.error

        def boom(url, timeout):
            raise urllib.error.URLError("unreachable")

        monkeypatch.setattr("urllib.request.urlopen", boom)
        report = run_suite("oeis", offline=False, cache_dir=str(tmp_path))
        assert report.status == "fail"
        assert all("TransportError" in c.actual for c in report.cases if c.status == "fail")
