"""Named verification scenarios and their reporting surface."""

import pytest

from riordanlbp.report import Check, ScenarioReport, check_equal
from riordanlbp.scenarios import SCENARIOS, run_scenario


class TestReportPrimitives:
    def test_check_line_formatting(self):
        assert Check("thing", True).line() == "PASS  thing"
        assert Check("thing", False, "boom").line() == "FAIL  thing  (boom)"

    def test_check_equal_scalars_and_nesting(self):
        assert check_equal("x", [1, 2], [1, 2]).passed
        bad = check_equal("x", [[1, 2], [3, 4]], [[1, 2], [3, 5]])
        assert not bad.passed
        assert "index 1" in bad.detail

    def test_check_equal_length_mismatch(self):
        bad = check_equal("x", [1], [1, 2])
        assert not bad.passed
        assert "length" in bad.detail

    def test_scenario_report_surface(self):
        report = ScenarioReport("demo", (Check("a", True), Check("b", False, "d")))
        assert not report.passed
        lines = report.lines()
        assert lines[0] == "scenario demo:"
        assert lines[-1].endswith("1/2 checks passed (FAILED)")
        payload = report.as_dict()
        assert payload["scenario"] == "demo"
        assert payload["checks"][1] == {"name": "b", "passed": False, "detail": "d"}


class TestRunScenario:
    @pytest.mark.parametrize("name", sorted(SCENARIOS))
    def test_each_scenario_passes(self, name):
        (report,) = run_scenario(name, order=12)
        failed = [c.name for c in report.checks if not c.passed]
        assert not failed, failed

    def test_all_runs_every_scenario(self):
        reports = run_scenario("all", order=8)
        assert {r.scenario for r in reports} == set(SCENARIOS)
        assert all(r.passed for r in reports)

    def test_unknown_name_rejected(self):
        with pytest.raises(KeyError):
            run_scenario("nonesuch")
