import pytest

from quivrep.scenarios import SCENARIOS
from quivrep.suites import SUITES


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_scenario_passes(name):
    report = SCENARIOS[name]()
    failing = [r for r in report.results if r["status"] != "pass"]
    assert report.ok, failing


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    report = SUITES[name](seed=2)
    failing = [r for r in report.results if r["status"] != "pass"]
    assert report.ok, failing
