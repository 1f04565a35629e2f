import os
import re

from hypothesis import settings

# the acceptance module runs its own seeded 1000-case sweep; property tests
# default to a quick profile, HYPOTHESIS_PROFILE=thorough for a longer run
settings.register_profile("quick", max_examples=40, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "quick"))

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2).replace("_", " "))
    if report.when == "call" or report.outcome != "passed":
        _results[key] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_results.items()):
        terminalreporter.write_line(f"criterion {n:2d}  {outcome}  {name}")
