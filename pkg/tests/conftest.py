import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import HealthCheck, settings  # noqa: E402

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        n = props["criterion"]
        outcome = "PASS" if report.outcome == "passed" else "FAIL"
        _ACCEPTANCE[n] = (outcome, props.get("title", ""), props.get("timing", ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        outcome, title, timing = _ACCEPTANCE[n]
        extra = f" [{timing}]" if timing else ""
        terminalreporter.write_line(f"criterion {n:>2}: {outcome}  {title}{extra}")
