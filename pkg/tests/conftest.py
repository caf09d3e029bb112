"""Shared test configuration: acceptance summary lines and hypothesis profile."""

import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

CRITERIA_LABELS = {
    1: "three-route table reproduction for the six small graphs",
    2: "path/cycle closed forms and Fibonacci/Lucas totals",
    3: "cospectral pair: equal ensembles, unequal Tutte",
    4: "spectral dictionary on a random graph corpus",
    5: "top-face recursion exactness on the fixture corpus",
    6: "incidence separation and correction-term degree",
    7: "independence-ensemble witnesses and complement recovery",
    8: "perfect coefficients and recursion checks",
    9: "reducibility hierarchy fixtures",
    10: "scale identities for complete graphs and hypercubes",
    11: "engine properties: determinism, multiplicativity, support",
}

_CRITERION_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION_RE.search(getattr(report, "nodeid", ""))
            if match and getattr(report, "when", "call") in ("call", "collect"):
                number = int(match.group(1))
                tag = "PASS" if status == "passed" else status.upper()
                if status in ("failed", "error"):
                    tag = "FAIL"
                outcomes[number] = tag
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        label = CRITERIA_LABELS.get(number, "")
        terminalreporter.write_line(
            f"ACCEPTANCE {number}: {outcomes[number]} — {label}"
        )
