"""Shared pytest configuration."""

from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the acceptance-criterion PASS/FAIL lines at the end of the run."""
    try:
        from test_acceptance import RESULTS
    except ImportError:  # pragma: no cover
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in RESULTS.values():
        terminalreporter.write_line(line)
