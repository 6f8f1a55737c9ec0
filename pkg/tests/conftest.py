import pytest


def pytest_collection_modifyitems(config, items):
    # The acceptance gate sweeps every complex registered by the rest of
    # the suite, so it has to run after them.
    last = [it for it in items if "test_acceptance" in it.nodeid]
    rest = [it for it in items if "test_acceptance" not in it.nodeid]
    items[:] = rest + last


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from _registry import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance checks")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
