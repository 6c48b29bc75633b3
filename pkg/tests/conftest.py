import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance criterion verdicts even under output capture."""
    for name, module in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] != "test_acceptance" or module is None:
            continue
        lines = getattr(module, "CRITERION_LINES", [])
        if lines:
            terminalreporter.section("acceptance criteria")
            for line in lines:
                terminalreporter.write_line(line)
        return
