import util


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Replay the acceptance scoreboard after capture is torn down."""
    if util.ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance scoreboard")
        for line in util.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
