import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from hypothesis import settings

settings.register_profile("modec", deadline=None, print_blob=True)
settings.load_profile("modec")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.LINES:
        terminalreporter.section("acceptance criteria")
        for line in module.LINES:
            terminalreporter.write_line(line)
