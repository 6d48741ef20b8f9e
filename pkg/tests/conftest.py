import pytest

from eqloc.presets import PRESETS, preset

ALL_PRESETS = list(PRESETS)
SMALL_PRESETS = [n for n in ALL_PRESETS if preset(n).order <= 8]
UP_TO_12 = [n for n in ALL_PRESETS if preset(n).order <= 12]


@pytest.fixture(params=ALL_PRESETS)
def any_group(request):
    return preset(request.param)


@pytest.fixture(params=SMALL_PRESETS)
def small_group(request):
    return preset(request.param)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
