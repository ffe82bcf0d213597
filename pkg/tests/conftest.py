import pytest

from coevents import SampleSpace, load_bundled, parse_scenario

# one line per acceptance criterion, printed after the test summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section('acceptance criteria')
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope='session')
def acceptance_report():
    return ACCEPTANCE_LINES


@pytest.fixture
def xy():
    return SampleSpace(['x', 'y'])


@pytest.fixture
def abc():
    return SampleSpace(['a', 'b', 'c'])


@pytest.fixture
def two_slit():
    return parse_scenario(load_bundled('two_slit'))


@pytest.fixture
def three_slit():
    return parse_scenario(load_bundled('three_slit'))


@pytest.fixture
def ab_correlation():
    return parse_scenario(load_bundled('ab_correlation'))
