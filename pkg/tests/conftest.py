import pytest

from h2r_solitons.builders import build_bowl, build_catenoid

NECKS = (0.1, 1.0, 3.0)

# lines collected by the acceptance suite, echoed at the end of the run
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def bowl():
    return build_bowl(12.0)


@pytest.fixture(scope="session")
def catenoids():
    return {r0: build_catenoid(r0) for r0 in NECKS}


@pytest.fixture(scope="session")
def catenoid(catenoids):
    return catenoids[1.0]


@pytest.fixture(scope="session")
def built_profiles(bowl, catenoids):
    out = {"bowl": bowl}
    for r0, c in catenoids.items():
        out[f"catenoid_{r0:g}"] = c.glued()
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
