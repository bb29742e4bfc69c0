import pytest

from alexdim.space import Preorder

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption(
        "--extended", action="store_true", default=False,
        help="also run the n = 5 exhaustive checks",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def sierpinski():
    # a <= b; closed sets {}, {a}, {a,b}
    return Preorder.from_pairs(2, [(0, 1)], labels=("a", "b"))
