import pytest

from weylsep import rootsys


def pytest_addoption(parser):
    parser.addoption(
        "--long",
        action="store_true",
        default=False,
        help="run the larger sweeps (S6 surjectivity, S6 Sidorenko)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "long: large sweeps, enabled with --long")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long"):
        return
    skip = pytest.mark.skip(reason="needs --long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


# systems are immutable and heavily cached, so share them per session
_SYSTEMS = {}


def shared_system(spec: str) -> rootsys.RootSystem:
    if spec not in _SYSTEMS:
        _SYSTEMS[spec] = rootsys.parse_type(spec)
    return _SYSTEMS[spec]


@pytest.fixture
def system():
    return shared_system
