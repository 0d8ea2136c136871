import pytest
from hypothesis import settings

settings.register_profile("repo", deadline=None, max_examples=100)
settings.load_profile("repo")


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run long oracle sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running oracle sweep (enable with --slow)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_acceptance_key = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one criterion outcome; lines are repeated in the terminal summary."""
    lines = request.config.stash.setdefault(_acceptance_key, [])

    def report(number, title, ok, elapsed, limit, detail=""):
        timed_ok = ok and elapsed < limit
        line = f"{'PASS' if timed_ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s, limit {limit}s)"
        if detail:
            line += f" -- {detail}"
        lines.append((number, line))
        print(line)
        return timed_ok

    return report


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
