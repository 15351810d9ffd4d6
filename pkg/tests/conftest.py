import pytest

from vangraph import harness


@pytest.fixture(scope="session")
def analyses():
    """Memoized per-spec analysis so expensive tables are built once."""
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = harness.analyze(spec)
        return cache[spec]

    return get
