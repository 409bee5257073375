import pytest

from critlab.enumeration import generate_connected, generate_graphs


@pytest.fixture(scope="session")
def connected():
    """Cached access to the connected iso-class lists by vertex count."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(generate_connected(n))
        return cache[n]

    return get


@pytest.fixture(scope="session")
def allgraphs():
    """Cached access to the all-graphs (incl. disconnected) lists."""
    cache: dict[int, list] = {}

    def get(n: int) -> list:
        if n not in cache:
            cache[n] = list(generate_graphs(n))
        return cache[n]

    return get
