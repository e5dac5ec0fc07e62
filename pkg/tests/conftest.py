import pytest

from nctb.generators import cycle, path, random_cactus, random_connected, random_interval, random_tree


@pytest.fixture(scope="session")
def small_tree_corpus():
    return [random_tree(n, seed) for seed, n in enumerate(range(4, 16))]


@pytest.fixture(scope="session")
def small_cactus_corpus():
    return [random_cactus(n, seed) for seed, n in enumerate(range(5, 21))]


@pytest.fixture(scope="session")
def small_interval_corpus():
    return [random_interval(n, seed) for seed, n in enumerate(range(4, 16))]


@pytest.fixture(scope="session")
def tiny_graph_corpus():
    """Connected graphs on up to 7 vertices for cross-checking the solver."""
    from nctb.generators import complete_bipartite

    graphs = [path(2), path(3), path(5), cycle(3), cycle(5), cycle(6),
              complete_bipartite(2, 3), random_tree(7, 11), random_connected(6, 5, 0.3),
              random_connected(7, 9, 0.35)]
    return graphs
