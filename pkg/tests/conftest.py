import pytest

from graphprox import corpus_graphs, enum_rooted_forests


@pytest.fixture(scope="session")
def forest_corpus():
    return corpus_graphs("forests", seed=1, count=200)


@pytest.fixture(scope="session")
def forest_int_corpus():
    return corpus_graphs("forests-int", seed=1, count=200)


@pytest.fixture(scope="session")
def forest_censuses(forest_corpus):
    return [(g, enum_rooted_forests(g)) for g in forest_corpus]


@pytest.fixture(scope="session")
def forest_int_censuses(forest_int_corpus):
    return [(g, enum_rooted_forests(g)) for g in forest_int_corpus]


@pytest.fixture(scope="session")
def reliability_corpus():
    return corpus_graphs("reliability", seed=1, count=200)


@pytest.fixture(scope="session")
def routes_corpus():
    return corpus_graphs("routes", seed=1, count=200)


@pytest.fixture(scope="session")
def paths_corpus():
    return corpus_graphs("paths", seed=1, count=200)
