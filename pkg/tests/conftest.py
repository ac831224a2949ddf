import pytest

from commgraph.corpus import list_corpus, load_corpus_group
from commgraph.diameter8 import ParamTriple, build_example
from commgraph.fields import field_create


@pytest.fixture(scope="session")
def corpus():
    return {name: load_corpus_group(name).materialize() for name in list_corpus()}


@pytest.fixture(scope="session")
def gf11():
    return field_create(11, 1)


@pytest.fixture(scope="session")
def gf115():
    return field_create(11, 5)


@pytest.fixture(scope="session")
def example_group():
    return build_example(ParamTriple(11, 5, 3221))
