import pytest

from softtop import corpus
from softtop.search import SplitMix64, make_context, random_space_from


@pytest.fixture(scope="session")
def ex33():
    return corpus.example_3_3()


@pytest.fixture(scope="session")
def ex36():
    return corpus.example_3_6()


@pytest.fixture(scope="session")
def ex38():
    return corpus.example_3_8()


@pytest.fixture(scope="session")
def ex43():
    return corpus.example_4_3()


@pytest.fixture(scope="session")
def ex44():
    return corpus.example_4_4()


@pytest.fixture(scope="session")
def ex47():
    return corpus.example_4_7()


@pytest.fixture(scope="session")
def random_spaces():
    """A small seeded batch of random spaces for property tests."""
    rng = SplitMix64(0xDECAF)
    spaces = []
    for _ in range(40):
        ctx = make_context(1 + rng.below(3), 1 + rng.below(2))
        spaces.append(random_space_from(rng, ctx, rng.below(101) / 100.0))
    return spaces
