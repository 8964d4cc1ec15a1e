import pytest

from app.services import congruence
from app.services.notation import parse_element
from app.services.samples import i4_example
from app.services.semigroup import InverseSemigroup


def pp(text: str, degree: int = 4):
    return parse_element(text, degree)


@pytest.fixture(scope="session")
def i4():
    gens, _ = i4_example()
    return InverseSemigroup(4, gens)


@pytest.fixture(scope="session")
def i4_pair():
    _, pair = i4_example()
    return pair


@pytest.fixture(scope="session")
def i4_congruence(i4, i4_pair):
    return congruence.compute(i4, [i4_pair])


@pytest.fixture(scope="session")
def c2():
    """The cyclic group of order 2 acting on {1, 2}."""
    return InverseSemigroup(2, [pp("(1 2)", 2)])
