"""Generating sets used in examples, tests and benchmarks."""
from typing import List, Optional, Tuple

import numpy as np

from app.core.exceptions import EnumerationLimitError
from app.core.logging_config import logger
from app.services.notation import parse_element
from app.services.pperm import UNDEFINED, PartialPerm
from app.services.semigroup import InverseSemigroup

Pair = Tuple[PartialPerm, PartialPerm]

I4_GENERATORS = ("(1 2 3 4)", "(1 2)(3)(4)", "[4 3 2 1]")
I4_PAIR = ("(1)(2)(3)", "(1 2 3)")


def symmetric_inverse_monoid_generators(degree: int) -> List[PartialPerm]:
    """The n-cycle, a transposition and the chain [n ... 1], which generate I_n."""
    cycle = PartialPerm([(p + 1) % degree for p in range(degree)])
    transposition = list(range(degree))
    if degree > 1:
        transposition[0], transposition[1] = 1, 0
    chain = [UNDEFINED] + list(range(degree - 1))
    return [cycle, PartialPerm(transposition), PartialPerm(chain)]


def i4_example() -> Tuple[List[PartialPerm], Pair]:
    gens = [parse_element(text, 4) for text in I4_GENERATORS]
    pair = (parse_element(I4_PAIR[0], 4), parse_element(I4_PAIR[1], 4))
    return gens, pair


def random_partial_perm(rng: np.random.Generator, degree: int, min_rank: int = 0) -> PartialPerm:
    rank = int(rng.integers(min_rank, degree + 1))
    domain = rng.choice(degree, size=rank, replace=False)
    image = rng.choice(degree, size=rank, replace=False)
    images = [UNDEFINED] * degree
    for p, q in zip(domain, image):
        images[int(p)] = int(q)
    return PartialPerm(images)


def random_semigroup(
    rng: np.random.Generator,
    degree: int,
    max_generators: int = 3,
    limit: Optional[int] = None,
    attempts: int = 50,
) -> InverseSemigroup:
    """
    A random inverse semigroup of the given degree with 1..max_generators generators.

    Generators are drawn with rank at least degree - 1 so the semigroups are not
    dominated by their low-rank part. Draws exceeding ``limit`` are discarded.
    """
    for _ in range(attempts):
        count = int(rng.integers(1, max_generators + 1))
        gens = [random_partial_perm(rng, degree, min_rank=max(degree - 1, 0)) for _ in range(count)]
        try:
            return InverseSemigroup(degree, gens, limit=limit)
        except EnumerationLimitError:
            logger.debug(f"Discarding a random semigroup larger than {limit}")
    raise EnumerationLimitError(f"no random semigroup of degree {degree} within {limit} elements")


def random_pairs(rng: np.random.Generator, ds: InverseSemigroup, count: int) -> List[Pair]:
    picks = rng.integers(0, len(ds), size=(count, 2))
    return [(ds.elements[int(i)], ds.elements[int(j)]) for i, j in picks]


def random_elements(rng: np.random.Generator, ds: InverseSemigroup, count: int) -> List[PartialPerm]:
    return [ds.elements[int(i)] for i in rng.integers(0, len(ds), size=count)]
