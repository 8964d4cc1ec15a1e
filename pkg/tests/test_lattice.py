import numpy as np
import pytest

from app.core.exceptions import SemigroupMismatchError, UnsupportedJoinError
from app.services import congruence, lattice
from app.services.oracle import NaiveCongruence
from app.services.pperm import PartialPerm
from app.services.samples import i4_example, random_elements, random_pairs, random_semigroup
from app.services.semigroup import InverseSemigroup


def same_congruence(c, d, ds, rng=None):
    """Equal class counts, traces and kernels, and membership agreement on a sample."""
    assert c.nr_classes() == d.nr_classes()
    assert sorted(map(sorted, c.trace_classes())) == sorted(map(sorted, d.trace_classes()))
    assert c.kernel() == d.kernel()
    if rng is not None:
        for x, y in zip(random_elements(rng, ds, 200), random_elements(rng, ds, 200)):
            assert c.contains(x, y) == d.contains(x, y)


@pytest.fixture(scope="module")
def universal(i4):
    return congruence.compute(i4, [(PartialPerm.empty(4), PartialPerm.identity(4))])


@pytest.fixture(scope="module")
def discrete(i4):
    return congruence.compute(i4, [])


def test_join_with_universal(i4_congruence, universal):
    assert lattice.join(i4_congruence, universal).nr_classes() == 1


def test_join_with_discrete(i4_congruence, discrete, i4):
    same_congruence(lattice.join(i4_congruence, discrete), i4_congruence, i4)


def test_join_is_idempotent(i4_congruence, i4):
    same_congruence(lattice.join(i4_congruence, i4_congruence), i4_congruence, i4)


def test_meet_with_universal(i4_congruence, universal, i4):
    result = lattice.meet(i4_congruence, universal)
    assert result.pairs is None
    same_congruence(result, i4_congruence, i4)


def test_meet_with_discrete(i4_congruence, discrete):
    assert lattice.meet(i4_congruence, discrete).nr_classes() == 209


def test_meet_has_no_pairs_to_join(i4_congruence, universal):
    met = lattice.meet(i4_congruence, universal)
    with pytest.raises(UnsupportedJoinError):
        lattice.join(met, i4_congruence)


def test_different_semigroups_are_rejected(i4_congruence):
    gens, pair = i4_example()
    other = congruence.compute(InverseSemigroup(4, gens), [pair])
    with pytest.raises(SemigroupMismatchError):
        lattice.join(i4_congruence, other)
    with pytest.raises(SemigroupMismatchError):
        lattice.meet(i4_congruence, other)


@pytest.mark.parametrize("seed", range(50))
def test_lattice_against_naive(seed):
    rng = np.random.default_rng(seed)
    ds = random_semigroup(rng, int(rng.integers(3, 5)), limit=400)
    p1 = random_pairs(rng, ds, int(rng.integers(1, 3)))
    p2 = random_pairs(rng, ds, int(rng.integers(1, 3)))
    c1, c2 = congruence.compute(ds, p1), congruence.compute(ds, p2)
    n1, n2 = NaiveCongruence.generate(ds, p1), NaiveCongruence.generate(ds, p2)

    joined = lattice.join(c1, c2)
    same_congruence(joined, n1.join(n2), ds, rng)
    same_congruence(joined, congruence.compute(ds, p1 + p2), ds)
    same_congruence(lattice.meet(c1, c2), n1.meet(n2), ds, rng)

    # absorption
    same_congruence(lattice.meet(c1, lattice.join(c1, c2)), c1, ds, rng)
    same_congruence(n1.join(n1.meet(n2)), n1, ds, rng)


def test_naive_join_and_meet_on_i4(i4, i4_pair):
    c = NaiveCongruence.generate(i4, [i4_pair])
    universal = NaiveCongruence.generate(i4, [(PartialPerm.empty(4), PartialPerm.identity(4))])
    assert c.join(universal).nr_classes() == 1
    assert c.meet(universal).nr_classes() == 57
    assert c.meet(universal).pairs is None
    assert c.join(universal).pairs is not None
