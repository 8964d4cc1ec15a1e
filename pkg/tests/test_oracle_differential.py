"""The quotient engine against the brute-force closure on random inverse semigroups."""
import numpy as np
import pytest

from app.services import congruence
from app.services.oracle import NaiveCongruence, naive_deterministic_closure, pair_closure
from app.services.samples import random_elements, random_pairs, random_semigroup
from app.services.wordgraph import quotient_closure


def random_instance(seed):
    rng = np.random.default_rng(seed)
    degree = int(rng.integers(3, 6))
    ds = random_semigroup(rng, degree, limit=600)
    pairs = random_pairs(rng, ds, int(rng.integers(1, 4)))
    return rng, ds, pairs


def normalised(classes):
    return sorted(sorted(members) for members in classes)


@pytest.mark.parametrize("seed", range(200))
def test_engines_agree(seed):
    rng, ds, pairs = random_instance(seed)
    fast = congruence.compute(ds, pairs)
    naive = NaiveCongruence.generate(ds, pairs)

    assert fast.nr_classes() == naive.nr_classes()
    assert normalised(fast.trace_classes()) == naive.trace_classes()
    assert fast.kernel() == naive.kernel()

    xs = random_elements(rng, ds, 500)
    ys = random_elements(rng, ds, 500)
    for x, y in zip(xs, ys):
        assert fast.contains(x, y) == naive.contains(x, y)

    for x in xs[:10]:
        assert fast.class_of(x) == naive.class_of(x)
        assert congruence.kernel_contains(fast, x) == (x in naive.kernel())

    reps = fast.class_reps()
    assert len({naive.partition.block_of[ds.element_index(r)] for r in reps}) == len(reps)


@pytest.mark.parametrize("seed", range(50))
def test_quotient_closure_matches_fixpoint(seed):
    _, ds, pairs = random_instance(seed)
    seeds = congruence.trace_seed_pairs(ds, pairs)
    fast, fast_quotient = quotient_closure(ds.gamma, seeds)
    slow, slow_quotient = naive_deterministic_closure(ds.gamma, seeds)
    assert fast == slow
    assert fast_quotient == slow_quotient


def test_pair_closure_on_i4(i4, i4_pair):
    assert len(pair_closure(i4, [i4_pair])) == 57
    assert len(pair_closure(i4, [])) == 209
