"""Algebraic laws the semigroup and congruence structures must satisfy."""
import numpy as np
import pytest

from app.services import congruence
from app.services.pperm import compose, inverse, left_identity, meet_idem, natural_leq, right_identity
from app.services.samples import random_elements


@pytest.fixture(scope="module")
def sample(i4):
    rng = np.random.default_rng(7)
    return random_elements(rng, i4, 60)


def test_inverse_semigroup_axioms(i4):
    idempotents = [i4.elements[i] for i in i4.idempotents]
    for x in i4:
        x_inv = inverse(x)
        assert x_inv in i4
        assert compose(compose(x, x_inv), x) == x
        assert compose(compose(x_inv, x), x_inv) == x_inv
    for e in idempotents:
        for f in idempotents:
            assert compose(e, f) == compose(f, e) == meet_idem(e, f)


def test_natural_order_is_compatible(i4, sample):
    pairs = [(s, t) for s in sample for t in sample if natural_leq(s, t)]
    assert pairs
    for s, t in pairs:
        for u in sample:
            assert natural_leq(compose(s, u), compose(t, u))
            assert natural_leq(compose(u, s), compose(u, t))
        assert natural_leq(inverse(s), inverse(t))


def test_location(i4, sample):
    for s in sample:
        for t in sample:
            st = compose(s, t)
            in_r_s_and_l_t = left_identity(st) == left_identity(s) and right_identity(st) == right_identity(t)
            assert in_r_s_and_l_t == (right_identity(s) == left_identity(t))


def test_trace_is_normal(i4_congruence, i4):
    c = i4_congruence
    for members in c.trace_classes():
        for x in i4.alphabet:
            images = {i4.node_of(compose(compose(inverse(x), e), x)) for e in members}
            assert len({c.trace.block_of[node] for node in images}) == 1


def test_kernel_is_self_conjugate(i4_congruence, i4, sample):
    kernel = i4_congruence.kernel()
    for k in kernel:
        for x in sample[:10]:
            assert compose(compose(inverse(x), k), x) in kernel


def test_quotient_graph_is_deterministic(i4_congruence, i4):
    c = i4_congruence
    assert i4.gamma.is_compatible(c.trace)
    assert c.quotient == i4.gamma.quotient(c.trace)


def test_phi_is_a_functor_on_composable_pairs(i4_congruence, sample):
    c = i4_congruence
    checked = 0
    for y in sample:
        for z in sample:
            if right_identity(y) != left_identity(z):
                continue
            assert congruence.phi(c, compose(y, z)) == compose(congruence.phi(c, y), congruence.phi(c, z))
            checked += 1
    assert checked


def test_phi_fibres_over_the_normal_subgroup(i4_congruence, i4):
    # k in H_f is related to f exactly when it lies in N
    c = i4_congruence
    for comp in c.components:
        f = comp.meet
        block = c.trace.blocks[c.trace.block_of[i4.node_of(f)]]
        fibre = c.class_of(i4.nodes[block[-1]])
        for k in comp.group.elements():
            related = c.contains(k, f)
            assert related == comp.normal_subgroup.contains(k)
            assert related == (k in fibre)
