from app.core.exceptions import SemigroupMismatchError, UnsupportedJoinError
from app.core.logging_config import logger
from app.services.congruence import Congruence, assemble, normal_subgroup_generators
from app.services.group_engine import GroupHandle, intersect, normal_closure, subgroup_where
from app.services.pperm import PartialPerm
from app.services.wordgraph import quotient_closure


def _check_same_semigroup(c1: Congruence, c2: Congruence) -> None:
    if c1.semigroup is not c2.semigroup:
        logger.error("Lattice operation on congruences of different semigroups")
        raise SemigroupMismatchError("congruences are defined on different semigroups")


def join(c1: Congruence, c2: Congruence) -> Congruence:
    """
    Least congruence containing both.

    The trace is the closure of the two traces taken together, and the normal
    subgroups come from the union of the generating pairs.

    Raises:
        SemigroupMismatchError: If the congruences live on different semigroups.
        UnsupportedJoinError: If either congruence has no generating pairs.
    """
    _check_same_semigroup(c1, c2)
    if c1.pairs is None or c2.pairs is None:
        logger.error("Join requested for a congruence without generating pairs")
        raise UnsupportedJoinError("join needs generating pairs for both congruences")
    ds = c1.semigroup
    pairs = c1.pairs + c2.pairs
    logger.info(f"Joining congruences with {len(c1.pairs)} and {len(c2.pairs)} pairs")
    seeds = c1.trace.spanning_pairs() + c2.trace.spanning_pairs()
    trace, quotient = quotient_closure(ds.gamma, seeds)

    def normal_subgroup_for(f: PartialPerm, group: GroupHandle) -> GroupHandle:
        return normal_closure(group, normal_subgroup_generators(ds, f, pairs))

    result = assemble(ds, trace, quotient, pairs, normal_subgroup_for)
    logger.info(f"Join has {result.nr_classes()} classes")
    return result


def meet(c1: Congruence, c2: Congruence) -> Congruence:
    """
    Intersection of two congruences.

    The trace is the blockwise intersection of the traces; at each meet
    idempotent f the normal subgroup is the intersection of the two groups
    H_f ∩ f/ρ. The result has no generating pairs.
    """
    _check_same_semigroup(c1, c2)
    ds = c1.semigroup
    logger.info("Computing the meet of two congruences")
    trace = c1.trace.meet(c2.trace)
    quotient = ds.gamma.quotient(trace)

    def normal_subgroup_for(f: PartialPerm, group: GroupHandle) -> GroupHandle:
        first = subgroup_where(group, lambda g: c1.contains(g, f))
        second = subgroup_where(group, lambda g: c2.contains(g, f))
        return intersect(first, second)

    result = assemble(ds, trace, quotient, None, normal_subgroup_for)
    logger.info(f"Meet has {result.nr_classes()} classes")
    return result
