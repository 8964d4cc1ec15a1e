"""
The maximum idempotent-separating congruence μ of an inverse semigroup of
partial permutations.

Its trace is the identity and its kernel is the centraliser of the
idempotents, which is read off the atoms of the boolean algebra generated by
the domains of S: s centralises E(S) iff it maps every atom inside dom(s)
onto itself.
"""
from typing import FrozenSet, List, Tuple

import numpy as np

from app.core.logging_config import logger
from app.services.pperm import PartialPerm, compose, inverse, right_identity
from app.services.semigroup import InverseSemigroup
from app.services.wordgraph import NodePartition


class AtomPartition(NodePartition):
    """Partition of the points 0..n-1 into the atoms of B(S)."""

    __slots__ = ()

    @property
    def atoms(self) -> List[FrozenSet[int]]:
        return [frozenset(block) for block in self.blocks]

    def atoms_within(self, points: FrozenSet[int]) -> List[Tuple[int, ...]]:
        """Atoms contained in ``points``, which must be a union of atoms."""
        return [block for block in self.blocks if block[0] in points]


def boolean_atoms(ds: InverseSemigroup) -> AtomPartition:
    """Points are in one atom iff they lie in exactly the same idempotent domains."""
    idempotents = [ds.elements[i] for i in ds.idempotents]
    membership = np.zeros((ds.degree, len(idempotents)), dtype=bool)
    for j, e in enumerate(idempotents):
        for p in e.domain:
            membership[p, j] = True
    _, labels = np.unique(membership, axis=0, return_inverse=True)
    atoms = AtomPartition([int(label) for label in np.ravel(labels)])
    logger.debug(f"Boolean algebra of domains has {len(atoms)} atoms")
    return atoms


def in_centraliser(atoms: AtomPartition, s: PartialPerm) -> bool:
    images = s.raw
    for block in atoms.atoms_within(s.domain):
        if frozenset(images[p] for p in block) != frozenset(block):
            return False
    return True


def centraliser(ds: InverseSemigroup) -> List[PartialPerm]:
    """C_S(E(S)) in canonical order."""
    atoms = boolean_atoms(ds)
    result = [s for s in ds.elements if in_centraliser(atoms, s)]
    logger.info(f"Centraliser of the idempotents has {len(result)} elements")
    return sorted(result)


def mu_contains(ds: InverseSemigroup, a: PartialPerm, b: PartialPerm, atoms: AtomPartition = None) -> bool:
    ds.element_index(a)
    ds.element_index(b)
    if right_identity(a) != right_identity(b):
        return False
    if atoms is None:
        atoms = boolean_atoms(ds)
    return in_centraliser(atoms, compose(a, inverse(b)))


def _class_key(atoms: AtomPartition, s: PartialPerm) -> tuple:
    images = s.raw
    moves = tuple(
        (block[0], frozenset(images[p] for p in block)) for block in atoms.atoms_within(s.domain)
    )
    return right_identity(s), moves


def mu_nr_classes(ds: InverseSemigroup) -> int:
    """Number of μ-classes; a and b share a class iff they agree on image and on every atom."""
    atoms = boolean_atoms(ds)
    return len({_class_key(atoms, s) for s in ds.elements})


def is_trivial(ds: InverseSemigroup) -> bool:
    return mu_nr_classes(ds) == len(ds)
