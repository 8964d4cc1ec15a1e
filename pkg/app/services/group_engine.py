"""
Permutation groups living inside a group H-class of a symmetric inverse monoid.

A GroupHandle is anchored at an idempotent f; its elements are the partial
permutations that permute dom(f). Membership, orders and normal closures are
delegated to a sympy PermutationGroup on the positions 0..k-1 of dom(f)
(Schreier-Sims); element lists are materialised on demand and cached.
"""
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from app.core.exceptions import GroupError
from app.services.pperm import UNDEFINED, PartialPerm, compose, inverse


class GroupHandle:
    def __init__(self, base: PartialPerm, generators: Iterable[PartialPerm] = ()):
        if not base.is_idempotent():
            raise GroupError(f"group base {base} is not an idempotent")
        self.base = base
        self.points = tuple(sorted(base.domain))
        self._position = {p: i for i, p in enumerate(self.points)}
        gens = []
        seen = set()
        for g in generators:
            if g.degree != base.degree or not g.is_permutation_of(base.domain):
                raise GroupError(f"{g} is not in the group H-class of {base}")
            if g != base and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)

    # conversions between partial permutations and sympy permutations on positions
    def _to_perm(self, g: PartialPerm) -> Permutation:
        raw = g.raw
        return Permutation([self._position[raw[p]] for p in self.points])

    def _from_array(self, array: Sequence[int]) -> PartialPerm:
        images = [UNDEFINED] * self.base.degree
        for i, p in enumerate(self.points):
            images[p] = self.points[array[i]]
        return PartialPerm._make(tuple(images))

    @cached_property
    def _group(self) -> Optional[PermutationGroup]:
        if len(self.points) < 2 or not self.generators:
            return None
        return PermutationGroup([self._to_perm(g) for g in self.generators])

    def order(self) -> int:
        return 1 if self._group is None else int(self._group.order())

    def is_trivial(self) -> bool:
        return self.order() == 1

    def contains(self, p: PartialPerm) -> bool:
        if p.degree != self.base.degree or not p.is_permutation_of(self.base.domain):
            return False
        if "_element_set" in self.__dict__:
            return p in self._element_set
        if self._group is None:
            return p == self.base
        return bool(self._group.contains(self._to_perm(p)))

    def __contains__(self, p: PartialPerm) -> bool:
        return self.contains(p)

    @cached_property
    def _elements(self) -> List[PartialPerm]:
        if self._group is None:
            return [self.base]
        return sorted(self._from_array(perm.array_form) for perm in self._group.generate())

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self._elements)

    def elements(self) -> List[PartialPerm]:
        """All elements in canonical order; the base comes first."""
        self._element_set
        return list(self._elements)

    def conjugate(self, c: PartialPerm) -> "GroupHandle":
        """The group c^-1 G c, anchored at c^-1 f c; c must map dom(f) injectively."""
        c_inv = inverse(c)
        base = compose(compose(c_inv, self.base), c)
        if base.rank != self.base.rank:
            raise GroupError(f"conjugating by {c} does not preserve the H-class of {self.base}")
        return GroupHandle(base, [compose(compose(c_inv, g), c) for g in self.generators])

    def __repr__(self) -> str:
        return f"GroupHandle(base={self.base}, order={self.order()})"


def generate(f: PartialPerm, gens: Iterable[PartialPerm]) -> GroupHandle:
    """Group generated by ``gens``, sifting out generators that are already members."""
    gens = list(gens)
    handle = GroupHandle(f)
    for g in gens:
        if not handle.contains(g):
            if g.degree != f.degree or not g.is_permutation_of(f.domain):
                raise GroupError(f"{g} is not in the group H-class of {f}")
            handle = GroupHandle(f, handle.generators + (g,))
    return handle


def contains(G: GroupHandle, p: PartialPerm) -> bool:
    return G.contains(p)


def _check_subset(G: GroupHandle, elements: Iterable[PartialPerm], what: str) -> None:
    for x in elements:
        if not G.contains(x):
            raise GroupError(f"{what} {x} is not in the group at {G.base}")


def normal_closure(G: GroupHandle, seeds: Iterable[PartialPerm]) -> GroupHandle:
    """Least normal subgroup of G containing ``seeds``."""
    seeds = [s for s in seeds if s != G.base]
    _check_subset(G, seeds, "seed")
    if not seeds or G._group is None:
        return GroupHandle(G.base)
    closure = G._group.normal_closure([G._to_perm(s) for s in seeds])
    gens = [G._from_array(p.array_form) for p in closure.generators]
    return GroupHandle(G.base, gens)


def coset_transversal(G: GroupHandle, N: GroupHandle) -> List[PartialPerm]:
    """Least element of every coset Ng, in canonical order; the first is the identity f."""
    if N.base != G.base:
        raise GroupError(f"groups at {G.base} and {N.base} have different identities")
    _check_subset(G, N.generators, "subgroup generator")
    subgroup = N.elements()
    covered = set()
    transversal = []
    for g in G.elements():
        if g in covered:
            continue
        transversal.append(g)
        covered.update(compose(n, g) for n in subgroup)
    return transversal


def subgroup_where(G: GroupHandle, predicate: Callable[[PartialPerm], bool]) -> GroupHandle:
    """Subgroup of the elements satisfying ``predicate``; the predicate must define a subgroup."""
    return generate(G.base, (g for g in G.elements() if predicate(g)))


def intersect(A: GroupHandle, B: GroupHandle) -> GroupHandle:
    if A.base != B.base:
        raise GroupError(f"groups at {A.base} and {B.base} have different identities")
    small, large = (A, B) if A.order() <= B.order() else (B, A)
    return subgroup_where(small, large.contains)
