"""
Brute-force ground truth for congruences, working on the enumerated semigroup.

Nothing here uses the trace/kernel structure: congruences are union-find
partitions of the element indices closed under multiplication by letters.
"""
from collections import deque
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from app.core.exceptions import SemigroupMismatchError
from app.core.logging_config import logger
from app.services.pperm import PartialPerm
from app.services.semigroup import InverseSemigroup
from app.services.wordgraph import NodePartition, WordGraph
from app.utils.union_find import UnionFind

Pair = Tuple[PartialPerm, PartialPerm]

# blocks of element indices of S
ElementPartition = NodePartition


def pair_closure(ds: InverseSemigroup, pairs: Iterable[Pair]) -> ElementPartition:
    """Least congruence containing ``pairs``, closing merges under left and right letters."""
    right = ds.right
    left = ds.left_cayley()
    uf = UnionFind(len(ds))
    queue = deque((ds.element_index(a), ds.element_index(b)) for a, b in pairs)
    return _close(uf, queue, left, right)


def _close(uf: UnionFind, queue: deque, left, right) -> ElementPartition:
    while queue:
        i, j = queue.popleft()
        if uf.union(i, j):
            queue.extend(zip(right[i], right[j]))
            queue.extend(zip(left[i], left[j]))
    return NodePartition.from_union_find(uf)


def naive_deterministic_closure(g: WordGraph, seeds: Iterable[Tuple[int, int]]) -> Tuple[NodePartition, WordGraph]:
    """Merge seeds, then merge targets of same-block nodes until nothing changes."""
    uf = UnionFind(g.node_count)
    for a, b in seeds:
        g._check_node(a)
        g._check_node(b)
        uf.union(a, b)
    changed = True
    while changed:
        changed = False
        partition = NodePartition.from_union_find(uf)
        for block in partition.blocks:
            first = g.targets[block[0]]
            for node in block[1:]:
                for t, u in zip(first, g.targets[node]):
                    changed |= uf.union(t, u)
    partition = NodePartition.from_union_find(uf)
    return partition, g.quotient(partition)


def centraliser_by_stabilisers(ds: InverseSemigroup) -> List[PartialPerm]:
    """Union over e of the elements of H_e stabilising dom(f) for every idempotent f ≤ e."""
    idempotents = [ds.elements[i] for i in ds.idempotents]
    result = set()
    for e in idempotents:
        domain = e.domain
        below = [f.domain for f in idempotents if f.domain <= domain]
        for s in ds.elements:
            if not s.is_permutation_of(domain):
                continue
            images = s.raw
            if all(frozenset(images[p] for p in d) == d for d in below):
                result.add(s)
    return sorted(result)


class NaiveCongruence:
    """A congruence as an explicit partition of S."""

    def __init__(self, semigroup: InverseSemigroup, partition: ElementPartition, pairs: Optional[Tuple[Pair, ...]]):
        self.semigroup = semigroup
        self.partition = partition
        self.pairs = pairs

    @classmethod
    def generate(cls, ds: InverseSemigroup, pairs: Iterable[Pair]) -> "NaiveCongruence":
        pairs = tuple(pairs)
        logger.info(f"Naive closure of {len(pairs)} pairs on |S| = {len(ds)}")
        partition = pair_closure(ds, pairs)
        logger.info(f"Naive closure has {len(partition)} classes")
        return cls(ds, partition, pairs)

    def nr_classes(self) -> int:
        return len(self.partition)

    def contains(self, a: PartialPerm, b: PartialPerm) -> bool:
        ds = self.semigroup
        return self.partition.same_block(ds.element_index(a), ds.element_index(b))

    def _members(self, block: Sequence[int]) -> Set[PartialPerm]:
        return {self.semigroup.elements[i] for i in block}

    def class_of(self, x: PartialPerm) -> Set[PartialPerm]:
        return self._members(self.partition.block(self.semigroup.element_index(x)))

    def class_reps(self) -> List[PartialPerm]:
        """Least element of every class, classes ordered by their least element index."""
        return [min(self._members(block)) for block in self.partition.blocks]

    def kernel(self) -> Set[PartialPerm]:
        ds = self.semigroup
        blocks = {self.partition.block_of[i] for i in ds.idempotents}
        result = set()
        for b in blocks:
            result |= self._members(self.partition.blocks[b])
        return result

    def trace_classes(self) -> List[List[PartialPerm]]:
        ds = self.semigroup
        classes = {}
        for i in ds.idempotents:
            classes.setdefault(self.partition.block_of[i], []).append(ds.elements[i])
        return sorted(sorted(members) for members in classes.values())

    def _check_same_semigroup(self, other: "NaiveCongruence") -> None:
        if self.semigroup is not other.semigroup:
            raise SemigroupMismatchError("congruences are defined on different semigroups")

    def join(self, other: "NaiveCongruence") -> "NaiveCongruence":
        self._check_same_semigroup(other)
        ds = self.semigroup
        uf = UnionFind(len(ds))
        queue = deque(self.partition.spanning_pairs() + other.partition.spanning_pairs())
        partition = _close(uf, queue, ds.left_cayley(), ds.right)
        pairs = None if self.pairs is None or other.pairs is None else self.pairs + other.pairs
        return NaiveCongruence(ds, partition, pairs)

    def meet(self, other: "NaiveCongruence") -> "NaiveCongruence":
        self._check_same_semigroup(other)
        return NaiveCongruence(self.semigroup, self.partition.meet(other.partition), None)
