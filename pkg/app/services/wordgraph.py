from collections import deque
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

from app.core.exceptions import InvalidNodeError
from app.core.logging_config import logger
from app.utils.union_find import UnionFind

DOT_COLOURS = ("magenta", "blue", "orange", "darkgreen", "red", "cyan", "brown", "gray")


class NodePartition:
    """
    A partition of 0..n-1 with canonical block ids.

    Block ids are 0..k-1, numbered in order of the least node of each block, so
    two partitions are equal exactly when their ``block_of`` tuples are.
    """

    __slots__ = ("block_of", "blocks")

    def __init__(self, labels: Sequence[Hashable]):
        renumber = {}
        block_of = []
        blocks: List[List[int]] = []
        for node, label in enumerate(labels):
            block = renumber.get(label)
            if block is None:
                block = renumber[label] = len(blocks)
                blocks.append([])
            block_of.append(block)
            blocks[block].append(node)
        self.block_of: Tuple[int, ...] = tuple(block_of)
        self.blocks: Tuple[Tuple[int, ...], ...] = tuple(tuple(b) for b in blocks)

    @classmethod
    def discrete(cls, size: int) -> "NodePartition":
        return cls(range(size))

    @classmethod
    def from_union_find(cls, uf: UnionFind) -> "NodePartition":
        return cls(uf.labels())

    @property
    def node_count(self) -> int:
        return len(self.block_of)

    def __len__(self) -> int:
        return len(self.blocks)

    def block(self, node: int) -> Tuple[int, ...]:
        return self.blocks[self.block_of[node]]

    def same_block(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def refines(self, other: "NodePartition") -> bool:
        """Every block of self lies inside a block of other."""
        return all(other.same_block(b[0], node) for b in self.blocks for node in b)

    def meet(self, other: "NodePartition") -> "NodePartition":
        """Blockwise intersection."""
        return NodePartition(list(zip(self.block_of, other.block_of)))

    def spanning_pairs(self) -> List[Tuple[int, int]]:
        """Pairs (least node, other node) that generate the partition."""
        return [(b[0], node) for b in self.blocks for node in b[1:]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodePartition):
            return NotImplemented
        return self.block_of == other.block_of

    def __hash__(self) -> int:
        return hash(self.block_of)

    def __repr__(self) -> str:
        return f"NodePartition({[list(b) for b in self.blocks]})"


class WordGraph:
    """Complete deterministic word graph: ``targets[node][letter]`` is the unique target."""

    __slots__ = ("node_count", "alphabet_size", "targets")

    def __init__(self, node_count: int, alphabet_size: int, targets: Sequence[Sequence[int]]):
        if len(targets) != node_count:
            raise InvalidNodeError(f"expected {node_count} rows of targets, got {len(targets)}")
        rows = []
        for node, row in enumerate(targets):
            row = tuple(row)
            if len(row) != alphabet_size:
                raise InvalidNodeError(f"node {node} has {len(row)} edges, expected {alphabet_size}")
            for target in row:
                if not 0 <= target < node_count:
                    raise InvalidNodeError(f"edge from node {node} targets {target}, out of range")
            rows.append(row)
        self.node_count = node_count
        self.alphabet_size = alphabet_size
        self.targets: Tuple[Tuple[int, ...], ...] = tuple(rows)

    def target(self, node: int, letter: int) -> int:
        self._check_node(node)
        if not 0 <= letter < self.alphabet_size:
            raise InvalidNodeError(f"letter {letter} out of range")
        return self.targets[node][letter]

    def _check_node(self, node: int) -> None:
        if not 0 <= node < self.node_count:
            raise InvalidNodeError(f"node {node} out of range")

    def follow_path(self, start: int, word: Sequence[int]) -> int:
        return follow_path(self, start, word)

    def is_compatible(self, partition: NodePartition) -> bool:
        """True iff the quotient by ``partition`` is deterministic."""
        block_of = partition.block_of
        for block in partition.blocks:
            expected = [block_of[t] for t in self.targets[block[0]]]
            for node in block[1:]:
                if [block_of[t] for t in self.targets[node]] != expected:
                    return False
        return True

    def quotient(self, partition: NodePartition) -> "WordGraph":
        """Quotient graph on blocks; the partition must be compatible."""
        block_of = partition.block_of
        rows = [[block_of[t] for t in self.targets[block[0]]] for block in partition.blocks]
        return WordGraph(len(partition), self.alphabet_size, rows)

    def to_dot(self, labels: Optional[Sequence[str]] = None, letters: Optional[Sequence[str]] = None) -> str:
        """DOT text, one colour per letter."""
        lines = ["digraph WordGraph {"]
        for node in range(self.node_count):
            label = labels[node] if labels else str(node)
            lines.append(f'  n{node} [label="{label}"];')
        for node, row in enumerate(self.targets):
            for letter, target in enumerate(row):
                colour = DOT_COLOURS[letter % len(DOT_COLOURS)]
                name = letters[letter] if letters else str(letter)
                lines.append(f'  n{node} -> n{target} [color={colour}, label="{name}"];')
        lines.append("}")
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordGraph):
            return NotImplemented
        return self.alphabet_size == other.alphabet_size and self.targets == other.targets

    def __repr__(self) -> str:
        return f"WordGraph(nodes={self.node_count}, letters={self.alphabet_size})"


def follow_path(g: WordGraph, start: int, word: Sequence[int]) -> int:
    g._check_node(start)
    node = start
    for letter in word:
        node = g.target(node, letter)
    return node


def sccs(g: WordGraph) -> NodePartition:
    """Strongly connected components by an iterative Tarjan traversal."""
    n = g.node_count
    targets = g.targets
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    labels = [-1] * n
    counter = 0
    component = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            row = targets[v]
            if i < len(row):
                work[-1] = (v, i + 1)
                w = row[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    labels[w] = component
                    if w == v:
                        break
                component += 1
    return NodePartition(labels)


def quotient_closure(g: WordGraph, seeds: Iterable[Tuple[int, int]]) -> Tuple[NodePartition, WordGraph]:
    """
    Least partition containing ``seeds`` whose quotient of ``g`` is deterministic,
    together with that quotient.

    Pairs are merged from a worklist; every merge of (a, b) enqueues the pair of
    targets of a and b under each letter, so the result is the least
    congruence of the unary algebra of ``g`` containing the seeds.
    """
    uf = UnionFind(g.node_count)
    queue = deque()
    for a, b in seeds:
        g._check_node(a)
        g._check_node(b)
        queue.append((a, b))
    targets = g.targets
    while queue:
        a, b = queue.popleft()
        if uf.union(a, b):
            queue.extend(zip(targets[a], targets[b]))
    partition = NodePartition.from_union_find(uf)
    logger.debug(f"Quotient closure: {g.node_count} nodes -> {len(partition)} blocks")
    return partition, g.quotient(partition)
