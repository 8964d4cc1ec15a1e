from typing import List


class UnionFind:
    """Disjoint-set forest over 0..size-1 with path halving and union by size."""

    def __init__(self, size: int):
        self.parent: List[int] = list(range(size))
        self.size: List[int] = [1] * size
        self.blocks = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the blocks of a and b; False if they were already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.blocks -= 1
        return True

    def labels(self) -> List[int]:
        return [self.find(x) for x in range(len(self.parent))]

    def __len__(self) -> int:
        return self.blocks
