"""
Fenwick tree (binary indexed tree) over vertex counts.

Keeps prefix sums of per-vertex occurrence counts for vertices 0..n-1 and
supports the search the Pólya urn decoder needs: given j, find the vertex v
with

    F(v) + beta * v  <=  j  <  F(v + 1) + beta * (v + 1)

where F(v) is the total count of vertices below v. Each internal cell covers
`step` vertices, so adding beta * step to the cell sum keeps the standard
top-down descent valid.
"""

from typing import List


class FenwickTree:
    """Prefix sums over indexes 0..size-1 with O(log size) updates and search."""

    def __init__(self, size: int):
        self.size = size
        self._tree: List[int] = [0] * (size + 1)
        self._top = 1 << max(0, size.bit_length() - 1) if size else 0
        self.visits = 0

    def add(self, index: int, delta: int) -> None:
        i = index + 1
        while i <= self.size:
            self.visits += 1
            self._tree[i] += delta
            i += i & -i

    def prefix(self, index: int) -> int:
        """Sum of counts at indexes strictly below index."""
        total, i = 0, index
        while i > 0:
            self.visits += 1
            total += self._tree[i]
            i -= i & -i
        return total

    def search(self, j: int, beta: int = 0) -> int:
        """
        Largest index v with prefix(v) + beta * v <= j.

        The caller guarantees j < prefix(size) + beta * size.
        """
        pos, remaining, step = 0, j, self._top
        while step:
            nxt = pos + step
            if nxt <= self.size:
                self.visits += 1
                cell = self._tree[nxt] + beta * step
                if cell <= remaining:
                    pos, remaining = nxt, remaining - cell
            step >>= 1
        return pos
