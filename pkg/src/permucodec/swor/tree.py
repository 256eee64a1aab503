"""
Order-Statistic Multiset Tree

Balanced binary search tree over the distinct symbols of a multiset. Each node
stores its symbol, the symbol's multiplicity and the total count of its
subtree, which gives, in O(log m) node visits for m distinct symbols:

- forward_lookup(x):  (p, c) = (multiplicity of x, number of elements < x)
- reverse_lookup(j):  the symbol whose range [c, c + p) contains j
- insert(x) / remove(x): multiplicity of x changes by one

The ranges [c_x, c_x + p_x) tile [0, size), so the tree is a dynamic
quantized distribution whose precision is the multiset size. Balance is kept
with AVL rotations that recompute subtree counts bottom-up.
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from permucodec.ans.core import RangeTriple
from permucodec.errors import InvalidInputError, SymbolNotInAlphabetError


class _Node:
    __slots__ = ('symbol', 'weight', 'count', 'height', 'left', 'right')

    def __init__(self, symbol, weight: int = 1,
                 left: Optional['_Node'] = None, right: Optional['_Node'] = None):
        self.symbol = symbol
        self.weight = weight
        self.left = left
        self.right = right
        self.update()

    def update(self) -> '_Node':
        left, right = self.left, self.right
        self.count = self.weight + (left.count if left else 0) + (right.count if right else 0)
        self.height = 1 + max(left.height if left else 0, right.height if right else 0)
        return self


def _height(node: Optional[_Node]) -> int:
    return node.height if node else 0


def _rotate_right(node: _Node) -> _Node:
    pivot = node.left
    node.left = pivot.right
    pivot.right = node.update()
    return pivot.update()


def _rotate_left(node: _Node) -> _Node:
    pivot = node.right
    node.right = pivot.left
    pivot.left = node.update()
    return pivot.update()


def _rebalance(node: _Node) -> _Node:
    node.update()
    balance = _height(node.left) - _height(node.right)
    if balance > 1:
        if _height(node.left.left) < _height(node.left.right):
            node.left = _rotate_left(node.left)
        return _rotate_right(node)
    if balance < -1:
        if _height(node.right.right) < _height(node.right.left):
            node.right = _rotate_right(node.right)
        return _rotate_left(node)
    return node


def _pop_min(node: _Node) -> Tuple[Optional[_Node], _Node]:
    """Detach the leftmost node; returns (new subtree, detached node)."""
    if node.left is None:
        return node.right, node
    node.left, smallest = _pop_min(node.left)
    return _rebalance(node), smallest


class SworTree:
    """
    Multiset of ordered symbols supporting sampling without replacement.

    Symbols must be mutually comparable under a total order (ints, bytes,
    tuples, ...). Every lookup counts the nodes it touches in `visits`, which
    tests use to check the logarithmic depth.
    """

    def __init__(self):
        self._root: Optional[_Node] = None
        self.visits = 0

    @classmethod
    def build(cls, sorted_items: Sequence) -> 'SworTree':
        """
        Build a balanced tree from items sorted ascending (repeats allowed).

        Raises:
            InvalidInputError: if the items are not sorted
        """
        runs: List[List] = []
        for item in sorted_items:
            if runs and item == runs[-1][0]:
                runs[-1][1] += 1
                continue
            if runs and not runs[-1][0] < item:
                raise InvalidInputError(
                    f"items must be sorted ascending, got {item!r} after {runs[-1][0]!r}")
            runs.append([item, 1])

        def _build(lo: int, hi: int) -> Optional[_Node]:
            if lo >= hi:
                return None
            mid = (lo + hi) // 2
            symbol, weight = runs[mid]
            return _Node(symbol, weight, _build(lo, mid), _build(mid + 1, hi))

        tree = cls()
        tree._root = _build(0, len(runs))
        return tree

    def __len__(self) -> int:
        return self._root.count if self._root else 0

    def __bool__(self) -> bool:
        return self._root is not None

    def __contains__(self, symbol) -> bool:
        return self.multiplicity(symbol) > 0

    @property
    def height(self) -> int:
        return _height(self._root)

    def multiplicity(self, symbol) -> int:
        node = self._root
        while node is not None:
            if symbol < node.symbol:
                node = node.left
            elif node.symbol < symbol:
                node = node.right
            else:
                return node.weight
        return 0

    def insert(self, symbol) -> 'SworTree':
        """Add one copy of symbol."""
        def _insert(node: Optional[_Node]) -> _Node:
            if node is None:
                return _Node(symbol)
            self.visits += 1
            if symbol < node.symbol:
                node.left = _insert(node.left)
            elif node.symbol < symbol:
                node.right = _insert(node.right)
            else:
                node.weight += 1
                return node.update()
            return _rebalance(node)

        self._root = _insert(self._root)
        return self

    def remove(self, symbol) -> 'SworTree':
        """
        Remove one copy of symbol.

        Raises:
            SymbolNotInAlphabetError: if the symbol is absent
        """
        def _remove(node: Optional[_Node]) -> Optional[_Node]:
            if node is None:
                raise SymbolNotInAlphabetError(symbol)
            self.visits += 1
            if symbol < node.symbol:
                node.left = _remove(node.left)
            elif node.symbol < symbol:
                node.right = _remove(node.right)
            elif node.weight > 1:
                node.weight -= 1
                return node.update()
            elif node.left is None:
                return node.right
            elif node.right is None:
                return node.left
            else:
                node.right, successor = _pop_min(node.right)
                node.symbol, node.weight = successor.symbol, successor.weight
            return _rebalance(node)

        self._root = _remove(self._root)
        return self

    def forward_lookup(self, symbol) -> Tuple[int, int]:
        """
        Return (p, c): multiplicity of symbol and count of smaller elements.

        Raises:
            SymbolNotInAlphabetError: if the symbol is absent
        """
        node, c = self._root, 0
        while node is not None:
            self.visits += 1
            if symbol < node.symbol:
                node = node.left
            elif node.symbol < symbol:
                c += node.count - (node.right.count if node.right else 0)
                node = node.right
            else:
                return node.weight, c + (node.left.count if node.left else 0)
        raise SymbolNotInAlphabetError(symbol)

    def reverse_lookup(self, j: int) -> RangeTriple:
        """
        Return the unique (x, p, c) with c <= j < c + p.

        Raises:
            InvalidInputError: if j is outside [0, size)
        """
        if not 0 <= j < len(self):
            raise InvalidInputError(f"index {j} outside [0, {len(self)})")
        node, c = self._root, 0
        while True:
            self.visits += 1
            left = node.left.count if node.left else 0
            if j < c + left:
                node = node.left
            elif j < c + left + node.weight:
                return RangeTriple(node.symbol, node.weight, c + left)
            else:
                c += left + node.weight
                node = node.right

    def items(self) -> Iterator[Tuple[object, int]]:
        """In-order (symbol, multiplicity) pairs."""
        stack, node = [], self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.symbol, node.weight
            node = node.right

    def __iter__(self) -> Iterator:
        for symbol, weight in self.items():
            for _ in range(weight):
                yield symbol

    def reset_visits(self) -> None:
        self.visits = 0


def build(sorted_items: Iterable) -> SworTree:
    return SworTree.build(list(sorted_items))
