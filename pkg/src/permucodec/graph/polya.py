"""
Pólya urn vertex model.

Given the vertices seen so far, the next vertex is v with probability

    (d(v) + beta) / (r + n * beta)

where d(v) counts earlier occurrences of v and r is their total. The joint
probability of a sequence depends only on the final counts,

    prod_v beta↑d(v) / (n * beta)↑r,

so the model is exchangeable and every edge ordering and within-edge swap of
a vertex sequence is equally likely. beta is a positive integer, keeping all
probabilities exact rationals.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from permucodec.ans.core import AnsState, RangeTriple, ans_encode, ans_pop
from permucodec.errors import InvalidInputError
from permucodec.graph.fenwick import FenwickTree
from permucodec.info import ascending_factorial, log2_int

DEFAULT_BETA = 1


class PolyaContext:
    """
    Urn state: per-vertex counts with prefix sums.

    Attributes:
        n: Number of vertices
        beta: Positive integer pseudo-count
        counts: Current occurrence count of each vertex
        r: Sum of counts
    """

    def __init__(self, n: int, beta: int = DEFAULT_BETA, counts: Sequence[int] = ()):
        if n < 1:
            raise InvalidInputError(f"vertex count must be >= 1, got {n}")
        if beta < 1 or int(beta) != beta:
            raise InvalidInputError(f"beta must be a positive integer, got {beta}")
        self.n = n
        self.beta = int(beta)
        self.counts: List[int] = [0] * n
        self.r = 0
        self._index = FenwickTree(n)
        for v, count in enumerate(counts):
            if count:
                self.increment(v, count)

    @property
    def precision(self) -> int:
        return self.r + self.n * self.beta

    @property
    def visits(self) -> int:
        return self._index.visits

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidInputError(f"vertex {v} outside [0, {self.n})")

    def increment(self, v: int, amount: int = 1) -> None:
        self._check(v)
        self.counts[v] += amount
        self.r += amount
        self._index.add(v, amount)

    def decrement(self, v: int) -> None:
        self._check(v)
        if self.counts[v] == 0:
            raise InvalidInputError(f"vertex {v} has no occurrences left")
        self.counts[v] -= 1
        self.r -= 1
        self._index.add(v, -1)

    def range_of(self, v: int) -> RangeTriple:
        self._check(v)
        return RangeTriple(v, self.counts[v] + self.beta, self._index.prefix(v) + self.beta * v)

    def reverse_lookup(self, j: int) -> RangeTriple:
        if not 0 <= j < self.precision:
            raise InvalidInputError(f"index {j} outside [0, {self.precision})")
        return self.range_of(self._index.search(j, self.beta))

    def probability(self, v: int) -> Fraction:
        return Fraction(self.counts[v] + self.beta, self.precision)

    def snapshot(self) -> Tuple[int, ...]:
        return tuple(self.counts)


def polya_encode_vertex(s: AnsState, v: int, ctx: PolyaContext) -> AnsState:
    """Encode v given the context of vertices decoded before it."""
    return ans_encode(s, ctx.range_of(v), ctx.precision)


def polya_decode_vertex(s: AnsState, ctx: PolyaContext) -> Tuple[AnsState, int]:
    s, t = ans_pop(s, ctx.precision, ctx.reverse_lookup)
    return s, t.symbol


def polya_conditionals(order: Sequence[int], n: int, beta: int = DEFAULT_BETA) -> List[Fraction]:
    """Exact conditional probability of each vertex given its predecessors."""
    ctx = PolyaContext(n, beta)
    steps = []
    for v in order:
        steps.append(ctx.probability(v))
        ctx.increment(v)
    return steps


def polya_joint_log2(degrees: Sequence[int], n: int, beta: int = DEFAULT_BETA) -> float:
    """-log2 of prod_v beta↑d(v) / (n beta)↑(sum d), exactly, in bits."""
    total = sum(degrees)
    numerator = 1
    for d in degrees:
        numerator *= ascending_factorial(beta, d)
    return log2_int(ascending_factorial(n * beta, total)) - log2_int(numerator)
