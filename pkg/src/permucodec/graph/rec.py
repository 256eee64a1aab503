"""
Random Edge Coding (REC)

Compresses a labeled graph given as an edge list by coding one of its vertex
sequences with an edge-permutation invariant model (the Pólya urn) while
getting back, through bits-back sampling, the bits that describe

- the order of the edges: log2(m! / prod_e c_e!) for edge multiplicities c_e
- the order of the two endpoints of every undirected non-loop edge: 1 bit each

Edges are sampled without replacement one at a time and their vertices are
encoded immediately, so the sampling never runs out of state.

Vertices are the integers 0..n-1. Undirected edges are stored as (u, w) with
u <= w. Directed edges are coded destination first, so the decoder reads the
source first.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from permucodec.ans.core import AnsState, uniform_decode, uniform_encode
from permucodec.errors import CorruptMessageError, InvalidInputError
from permucodec.graph.polya import (
    DEFAULT_BETA,
    PolyaContext,
    polya_decode_vertex,
    polya_encode_vertex,
    polya_joint_log2,
)
from permucodec.info import log2_multinomial
from permucodec.swor.sampling import SamplingTrace, sample, unsample
from permucodec.swor.tree import SworTree

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GraphEdgeList:
    """
    Graph over vertices 0..n-1 as a list of edges.

    Attributes:
        n: Number of vertices
        edges: Edge pairs; loops and repeated edges are allowed
        directed: Whether (u, w) and (w, u) are different edges
    """
    n: int
    edges: Tuple[Edge, ...] = ()
    directed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {self.n}")
        edges = []
        for edge in self.edges:
            u, w = (int(x) for x in edge)
            if not (0 <= u < self.n and 0 <= w < self.n):
                raise InvalidInputError(f"edge ({u}, {w}) has a vertex outside [0, {self.n})")
            if not self.directed and w < u:
                u, w = w, u
            edges.append((u, w))
        object.__setattr__(self, 'edges', tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> List[int]:
        """Occurrences of each vertex in the vertex sequence (loops count twice)."""
        degrees = [0] * self.n
        for u, w in self.edges:
            degrees[u] += 1
            degrees[w] += 1
        return degrees

    def edge_counts(self) -> Counter:
        return Counter(self.edges)

    def vertex_sequence(self) -> List[int]:
        return [v for edge in self.edges for v in edge]

    def non_loop_count(self) -> int:
        return sum(1 for u, w in self.edges if u != w)

    def is_simple(self) -> bool:
        return self.non_loop_count() == self.m and len(self.edge_counts()) == self.m

    def canonical(self) -> 'GraphEdgeList':
        return edge_sort(self)


@dataclass
class RecTrace:
    """Per-step instrumentation of rec_encode."""
    edge_steps: SamplingTrace = field(default_factory=list)
    contexts: List[Tuple[int, ...]] = field(default_factory=list)


def edge_sort(g: GraphEdgeList) -> GraphEdgeList:
    """Sort vertices within undirected edges, then edges lexicographically."""
    return GraphEdgeList(g.n, tuple(sorted(g.edges)), g.directed)


def order_savings(g: GraphEdgeList) -> float:
    """log2 of the number of vertex sequences that describe g."""
    orientation = 0 if g.directed else g.non_loop_count()
    return orientation + log2_multinomial(g.edge_counts().values())


def rec_encode(g: GraphEdgeList, beta: int, s: AnsState,
               trace: Optional[RecTrace] = None) -> AnsState:
    """
    Encode a graph onto state s.

    Args:
        g: Graph to encode
        beta: Pólya urn pseudo-count
        s: Initial state
        trace: Optional RecTrace filled with edge samples and the urn context
            before every vertex encode

    Returns:
        Final state; n, m, beta and directedness travel outside the state
    """
    if g.m == 0:
        return s
    g = edge_sort(g)
    edges = SworTree.build(g.edges)
    ctx = PolyaContext(g.n, beta, g.degrees())
    start_bits = s.bit_length()

    while edges:
        s, edge = sample(s, edges, trace.edge_steps if trace is not None else None)
        if g.directed:
            order = (edge[1], edge[0])
        elif edge[0] == edge[1]:
            order = edge
        else:
            s, b = uniform_decode(s, 2)
            order = (edge[b], edge[1 - b])
        for x in order:
            ctx.decrement(x)
            if trace is not None:
                trace.contexts.append(ctx.snapshot())
            s = polya_encode_vertex(s, x, ctx)

    logger.debug("REC encoded %d edges on %d vertices: %d -> %d bits",
                 g.m, g.n, start_bits, s.bit_length())
    return s


def rec_decode(s: AnsState, n: int, m: int, beta: int = DEFAULT_BETA, directed: bool = False,
               contexts: Optional[List[Tuple[int, ...]]] = None) -> Tuple[GraphEdgeList, AnsState]:
    """
    Decode a graph of m edges on n vertices, restoring the initial state.

    Args:
        contexts: Optional list receiving the urn counts before every vertex decode

    Raises:
        CorruptMessageError: if the parameters are inconsistent
    """
    if m == 0:
        return GraphEdgeList(n, (), directed), s
    if n < 1:
        raise CorruptMessageError(f"{m} edges on an empty vertex set")
    ctx = PolyaContext(n, beta)
    edges = SworTree()

    for _ in range(m):
        pair = []
        for _ in range(2):
            if contexts is not None:
                contexts.append(ctx.snapshot())
            s, v = polya_decode_vertex(s, ctx)
            ctx.increment(v)
            pair.append(v)
        first, second = pair
        if directed:
            edge = (first, second)
        else:
            edge = (min(first, second), max(first, second))
            if first != second:
                s = uniform_encode(s, 0 if second == edge[0] else 1, 2)
        s = unsample(s, edges, edge)

    return GraphEdgeList(n, tuple(edges), directed), s


def polya_sequence_nll(g: GraphEdgeList, order: Sequence[int], beta: int = DEFAULT_BETA) -> float:
    """
    -log2 P(order) under the Pólya urn over g's vertex set, exactly.

    Depends only on how often each vertex occurs, so every permutation of the
    sequence has the same value.
    """
    if len(order) != 2 * g.m:
        raise InvalidInputError(f"vertex sequence of length {len(order)} for {g.m} edges")
    if not order:
        return 0.0
    counts = Counter(order)
    if min(counts) < 0 or max(counts) >= g.n:
        raise InvalidInputError(f"vertex sequence leaves [0, {g.n})")
    return polya_joint_log2(list(counts.values()), g.n, beta)


def graph_nll(g: GraphEdgeList, beta: int = DEFAULT_BETA) -> float:
    """Information content of g under the Pólya urn: sequence NLL minus order savings."""
    if g.m == 0:
        return 0.0
    return polya_sequence_nll(g, g.vertex_sequence(), beta) - order_savings(g)


def er_graph_nll(n: int, m: int) -> float:
    """log2 C(C(n, 2), m): uniform model over simple undirected graphs with m edges."""
    pairs = math.comb(n, 2)
    if not 0 <= m <= pairs:
        raise InvalidInputError(f"a simple graph on {n} vertices has at most {pairs} edges, got {m}")
    return math.log2(math.comb(pairs, m))
