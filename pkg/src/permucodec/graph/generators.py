"""
Synthetic graphs for rate experiments and tests.
"""

from typing import Optional

import networkx as nx
import numpy as np

from permucodec.errors import InvalidInputError
from permucodec.graph.rec import GraphEdgeList


def preferential_attachment_graph(n: int, m_per_node: int, seed: Optional[int] = None) -> GraphEdgeList:
    """Simple undirected Barabási–Albert graph (heavy-tailed degrees)."""
    if not 1 <= m_per_node < n:
        raise InvalidInputError(f"need 1 <= m_per_node < n, got m_per_node={m_per_node}, n={n}")
    graph = nx.barabasi_albert_graph(n, m_per_node, seed=seed)
    return GraphEdgeList(n, tuple(graph.edges()), directed=False)


def uniform_multigraph(n: int, m: int, rng: np.random.Generator,
                       loops: bool = True, directed: bool = False) -> GraphEdgeList:
    """m edges with endpoints drawn uniformly; repeats (and loops, if allowed) kept."""
    if n < 1:
        raise InvalidInputError(f"vertex count must be >= 1, got {n}")
    ends = rng.integers(0, n, size=(m, 2))
    if not loops:
        if n < 2:
            raise InvalidInputError("loop-free graphs need at least 2 vertices")
        same = ends[:, 0] == ends[:, 1]
        while same.any():
            ends[same, 1] = rng.integers(0, n, size=int(same.sum()))
            same = ends[:, 0] == ends[:, 1]
    return GraphEdgeList(n, tuple((int(u), int(w)) for u, w in ends), directed=directed)
