"""
Random Cycle Coding (RCC)

A partition of n distinct elements into clusters is stored as a permutation
whose cycles are the clusters. Writing the permutation in Foata's canonical
form (each cycle ascending, cycles ordered by their smallest element,
descending) lets the decoder find cluster boundaries on its own: a new cluster
starts exactly when a decoded element is smaller than the current head.

Encoding walks the canonical clusters from last to first. Each cluster's
non-head elements are coded as a set with ROC, then its head with the plain
symbol codec. The ROC passes get back sum_i log2((n_i - 1)!) bits, which is
the order information of the partition, and no cluster sizes or labels are
transmitted.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

from permucodec.ans.codecs import SymbolCodec
from permucodec.ans.core import AnsState
from permucodec.errors import CorruptMessageError, InvalidInputError, PermucodecError
from permucodec.multiset.roc import Multiset, roc_encode
from permucodec.swor.sampling import SamplingTrace, unsample
from permucodec.swor.tree import SworTree

logger = logging.getLogger(__name__)

CanonicalPartition = List[List]


@dataclass(frozen=True)
class Partition:
    """
    Unlabeled clustering of distinct orderable symbols.

    Attributes:
        clusters: Non-empty, pairwise disjoint clusters
    """
    clusters: FrozenSet[FrozenSet]

    def __post_init__(self):
        clusters = [frozenset(c) for c in self.clusters]
        _check_disjoint(clusters)
        object.__setattr__(self, 'clusters', frozenset(clusters))

    @classmethod
    def from_lists(cls, clusters: Iterable[Iterable]) -> 'Partition':
        clusters = [list(c) for c in clusters]
        seen = set()
        for cluster in clusters:
            for x in cluster:
                if x in seen:
                    raise InvalidInputError(f"duplicate element {x!r} in partition")
                seen.add(x)
        return cls(frozenset(frozenset(c) for c in clusters))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.clusters)

    @property
    def k(self) -> int:
        return len(self.clusters)

    @property
    def sizes(self) -> List[int]:
        return sorted((len(c) for c in self.clusters), reverse=True)

    def canonical(self) -> CanonicalPartition:
        return foata_canonicalize(self)


def _check_disjoint(clusters: List) -> None:
    seen = set()
    for cluster in clusters:
        if not cluster:
            raise InvalidInputError("clusters must be non-empty")
        overlap = seen.intersection(cluster)
        if overlap:
            raise InvalidInputError(f"duplicate element {min(overlap)!r} in partition")
        seen.update(cluster)


def foata_canonicalize(p: Union[Partition, Iterable[Iterable]]) -> CanonicalPartition:
    """
    Foata canonical form: clusters sorted ascending, ordered by head, descending.

    Accepts a Partition or any iterable of clusters (including an already
    canonical list, which is returned unchanged).

    Raises:
        InvalidInputError: if an element appears twice or a cluster is empty
    """
    if isinstance(p, Partition):
        clusters = [sorted(c) for c in p.clusters]
    else:
        clusters = [sorted(c) for c in p]
        flat = [x for c in clusters for x in c]
        if len(flat) != len(set(flat)):
            raise InvalidInputError("duplicate element in partition")
        if any(not c for c in clusters):
            raise InvalidInputError("clusters must be non-empty")
    clusters.sort(key=lambda c: c[0], reverse=True)
    return clusters


def rcc_encode(p: Union[Partition, Iterable[Iterable]], codec: SymbolCodec, s: AnsState,
               trace: Optional[SamplingTrace] = None) -> AnsState:
    """
    Encode a partition onto state s.

    Args:
        p: Partition (or cluster lists) of distinct elements
        codec: Exchangeable symbol codec for the elements
        s: Initial state
        trace: Optional sampling trace shared by all ROC passes

    Returns:
        Final state
    """
    canonical = foata_canonicalize(p)
    for cluster in reversed(canonical):
        s = roc_encode(Multiset(tuple(cluster[1:])), codec, s, trace)
        s = codec.encode(s, cluster[0])
    logger.debug("RCC encoded %d clusters -> %d bits", len(canonical), s.bit_length())
    return s


def rcc_decode(s: AnsState, n: int, codec: SymbolCodec) -> Tuple[Partition, AnsState]:
    """
    Decode a partition of n elements, restoring the state rcc_encode started from.

    Raises:
        CorruptMessageError: if a decoded element repeats a head
    """
    clusters: CanonicalPartition = []
    head = None
    tree = SworTree()
    for _ in range(n):
        try:
            s, x = codec.decode(s)
        except PermucodecError as exc:
            raise CorruptMessageError(str(exc)) from exc
        if head is None or x < head:
            if head is not None:
                clusters.append([head, *tree])
            head, tree = x, SworTree()
        elif x == head or x in tree:
            raise CorruptMessageError(f"element {x!r} decoded twice")
        else:
            s = unsample(s, tree, x)
    if head is not None:
        clusters.append([head, *tree])
    try:
        return Partition.from_lists(clusters), s
    except InvalidInputError as exc:
        raise CorruptMessageError(str(exc)) from exc
