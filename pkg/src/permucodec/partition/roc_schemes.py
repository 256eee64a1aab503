"""
Clustering coders built from ROC alone, the baselines RCC is measured against.

ROC-1 sends the clusters as a sequence of sets. Each cluster is coded with ROC
and preceded by its size, which is uniform over what is left of the n
elements. Clusters go out smallest first, so the i-th size costs
log2(n - N_i) bits with N_i the elements already decoded.

ROC-2 treats the partition as a set of sets. An outer ROC pass samples the
clusters in a random order, which gets back log2 k! bits, and the cluster
count is sent once, uniform over [1, n]. Each cluster is a nested ROC pass
preceded by its size, exactly as in ROC-1.

Both need the cluster sizes on the wire, which RCC does not.
"""

import logging
from typing import Iterable, List, Optional, Tuple, Union

from permucodec.ans.codecs import SymbolCodec
from permucodec.ans.core import AnsState, uniform_decode, uniform_encode
from permucodec.errors import CorruptMessageError, InvalidInputError, PermucodecError
from permucodec.multiset.roc import Multiset, roc_decode, roc_encode
from permucodec.partition.rcc import Partition
from permucodec.swor.sampling import sample, unsample
from permucodec.swor.tree import SworTree

logger = logging.getLogger(__name__)


def _as_partition(p: Union[Partition, Iterable[Iterable]]) -> Partition:
    return p if isinstance(p, Partition) else Partition.from_lists(p)


def _finish(clusters: List[Multiset], n: int) -> Partition:
    try:
        p = Partition.from_lists(c.elements for c in clusters)
    except InvalidInputError as exc:
        raise CorruptMessageError(str(exc)) from exc
    if p.n != n:
        raise CorruptMessageError(f"decoded {p.n} elements, expected {n}")
    return p


def _decode_cluster(s: AnsState, n: int, coded: int, codec: SymbolCodec) -> Tuple[Multiset, AnsState]:
    s, z = uniform_decode(s, n - coded)
    try:
        return roc_decode(s, z + 1, codec)
    except PermucodecError as exc:
        raise CorruptMessageError(str(exc)) from exc


def roc1_encode(p: Union[Partition, Iterable[Iterable]], codec: SymbolCodec, s: AnsState) -> AnsState:
    """
    Encode a partition as a size-prefixed sequence of ROC-coded sets.

    Clusters are decoded smallest first, ties broken by smallest element.
    """
    p = _as_partition(p)
    clusters = sorted((Multiset(tuple(c)) for c in p.clusters),
                      key=lambda m: (len(m), m.elements[0]))
    n = p.n
    remaining = 0
    for cluster in reversed(clusters):
        remaining += len(cluster)
        s = roc_encode(cluster, codec, s)
        s = uniform_encode(s, len(cluster) - 1, remaining)
    logger.debug("ROC-1 encoded %d clusters of %d elements -> %d bits", p.k, n, s.bit_length())
    return s


def roc1_decode(s: AnsState, n: int, codec: SymbolCodec) -> Tuple[Partition, AnsState]:
    """
    Decode a partition of n elements written by roc1_encode.

    Raises:
        CorruptMessageError: if an element is decoded twice
    """
    clusters: List[Multiset] = []
    coded = 0
    while coded < n:
        cluster, s = _decode_cluster(s, n, coded, codec)
        clusters.append(cluster)
        coded += len(cluster)
    return _finish(clusters, n), s


def roc2_encode(p: Union[Partition, Iterable[Iterable]], codec: SymbolCodec, s: AnsState,
                sampled: Optional[List[Multiset]] = None) -> AnsState:
    """
    Encode a partition as a set of ROC-coded sets.

    Args:
        p: Partition of distinct elements
        codec: Exchangeable symbol codec for the elements
        s: Initial state
        sampled: Optional list receiving the clusters in the order they were
            sampled (the reverse of the decode order)

    Returns:
        Final state
    """
    p = _as_partition(p)
    n = p.n
    if n == 0:
        return s
    tree = SworTree.build(sorted(Multiset(tuple(c)) for c in p.clusters))
    coded = 0
    while tree:
        s, cluster = sample(s, tree)
        if sampled is not None:
            sampled.append(cluster)
        coded += len(cluster)
        s = roc_encode(cluster, codec, s)
        s = uniform_encode(s, len(cluster) - 1, coded)
    s = uniform_encode(s, p.k - 1, n)
    logger.debug("ROC-2 encoded %d clusters of %d elements -> %d bits", p.k, n, s.bit_length())
    return s


def roc2_decode(s: AnsState, n: int, codec: SymbolCodec) -> Tuple[Partition, AnsState]:
    """
    Decode a partition of n elements written by roc2_encode.

    Raises:
        CorruptMessageError: if the sizes do not add up to n or an element repeats
    """
    if n == 0:
        return Partition.from_lists([]), s
    s, z = uniform_decode(s, n)
    k = z + 1
    tree = SworTree()
    coded = 0
    for _ in range(k):
        if coded >= n:
            raise CorruptMessageError(f"{k} clusters do not fit in {n} elements")
        cluster, s = _decode_cluster(s, n, coded, codec)
        coded += len(cluster)
        if cluster in tree:
            raise CorruptMessageError("cluster decoded twice")
        s = unsample(s, tree, cluster)
    return _finish(list(tree), n), s
