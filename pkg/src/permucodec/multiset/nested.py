"""
Nested multisets (collections of JSON-like maps).

The outer multiset holds inner multisets, each compared by its canonical
ascending element tuple. Compression is depth first: sample one inner
multiset without replacement, ROC-encode its records to depletion, then
encode its size with a uniform codec over [0, size_bound]. Repeat until the
outer multiset is empty.
"""

import logging
from typing import NamedTuple, Optional, Tuple

from permucodec.ans.codecs import SymbolCodec
from permucodec.ans.core import AnsState, uniform_decode, uniform_encode
from permucodec.errors import InvalidInputError
from permucodec.info import log2_factorial, log2_multinomial
from permucodec.multiset.roc import Multiset, roc_decode, roc_encode
from permucodec.swor.sampling import SamplingTrace, sample, unsample
from permucodec.swor.tree import SworTree

logger = logging.getLogger(__name__)

DEFAULT_SIZE_BOUND = 65535


class NestedShape(NamedTuple):
    """Side information the decoder needs: outer count and inner size bound."""
    count: int
    size_bound: int = DEFAULT_SIZE_BOUND


def nested_encode(outer: Multiset, codec: SymbolCodec, s: AnsState,
                  size_bound: int = DEFAULT_SIZE_BOUND,
                  trace: Optional[SamplingTrace] = None) -> AnsState:
    """
    Encode a multiset of multisets.

    Args:
        outer: Multiset whose elements are Multiset instances
        codec: Symbol codec for the inner elements
        s: Initial state
        size_bound: Largest inner multiset size the message can carry
        trace: Optional outer sampling trace

    Returns:
        Final state
    """
    for inner in outer:
        if not isinstance(inner, Multiset):
            raise InvalidInputError(f"outer elements must be multisets, got {type(inner).__name__}")
        if len(inner) > size_bound:
            raise InvalidInputError(f"inner multiset of size {len(inner)} exceeds bound {size_bound}")

    tree = SworTree.build(outer.elements)
    while tree:
        s, inner = sample(s, tree, trace)
        s = roc_encode(inner, codec, s)
        s = uniform_encode(s, len(inner), size_bound + 1)
    logger.debug("nested encode of %d inner multisets -> %d bits", len(outer), s.bit_length())
    return s


def nested_decode(s: AnsState, shape: NestedShape, codec: SymbolCodec) -> Tuple[Multiset, AnsState]:
    tree = SworTree()
    for _ in range(shape.count):
        s, size = uniform_decode(s, shape.size_bound + 1)
        inner, s = roc_decode(s, size, codec)
        s = unsample(s, tree, inner)
    return Multiset(tuple(tree)), s


def nested_info_savings(outer: Multiset) -> float:
    """
    Bits saved by nesting compared with coding every record in sequence.

    Equals log2|M|! + sum_i log2|J_i|! when all inner multisets and all their
    records are distinct; repeats reduce each term to its multinomial.
    """
    savings = log2_multinomial(outer.counts().values())
    for inner in outer:
        savings += log2_multinomial(inner.counts().values())
    return savings


def nested_savings_bound(outer: Multiset) -> float:
    """log2|M|! + sum_i log2|J_i|!, the bound for distinct maps."""
    return log2_factorial(len(outer)) + sum(log2_factorial(len(inner)) for inner in outer)
