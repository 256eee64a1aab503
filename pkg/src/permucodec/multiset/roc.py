"""
Random Order Coding (ROC)

Compresses a multiset by interleaving two steps until it is empty:

1. Sample an element without replacement, by decoding from the ANS state
   with probability M̄(z) / |M̄| (M̄ is what is left of the multiset)
2. Encode the sampled element with the symbol codec

The sampling decodes consume log2(n! / prod M(x)!) bits in total, exactly the
information carried by the order of a sequence, so the final message is the
information content of the multiset rather than of one of its orderings.
Interleaving keeps the state topped up, so only the first few samples ever
draw on the seed bits.

The symbol codec must be exchangeable (its probability of a sequence must not
depend on the order); i.i.d. codecs are. This cannot be checked here.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from permucodec.ans.codecs import SymbolCodec
from permucodec.ans.core import AnsState
from permucodec.errors import CorruptMessageError, InvalidInputError, PermucodecError
from permucodec.info import log2_multinomial
from permucodec.swor.sampling import SamplingTrace, sample, unsample
from permucodec.swor.tree import SworTree

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Multiset:
    """
    Multiset of mutually comparable symbols.

    Stored as the ascending tuple of its elements (repeats included), which is
    also its canonical form: two multisets are equal iff their element tuples
    are, and multisets of multisets compare lexicographically on it.
    """
    elements: Tuple = ()

    def __post_init__(self):
        try:
            object.__setattr__(self, 'elements', tuple(sorted(self.elements)))
        except TypeError as exc:
            raise InvalidInputError(f"multiset symbols must be mutually orderable: {exc}") from None

    @classmethod
    def from_counts(cls, counts: Mapping) -> 'Multiset':
        elements = []
        for symbol, count in counts.items():
            if count < 1:
                raise InvalidInputError(f"multiplicity of {symbol!r} must be >= 1, got {count}")
            elements.extend([symbol] * count)
        return cls(tuple(elements))

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def counts(self) -> Counter:
        return Counter(self.elements)

    def multiplicity(self, symbol) -> int:
        return self.counts()[symbol]


def roc_encode(m: Multiset, codec: SymbolCodec, s: AnsState,
               trace: Optional[SamplingTrace] = None) -> AnsState:
    """
    Encode a multiset onto state s.

    Args:
        m: Multiset to encode
        codec: Exchangeable symbol codec for its elements
        s: Initial state (at least |m| for the savings to materialize)
        trace: Optional list receiving (multiplicity, remaining size) per sample

    Returns:
        Final state
    """
    tree = SworTree.build(m.elements)
    start_bits = s.bit_length()
    while tree:
        s, z = sample(s, tree, trace)
        s = codec.encode(s, z)
    logger.debug("ROC encoded %d elements: %d -> %d bits", len(m), start_bits, s.bit_length())
    return s


def roc_decode(s: AnsState, n: int, codec: SymbolCodec) -> Tuple[Multiset, AnsState]:
    """
    Decode a multiset of n elements, restoring the state roc_encode started from.

    Raises:
        CorruptMessageError: if the codec cannot decode the state
    """
    tree = SworTree()
    for _ in range(n):
        try:
            s, z = codec.decode(s)
        except PermucodecError as exc:
            raise CorruptMessageError(str(exc)) from exc
        s = unsample(s, tree, z)
    return Multiset(tuple(tree)), s


def multiset_info_content(m: Multiset, logp_sequence: float) -> float:
    """
    Information content of a multiset in bits.

    Args:
        m: The multiset
        logp_sequence: -log2 Q of any ordering of m under an exchangeable codec

    Returns:
        logp_sequence - log2(n! / prod M(x)!)
    """
    return logp_sequence - log2_multinomial(m.counts().values())


def sequence_cost(items: Iterable, codec: SymbolCodec) -> float:
    """-log2 Q of a sequence under an i.i.d. codec, in bits."""
    return sum(codec.cost(x) for x in items)


def sequential_encode(items: Sequence, codec: SymbolCodec, s: AnsState) -> AnsState:
    """Order-preserving baseline: encodes items so that decoding yields them in order."""
    for x in reversed(items):
        s = codec.encode(s, x)
    return s


def sequential_decode(s: AnsState, n: int, codec: SymbolCodec) -> Tuple[List, AnsState]:
    items = []
    for _ in range(n):
        s, x = codec.decode(s)
        items.append(x)
    return items, s
