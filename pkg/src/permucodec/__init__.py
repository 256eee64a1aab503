"""
permucodec - lossless compression of unordered objects

Multisets, set partitions and graphs are coded with a bits-back ANS coder
that spends only the information of the object, not of an arbitrary ordering
of it.
"""

__version__ = "1.0.0"

from permucodec.errors import (
    CorruptMessageError,
    InputParseError,
    IntegrityError,
    InvalidInputError,
    MalformedStateError,
    PermucodecError,
    StateDepletedError,
    SymbolNotInAlphabetError,
)
from permucodec.ans import (
    BytesCodec,
    CategoricalCodec,
    QuantizedDist,
    UniformCodec,
    initial_state,
)
from permucodec.multiset import Multiset, roc_decode, roc_encode
from permucodec.partition import Partition, rcc_decode, rcc_encode
from permucodec.graph import GraphEdgeList, rec_decode, rec_encode
from permucodec.lvm import DiscreteLvm, bbans_decode, bbans_encode
