"""
Symbol Codecs

A symbol codec is a pair of mutually inverse functions on the ANS state:

    encode(state, symbol) -> state
    decode(state) -> (state, symbol)

Random order, cycle and edge coding are written against this interface only.
Each codec also reports the cost of a symbol in bits so rate checks can be
computed without touching the state.
"""

import math
from typing import Protocol, Tuple

from permucodec.ans.core import (
    AnsState,
    QuantizedDist,
    ans_decode,
    ans_encode,
    bytes_decode,
    bytes_encode,
    uniform_decode,
    uniform_encode,
)
from permucodec.errors import InvalidInputError

DEFAULT_LMAX = 65535

# Codec ids carried in message headers.
CODEC_BYTES = 1
CODEC_UNIFORM = 2


class SymbolCodec(Protocol):
    """Bijective symbol codec over the ANS state."""

    def encode(self, state: AnsState, symbol) -> AnsState:
        ...

    def decode(self, state: AnsState) -> Tuple[AnsState, object]:
        ...

    def cost(self, symbol) -> float:
        ...


class CategoricalCodec:
    """Codes symbols i.i.d. under a fixed quantized distribution."""

    def __init__(self, dist: QuantizedDist):
        self.dist = dist

    def encode(self, state: AnsState, symbol) -> AnsState:
        return ans_encode(state, self.dist.range_of(symbol), self.dist.precision)

    def decode(self, state: AnsState) -> Tuple[AnsState, object]:
        return ans_decode(state, self.dist)

    def cost(self, symbol) -> float:
        return self.dist.info_content(symbol)

    def __repr__(self):
        return f"CategoricalCodec(symbols={len(self.dist)}, precision={self.dist.precision})"


class UniformCodec:
    """Codes integers uniformly over [0, K)."""

    def __init__(self, K: int):
        if K < 1:
            raise InvalidInputError(f"uniform alphabet size must be >= 1, got {K}")
        self.K = K

    def encode(self, state: AnsState, symbol: int) -> AnsState:
        return uniform_encode(state, symbol, self.K)

    def decode(self, state: AnsState) -> Tuple[AnsState, int]:
        return uniform_decode(state, self.K)

    def cost(self, symbol: int) -> float:
        return math.log2(self.K)

    def __repr__(self):
        return f"UniformCodec(K={self.K})"


class BytesCodec:
    """Codes byte records of length at most lmax, each byte uniform."""

    def __init__(self, lmax: int = DEFAULT_LMAX):
        if lmax < 0:
            raise InvalidInputError(f"lmax must be non-negative, got {lmax}")
        self.lmax = lmax

    def encode(self, state: AnsState, symbol: bytes) -> AnsState:
        return bytes_encode(state, symbol, self.lmax)

    def decode(self, state: AnsState) -> Tuple[AnsState, bytes]:
        return bytes_decode(state, self.lmax)

    def cost(self, symbol: bytes) -> float:
        return 8 * len(symbol) + math.log2(self.lmax + 1)

    def __repr__(self):
        return f"BytesCodec(lmax={self.lmax})"
