"""
Idealized big-integer ANS

The whole compressed message is a single non-negative Python integer, the ANS
state. Encoding a symbol with range (p, c) under precision N maps

    s  ->  N * (s // p) + c + (s % p)

and decoding inverts it exactly. No renormalization takes place, so every
operation is a bijection on the non-negative integers and the state grows by
about -log2(p / N) bits per encode once s is much larger than N.

Decoding with a distribution the encoder never used is how bits-back coding
samples: the symbol popped from the state is distributed according to that
distribution, and the decoder recovers the consumed bits by encoding it back.
"""

import bisect
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Mapping, NamedTuple, Sequence, Tuple, Union

import numpy as np

from permucodec.errors import InvalidInputError, MalformedStateError, SymbolNotInAlphabetError

# An ANS state is a plain non-negative int.
AnsState = int

DEFAULT_SEED_BITS = 64


def initial_state(seed_bits: int = DEFAULT_SEED_BITS) -> AnsState:
    """Return the fixed seed state 2**seed_bits."""
    if seed_bits < 0:
        raise InvalidInputError(f"seed_bits must be non-negative, got {seed_bits}")
    return 1 << seed_bits


class RangeTriple(NamedTuple):
    """The range [c, c + p) owned by a symbol within [0, N)."""
    symbol: Hashable
    p: int
    c: int


@dataclass(frozen=True)
class QuantizedDist:
    """
    Probability mass function with integer weights.

    Attributes:
        symbols: Distinct symbols in ascending order of their total order
        weights: Positive integer weight p_x of each symbol
        precision: N, the sum of all weights

    The cumulative weight c_x is the sum of the weights of every symbol
    smaller than x, so the ranges [c_x, c_x + p_x) tile [0, N).
    """
    symbols: Tuple
    weights: Tuple[int, ...]
    precision: int = field(init=False)
    _cumulative: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: Dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        symbols = tuple(self.symbols)
        weights = tuple(int(w) for w in self.weights)
        if not symbols:
            raise InvalidInputError("a quantized distribution needs at least one symbol")
        if len(symbols) != len(weights):
            raise InvalidInputError(
                f"{len(symbols)} symbols but {len(weights)} weights")
        for prev, cur in zip(symbols, symbols[1:]):
            if not prev < cur:
                raise InvalidInputError(
                    f"symbols must be strictly ascending, got {prev!r} before {cur!r}")
        for symbol, weight in zip(symbols, weights):
            if weight < 1:
                raise InvalidInputError(f"weight of {symbol!r} must be >= 1, got {weight}")

        cumulative = [0]
        for weight in weights:
            cumulative.append(cumulative[-1] + weight)

        object.__setattr__(self, 'symbols', symbols)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'precision', cumulative[-1])
        object.__setattr__(self, '_cumulative', tuple(cumulative))
        object.__setattr__(self, '_index', {x: i for i, x in enumerate(symbols)})

    @classmethod
    def from_weights(cls, weights: Mapping) -> 'QuantizedDist':
        """Build a distribution from a symbol -> weight mapping."""
        symbols = sorted(weights)
        return cls(tuple(symbols), tuple(weights[x] for x in symbols))

    @classmethod
    def quantize(cls, probs: Union[Mapping, Sequence[float]], precision: int) -> 'QuantizedDist':
        """
        Round real probabilities to integer weights summing to precision.

        Every weight is forced to be at least 1; the rounding residue is
        absorbed by the heaviest symbol.

        Args:
            probs: Mapping symbol -> probability, or a sequence indexed by symbol 0..K-1
            precision: Target precision N (must be >= number of symbols)

        Returns:
            QuantizedDist with precision exactly N
        """
        if isinstance(probs, Mapping):
            symbols = sorted(probs)
            values = np.array([float(probs[x]) for x in symbols], dtype=np.float64)
        else:
            values = np.asarray(probs, dtype=np.float64)
            symbols = list(range(len(values)))
        if precision < len(symbols):
            raise InvalidInputError(
                f"precision {precision} cannot give {len(symbols)} symbols weight >= 1")
        if np.any(values < 0) or values.sum() <= 0:
            raise InvalidInputError("probabilities must be non-negative with positive mass")

        weights = np.maximum(1, np.round(values / values.sum() * precision)).astype(np.int64)
        residue = precision - int(weights.sum())
        while residue != 0:
            heaviest = int(np.argmax(weights))
            step = residue if residue > 0 else max(residue, 1 - int(weights[heaviest]))
            if step == 0:
                raise InvalidInputError("cannot quantize: every weight is already 1")
            weights[heaviest] += step
            residue -= step
        return cls(tuple(symbols), tuple(int(w) for w in weights))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def forward_lookup(self, symbol) -> Tuple[int, int]:
        """Return (p_x, c_x) for a symbol."""
        try:
            i = self._index[symbol]
        except (KeyError, TypeError):
            raise SymbolNotInAlphabetError(symbol) from None
        return self.weights[i], self._cumulative[i]

    def reverse_lookup(self, j: int) -> RangeTriple:
        """Return the unique (x, p_x, c_x) with c_x <= j < c_x + p_x."""
        if not 0 <= j < self.precision:
            raise InvalidInputError(f"index {j} outside [0, {self.precision})")
        i = bisect.bisect_right(self._cumulative, j) - 1
        return RangeTriple(self.symbols[i], self.weights[i], self._cumulative[i])

    def range_of(self, symbol) -> RangeTriple:
        p, c = self.forward_lookup(symbol)
        return RangeTriple(symbol, p, c)

    def probability(self, symbol) -> Fraction:
        p, _ = self.forward_lookup(symbol)
        return Fraction(p, self.precision)

    def info_content(self, symbol) -> float:
        """-log2 P(x) in bits."""
        p, _ = self.forward_lookup(symbol)
        return math.log2(self.precision) - math.log2(p)


def forward_lookup(d: QuantizedDist, x) -> Tuple[int, int]:
    return d.forward_lookup(x)


def reverse_lookup(d: QuantizedDist, j: int) -> RangeTriple:
    return d.reverse_lookup(j)


def ans_encode(s: AnsState, t: RangeTriple, N: int) -> AnsState:
    """Push the range t (of precision N) onto state s."""
    q, r = divmod(s, t.p)
    return N * q + t.c + r


def ans_pop(s: AnsState, N: int, lookup: Callable[[int], RangeTriple]) -> Tuple[AnsState, RangeTriple]:
    """
    Pop one symbol from the state given only a reverse lookup.

    This is the decode half of the coder, shared by static distributions and
    the dynamic trees used for sampling without replacement.

    Args:
        s: Current state
        N: Precision of the distribution being decoded
        lookup: Reverse lookup mapping j in [0, N) to its RangeTriple

    Returns:
        (new state, decoded RangeTriple)
    """
    q, j = divmod(s, N)
    t = lookup(j)
    return t.p * q + j - t.c, t


def ans_decode(s: AnsState, d: QuantizedDist) -> Tuple[AnsState, object]:
    """Pop a symbol distributed as d from the state."""
    s, t = ans_pop(s, d.precision, d.reverse_lookup)
    return s, t.symbol


def _per_step(dists, count: int) -> List[QuantizedDist]:
    if isinstance(dists, QuantizedDist):
        return [dists] * count
    dists = list(dists)
    if len(dists) != count:
        raise InvalidInputError(f"{count} symbols but {len(dists)} distributions")
    return dists


def encode_sequence(s: AnsState, xs: Sequence,
                    dists: Union[QuantizedDist, Sequence[QuantizedDist]]) -> AnsState:
    """
    Encode symbols left to right into a common state.

    Args:
        s: Initial state
        xs: Symbols to encode
        dists: One distribution shared by all steps, or one per step

    Returns:
        Final state; decoding pops the symbols back in reverse order
    """
    for x, d in zip(xs, _per_step(dists, len(xs))):
        s = ans_encode(s, d.range_of(x), d.precision)
    return s


def sequence_decode(s: AnsState, count: int,
                    dists: Union[QuantizedDist, Sequence[QuantizedDist]]) -> Tuple[List, AnsState]:
    """Inverse of encode_sequence: returns the symbols in their original order."""
    xs = []
    for d in reversed(_per_step(dists, count)):
        s, x = ans_decode(s, d)
        xs.append(x)
    xs.reverse()
    return xs, s


def uniform_encode(s: AnsState, x: int, K: int) -> AnsState:
    """Encode x uniformly distributed over [0, K)."""
    if K < 1:
        raise InvalidInputError(f"uniform alphabet size must be >= 1, got {K}")
    if not 0 <= x < K:
        raise InvalidInputError(f"value {x} outside [0, {K})")
    return K * s + x


def uniform_decode(s: AnsState, K: int) -> Tuple[AnsState, int]:
    if K < 1:
        raise InvalidInputError(f"uniform alphabet size must be >= 1, got {K}")
    return divmod(s, K)


def bytes_encode(s: AnsState, r: bytes, Lmax: int) -> AnsState:
    """
    Encode a byte record of length L <= Lmax.

    Bytes r[L-1] .. r[0] are pushed with a uniform(256) distribution and the
    length last with uniform(Lmax + 1), so the decoder reads the length first.
    Pushing the bytes one by one is the same as shifting the state by 8L bits
    and adding the record read as a little-endian integer.
    """
    r = bytes(r)
    if len(r) > Lmax:
        raise InvalidInputError(f"record of {len(r)} bytes exceeds Lmax={Lmax}")
    s = (s << (8 * len(r))) | int.from_bytes(r, 'little')
    return uniform_encode(s, len(r), Lmax + 1)


def bytes_decode(s: AnsState, Lmax: int) -> Tuple[AnsState, bytes]:
    s, length = uniform_decode(s, Lmax + 1)
    width = 8 * length
    record = (s & ((1 << width) - 1)).to_bytes(length, 'little')
    return s >> width, record


def state_serialize(s: AnsState) -> bytes:
    """Minimal big-endian encoding; 0 is the single byte 0x00."""
    if s < 0:
        raise InvalidInputError(f"ANS state must be non-negative, got {s}")
    return s.to_bytes(max(1, (s.bit_length() + 7) // 8), 'big')


def state_deserialize(data: bytes) -> AnsState:
    data = bytes(data)
    if not data:
        raise MalformedStateError("empty")
    if len(data) > 1 and data[0] == 0:
        raise MalformedStateError("leading zero byte")
    return int.from_bytes(data, 'big')
