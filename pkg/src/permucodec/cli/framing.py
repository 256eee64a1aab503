"""
Message framing.

Layout of a message file:

    magic       4 bytes, b"RPCZ"
    version     1 byte
    mode        1 byte
    param count varint
    params      varints, meaning fixed per mode
    payload len varint
    payload     serialized final ANS state (minimal big-endian)

Varints are unsigned LEB128: 7 bits per byte, least significant group first,
high bit set on every byte but the last.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Dict, List, Tuple

from permucodec.errors import CorruptMessageError, InvalidInputError

MAGIC = b"RPCZ"
FORMAT_VERSION = 1


class Mode(IntEnum):
    MULTISET = 1
    NESTED = 2
    PARTITION = 3
    GRAPH_UNDIRECTED = 4
    GRAPH_DIRECTED = 5
    LVM = 6


# Fixed-length parameter names per mode; LVM appends the model weights.
PARAM_NAMES: Dict[Mode, Tuple[str, ...]] = {
    Mode.MULTISET: ('n', 'codec', 'lmax'),
    Mode.NESTED: ('count', 'codec', 'lmax', 'size_bound'),
    Mode.PARTITION: ('n', 'codec', 'alphabet'),
    Mode.GRAPH_UNDIRECTED: ('n', 'm', 'beta'),
    Mode.GRAPH_DIRECTED: ('n', 'm', 'beta'),
    Mode.LVM: ('count', 'latents', 'observations'),
}


def encode_varint(value: int) -> bytes:
    if value < 0:
        raise InvalidInputError(f"varints are unsigned, got {value}")
    out = bytearray()
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.append(byte | 0x80)
        else:
            out.append(byte)
            return bytes(out)


def decode_varint(data: bytes, offset: int) -> Tuple[int, int]:
    """Return (value, offset after the varint)."""
    value, shift = 0, 0
    while True:
        if offset >= len(data):
            raise CorruptMessageError("truncated header")
        byte = data[offset]
        offset += 1
        value |= (byte & 0x7F) << shift
        shift += 7
        if not byte & 0x80:
            return value, offset


@dataclass(frozen=True)
class Message:
    """A framed message: mode, integer parameters and the state payload."""
    mode: Mode
    params: Tuple[int, ...]
    payload: bytes

    def param(self, name: str) -> int:
        return self.params[PARAM_NAMES[self.mode].index(name)]

    def to_bytes(self) -> bytes:
        parts: List[bytes] = [MAGIC, bytes([FORMAT_VERSION, int(self.mode)]),
                              encode_varint(len(self.params))]
        parts += [encode_varint(p) for p in self.params]
        parts += [encode_varint(len(self.payload)), self.payload]
        return b"".join(parts)

    @property
    def header_size(self) -> int:
        return len(self.to_bytes()) - len(self.payload)

    @classmethod
    def from_bytes(cls, data: bytes) -> 'Message':
        """
        Parse a message.

        Raises:
            CorruptMessageError: on bad magic, version, mode, or a truncated
                or over-long payload
        """
        if data[:4] != MAGIC:
            raise CorruptMessageError("bad magic")
        if len(data) < 6:
            raise CorruptMessageError("truncated header")
        if data[4] != FORMAT_VERSION:
            raise CorruptMessageError(f"unsupported version {data[4]}")
        try:
            mode = Mode(data[5])
        except ValueError:
            raise CorruptMessageError(f"unknown mode {data[5]}") from None

        count, offset = decode_varint(data, 6)
        if count < len(PARAM_NAMES[mode]):
            raise CorruptMessageError(f"mode {mode.name} needs {len(PARAM_NAMES[mode])} parameters")
        params = []
        for _ in range(count):
            value, offset = decode_varint(data, offset)
            params.append(value)
        length, offset = decode_varint(data, offset)
        payload = data[offset:]
        if len(payload) < length:
            raise CorruptMessageError("truncated payload")
        if len(payload) > length:
            raise CorruptMessageError("trailing bytes after payload")
        return cls(mode, tuple(params), bytes(payload))
