from permucodec.ans.core import (
    DEFAULT_SEED_BITS,
    AnsState,
    QuantizedDist,
    RangeTriple,
    ans_decode,
    ans_encode,
    ans_pop,
    bytes_decode,
    bytes_encode,
    encode_sequence,
    forward_lookup,
    initial_state,
    reverse_lookup,
    sequence_decode,
    state_deserialize,
    state_serialize,
    uniform_decode,
    uniform_encode,
)
from permucodec.ans.codecs import (
    CODEC_BYTES,
    CODEC_UNIFORM,
    DEFAULT_LMAX,
    BytesCodec,
    CategoricalCodec,
    SymbolCodec,
    UniformCodec,
)
