"""
encode / decode / info commands.

Every command returns the process exit code and lets PermucodecError
subclasses propagate; main() maps them to exit codes.
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Optional, Tuple

from permucodec.ans.codecs import (
    CODEC_BYTES,
    CODEC_UNIFORM,
    DEFAULT_LMAX,
    BytesCodec,
    SymbolCodec,
    UniformCodec,
)
from permucodec.ans.core import (
    DEFAULT_SEED_BITS,
    AnsState,
    QuantizedDist,
    initial_state,
    state_deserialize,
    state_serialize,
)
from permucodec.cli import ingestion
from permucodec.cli.framing import PARAM_NAMES, Message, Mode
from permucodec.errors import (
    CorruptMessageError,
    IntegrityError,
    InvalidInputError,
    MalformedStateError,
)
from permucodec.graph.polya import DEFAULT_BETA
from permucodec.graph.rec import (
    GraphEdgeList,
    er_graph_nll,
    graph_nll,
    order_savings,
    polya_sequence_nll,
    rec_decode,
    rec_encode,
)
from permucodec.info import log2_multinomial
from permucodec.lvm.bbans import DiscreteLvm, bbans_decode, bbans_encode, marginal_cross_entropy, nelbo
from permucodec.multiset.nested import (
    DEFAULT_SIZE_BOUND,
    NestedShape,
    nested_decode,
    nested_encode,
    nested_info_savings,
    nested_savings_bound,
)
from permucodec.multiset.roc import Multiset, roc_decode, roc_encode, sequence_cost
from permucodec.partition.rcc import Partition, rcc_decode, rcc_encode
from permucodec.partition.savings import bytes_per_element, compare_schemes, implied_log_prob

logger = logging.getLogger(__name__)

MODES = ['multiset', 'nested', 'partition', 'graph', 'lvm']

# Bits the edge count would take if it were coded instead of framed.
EDGE_COUNT_BITS = 32


@dataclass
class CodecOptions:
    """Command-line settings shared by all commands."""
    mode: str = 'multiset'
    directed: bool = False
    beta: int = DEFAULT_BETA
    lmax: int = DEFAULT_LMAX
    nodes: Optional[int] = None
    seed_bits: int = DEFAULT_SEED_BITS
    labels: Optional[str] = None
    model: Optional[str] = None
    size_bound: int = DEFAULT_SIZE_BOUND

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidInputError(f"unknown mode {self.mode!r}, expected one of {MODES}")
        if self.beta < 1:
            raise InvalidInputError(f"--beta must be >= 1, got {self.beta}")
        if self.lmax < 0:
            raise InvalidInputError(f"--lmax must be non-negative, got {self.lmax}")
        if self.seed_bits < 0:
            raise InvalidInputError(f"--seed-bits must be non-negative, got {self.seed_bits}")
        if self.nodes is not None and self.nodes < 0:
            raise InvalidInputError(f"--nodes must be non-negative, got {self.nodes}")
        if self.size_bound < 0:
            raise InvalidInputError(f"--size-bound must be non-negative, got {self.size_bound}")

    @property
    def wire_mode(self) -> Mode:
        if self.mode == 'graph':
            return Mode.GRAPH_DIRECTED if self.directed else Mode.GRAPH_UNDIRECTED
        return {'multiset': Mode.MULTISET, 'nested': Mode.NESTED,
                'partition': Mode.PARTITION, 'lvm': Mode.LVM}[self.mode]


def _print_banner(title: str) -> None:
    print(f"\n{'='*70}")
    print(title)
    print(f"{'='*70}")


def _print_row(key: str, value: Any) -> None:
    print(f"  {key + ':':<28} {value}")


def _load_model(options: CodecOptions) -> DiscreteLvm:
    if options.model is None:
        raise InvalidInputError("lvm mode needs --model")
    return DiscreteLvm.load(options.model)


def _model_params(lvm: DiscreteLvm) -> List[int]:
    prior, conditional, posterior = lvm.weight_rows()
    params = [lvm.num_latents, lvm.num_observations] + prior
    for row in conditional + posterior:
        params += row
    return params


def _model_from_params(params: Tuple[int, ...]) -> DiscreteLvm:
    k, x = params[1], params[2]
    weights = list(params[3:])
    if len(weights) != k + 2 * k * x:
        raise CorruptMessageError(f"model needs {k + 2 * k * x} weights, found {len(weights)}")
    prior = weights[:k]
    conditional = [weights[k + z * x: k + (z + 1) * x] for z in range(k)]
    base = k + k * x
    posterior = [weights[base + i * k: base + (i + 1) * k] for i in range(x)]
    try:
        return DiscreteLvm.from_weights(prior, conditional, posterior)
    except InvalidInputError as exc:
        raise CorruptMessageError(f"bad model: {exc}") from None


def _partition_alphabet(p: Partition) -> int:
    return 1 + max((x for cluster in p.clusters for x in cluster), default=0)


def build_message(input_path: str, options: CodecOptions) -> Tuple[Message, int]:
    """
    Parse input_path and encode it.

    Returns:
        (message, final ANS state)
    """
    s = initial_state(options.seed_bits)
    mode = options.wire_mode

    if mode == Mode.MULTISET:
        m = ingestion.parse_multiset(input_path, options.lmax)
        s = roc_encode(m, BytesCodec(options.lmax), s)
        params = (len(m), CODEC_BYTES, options.lmax)
    elif mode == Mode.NESTED:
        outer = ingestion.parse_nested(input_path, options.lmax, options.size_bound)
        s = nested_encode(outer, BytesCodec(options.lmax), s, options.size_bound)
        params = (len(outer), CODEC_BYTES, options.lmax, options.size_bound)
    elif mode == Mode.PARTITION:
        p = ingestion.parse_partition(input_path)
        alphabet = _partition_alphabet(p)
        s = rcc_encode(p, UniformCodec(alphabet), s)
        params = (p.n, CODEC_UNIFORM, alphabet)
    elif mode in (Mode.GRAPH_UNDIRECTED, Mode.GRAPH_DIRECTED):
        g, labels = ingestion.parse_graph(input_path, options.directed, options.nodes,
                                          options.labels is not None)
        if labels is not None:
            ingestion.write_labels(options.labels, labels)
            logger.debug("wrote %d labels to %s", len(labels), options.labels)
        s = rec_encode(g, options.beta, s)
        params = (g.n, g.m, options.beta)
    else:
        lvm = _load_model(options)
        xs = ingestion.parse_observations(input_path, lvm.num_observations)
        s = bbans_encode(xs, lvm, s)
        params = tuple([len(xs)] + _model_params(lvm))

    return Message(mode, tuple(params), state_serialize(s)), s


def decode_message(message: Message, options: CodecOptions) -> Tuple[Any, AnsState]:
    """
    Decode a message back to its object.

    Raises:
        CorruptMessageError: if the payload cannot be decoded
        IntegrityError: if decoding does not end at the initial state
    """
    try:
        s = state_deserialize(message.payload)
    except MalformedStateError as exc:
        raise CorruptMessageError(str(exc)) from None

    mode = message.mode
    try:
        if mode == Mode.MULTISET:
            obj, s = roc_decode(s, message.param('n'), _symbol_codec(message))
        elif mode == Mode.NESTED:
            shape = NestedShape(message.param('count'), message.param('size_bound'))
            obj, s = nested_decode(s, shape, _symbol_codec(message))
        elif mode == Mode.PARTITION:
            obj, s = rcc_decode(s, message.param('n'), _symbol_codec(message))
        elif mode in (Mode.GRAPH_UNDIRECTED, Mode.GRAPH_DIRECTED):
            beta = message.param('beta')
            if beta < 1:
                raise CorruptMessageError(f"beta must be >= 1, got {beta}")
            obj, s = rec_decode(s, message.param('n'), message.param('m'), beta,
                                directed=mode == Mode.GRAPH_DIRECTED)
        else:
            lvm = _model_from_params(message.params)
            obj, s = bbans_decode(s, message.param('count'), lvm)
    except (ValueError, KeyError) as exc:
        raise CorruptMessageError(str(exc)) from None

    if s != initial_state(options.seed_bits):
        raise IntegrityError("decoding did not end at the initial state")
    return obj, s


def _symbol_codec(message: Message) -> SymbolCodec:
    codec = message.param('codec')
    if codec == CODEC_BYTES:
        return BytesCodec(message.param('lmax'))
    if codec == CODEC_UNIFORM:
        alphabet = message.param('alphabet')
        if alphabet < 1:
            raise CorruptMessageError("empty alphabet")
        return UniformCodec(alphabet)
    raise CorruptMessageError(f"unknown symbol codec {codec}")


def format_object(message: Message, obj: Any, options: CodecOptions) -> bytes:
    mode = message.mode
    if mode == Mode.MULTISET:
        return ingestion.format_multiset(obj)
    if mode == Mode.NESTED:
        return ingestion.format_nested(obj)
    if mode == Mode.PARTITION:
        return ingestion.format_partition(obj)
    if mode in (Mode.GRAPH_UNDIRECTED, Mode.GRAPH_DIRECTED):
        labels = None
        if options.labels is not None:
            labels = ingestion.read_labels(options.labels)
            if len(labels) < obj.n:
                raise InvalidInputError(f"{len(labels)} labels for {obj.n} vertices")
        return ingestion.format_graph(obj, labels)
    return ingestion.format_observations(obj)


def cmd_encode(input_path: str, output_path: str, options: CodecOptions) -> int:
    message, s = build_message(input_path, options)
    data = message.to_bytes()
    Path(output_path).write_bytes(data)

    payload_bits = s.bit_length() - options.seed_bits
    _print_banner(f"ENCODED {message.mode.name}")
    for name, value in zip(PARAM_NAMES[message.mode], message.params):
        _print_row(name, value)
    _print_row("total bits", 8 * len(data))
    _print_row("payload bits", payload_bits)
    _print_row("header bits", 8 * message.header_size)
    _print_row("output", output_path)
    return 0


def cmd_decode(message_path: str, output_path: str, options: CodecOptions) -> int:
    message = Message.from_bytes(Path(message_path).read_bytes())
    obj, _ = decode_message(message, options)
    Path(output_path).write_bytes(format_object(message, obj, options))
    logger.debug("decoded %s message to %s", message.mode.name, output_path)
    return 0


def cmd_info(input_path: str, options: CodecOptions) -> int:
    mode = options.wire_mode
    if mode == Mode.MULTISET:
        _info_multiset(ingestion.parse_multiset(input_path, options.lmax), options)
    elif mode == Mode.NESTED:
        _info_nested(ingestion.parse_nested(input_path, options.lmax, options.size_bound), options)
    elif mode == Mode.PARTITION:
        _info_partition(ingestion.parse_partition(input_path))
    elif mode in (Mode.GRAPH_UNDIRECTED, Mode.GRAPH_DIRECTED):
        g, _ = ingestion.parse_graph(input_path, options.directed, options.nodes,
                                     options.labels is not None)
        _info_graph(g, options.beta)
    else:
        lvm = _load_model(options)
        _info_lvm(ingestion.parse_observations(input_path, lvm.num_observations), lvm)
    return 0


def _info_multiset(m: Multiset, options: CodecOptions) -> None:
    seq_bits = sequence_cost(m, BytesCodec(options.lmax))
    order_bits = log2_multinomial(m.counts().values())
    _print_banner("MULTISET")
    _print_row("elements", len(m))
    _print_row("distinct", len(m.counts()))
    _print_row("sequence bits", f"{seq_bits:.3f}")
    _print_row("order information bits", f"{order_bits:.3f}")
    _print_row("information content bits", f"{seq_bits - order_bits:.3f}")
    if len(m):
        _print_row("order bits/element", f"{order_bits / len(m):.3f}")


def _info_nested(outer: Multiset, options: CodecOptions) -> None:
    codec = BytesCodec(options.lmax)
    seq_bits = sum(sequence_cost(inner, codec) for inner in outer)
    savings = nested_info_savings(outer)
    _print_banner("NESTED MULTISET")
    _print_row("maps", len(outer))
    _print_row("records", sum(len(inner) for inner in outer))
    _print_row("sequence bits", f"{seq_bits:.3f}")
    _print_row("order information bits", f"{savings:.3f}")
    _print_row("distinct-map bound bits", f"{nested_savings_bound(outer):.3f}")
    _print_row("size side information bits",
               f"{len(outer) * math.log2(options.size_bound + 1):.3f}")


def _info_partition(p: Partition) -> None:
    sizes = p.sizes
    _print_banner("PARTITION")
    _print_row("elements", p.n)
    _print_row("clusters", p.k)
    if not sizes:
        return
    schemes = compare_schemes(sizes, smallest_first=True)
    _print_row("order information bits", f"{schemes.rcc_bits:.3f}")
    _print_row("order information", f"{bytes_per_element(sizes):.2f} bytes/element")
    _print_row("implied log2 probability", f"{implied_log_prob(sizes):.3f}")
    print(f"\n  {'scheme':<10} {'savings (bits)':>16}   (sizes sent smallest first)")
    print(f"  {'-'*27}")
    for name, bits in (("RCC", schemes.rcc_bits), ("ROC-1", schemes.roc1_bits),
                       ("ROC-2", schemes.roc2_bits)):
        print(f"  {name:<10} {bits:>16.3f}")


def _info_graph(g: GraphEdgeList, beta: int) -> None:
    nll = graph_nll(g, beta)
    saved = order_savings(g)
    _print_banner(f"GRAPH ({'directed' if g.directed else 'undirected'})")
    _print_row("vertices", g.n)
    _print_row("edges", g.m)
    _print_row("simple", g.is_simple())
    _print_row("sequence bits", f"{polya_sequence_nll(g, g.vertex_sequence(), beta):.3f}")
    if not g.directed and g.is_simple():
        _print_row("order bits saved", f"{saved:.3f} (m + log2 m! bits saved)")
    else:
        _print_row("order bits saved", f"{saved:.3f}")
    _print_row("information content bits", f"{nll:.3f}")
    _print_row(f"with edge count (+{EDGE_COUNT_BITS})", f"{nll + EDGE_COUNT_BITS:.3f}")
    if g.m:
        _print_row("bits/edge", f"{(nll + EDGE_COUNT_BITS) / g.m:.3f}")
    if not g.directed and g.is_simple() and g.m <= math.comb(g.n, 2):
        _print_row("Erdos-Renyi baseline bits", f"{er_graph_nll(g.n, g.m):.3f}")


def _info_lvm(xs: List[int], lvm: DiscreteLvm) -> None:
    _print_banner("LATENT VARIABLE MODEL")
    _print_row("observations", len(xs))
    _print_row("latents", lvm.num_latents)
    if not xs:
        return
    counts = {x: xs.count(x) for x in set(xs)}
    data_dist = QuantizedDist.from_weights(counts)
    bound = nelbo(lvm, data_dist)
    _print_row("NELBO bits/symbol", f"{bound:.3f}")
    _print_row("cross-entropy bits/symbol", f"{marginal_cross_entropy(lvm, data_dist):.3f}")
    _print_row("expected message bits", f"{bound * len(xs):.3f}")
