"""
Input parsing and canonical output for every mode.

Formats:
    multiset   newline-delimited byte records
    nested     one JSON object per line; each key/value pair is one record
    partition  one cluster per line, whitespace-separated non-negative ids
    graph      one edge "u v" per line; ids 0..n-1, or arbitrary labels with
               a labels sidecar
    lvm        one observation id per line
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from permucodec.errors import InputParseError, InvalidInputError
from permucodec.graph.rec import GraphEdgeList, edge_sort
from permucodec.multiset.nested import DEFAULT_SIZE_BOUND
from permucodec.multiset.roc import Multiset
from permucodec.partition.rcc import Partition, foata_canonicalize

PathLike = Union[str, Path]


def _lines(data: bytes) -> List[bytes]:
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    return lines


def _text_lines(path: PathLike) -> List[Tuple[int, str]]:
    """Non-blank lines with their 1-based numbers."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InputParseError(f"not UTF-8 text: {exc}") from None
    return [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]


def parse_multiset(path: PathLike, lmax: int) -> Multiset:
    records = _lines(Path(path).read_bytes())
    for lineno, record in enumerate(records, start=1):
        if len(record) > lmax:
            raise InputParseError(f"record of {len(record)} bytes exceeds --lmax {lmax}", lineno)
    return Multiset(tuple(records))


def format_multiset(m: Multiset) -> bytes:
    return b"".join(record + b"\n" for record in m)


def pair_record(key: str, value) -> bytes:
    """One key/value pair as canonical compact JSON."""
    return json.dumps([key, value], separators=(',', ':'), ensure_ascii=False,
                      sort_keys=True).encode("utf-8")


def parse_nested(path: PathLike, lmax: int, size_bound: int = DEFAULT_SIZE_BOUND) -> Multiset:
    maps = []
    for lineno, line in _text_lines(path):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputParseError(f"invalid JSON: {exc.msg}", lineno) from None
        if not isinstance(obj, dict):
            raise InputParseError("each line must be a JSON object", lineno)
        if len(obj) > size_bound:
            raise InputParseError(f"map of {len(obj)} pairs exceeds --size-bound {size_bound}", lineno)
        records = tuple(pair_record(k, v) for k, v in obj.items())
        for record in records:
            if len(record) > lmax:
                raise InputParseError(f"key/value record of {len(record)} bytes exceeds --lmax {lmax}",
                                      lineno)
        maps.append(Multiset(records))
    return Multiset(tuple(maps))


def format_nested(outer: Multiset) -> bytes:
    lines = []
    for inner in outer:
        obj = dict(json.loads(record.decode("utf-8")) for record in inner)
        lines.append(json.dumps(obj, separators=(',', ':'), ensure_ascii=False, sort_keys=True))
    return "".join(line + "\n" for line in sorted(lines)).encode("utf-8")


def parse_partition(path: PathLike) -> Partition:
    clusters = []
    for lineno, line in _text_lines(path):
        try:
            cluster = [int(tok) for tok in line.split()]
        except ValueError:
            raise InputParseError("cluster ids must be integers", lineno) from None
        if any(x < 0 for x in cluster):
            raise InputParseError("cluster ids must be non-negative", lineno)
        clusters.append(cluster)
    try:
        return Partition.from_lists(clusters)
    except InvalidInputError as exc:
        raise InputParseError(str(exc)) from None


def format_partition(p: Partition) -> bytes:
    """Clusters one per line, ascending inside, ordered by smallest element."""
    clusters = list(reversed(foata_canonicalize(p)))
    return "".join(" ".join(map(str, c)) + "\n" for c in clusters).encode("utf-8")


def parse_graph(path: PathLike, directed: bool, nodes: Optional[int] = None,
                labels: bool = False) -> Tuple[GraphEdgeList, Optional[List[str]]]:
    """
    Parse an edge list.

    With labels=True vertex tokens are arbitrary strings; ids are assigned in
    sorted label order and the label list is returned for the sidecar.
    """
    pairs = []
    for lineno, line in _text_lines(path):
        tokens = line.split()
        if len(tokens) != 2:
            raise InputParseError("expected two vertices per line", lineno)
        if not labels:
            try:
                u, w = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise InputParseError("vertex ids must be integers (use --labels otherwise)",
                                      lineno) from None
            if u < 0 or w < 0:
                raise InputParseError("vertex ids must be non-negative", lineno)
            if nodes is not None and max(u, w) >= nodes:
                raise InputParseError(f"vertex id {max(u, w)} >= --nodes {nodes}", lineno)
            pairs.append((u, w))
        else:
            pairs.append((tokens[0], tokens[1]))

    label_list = None
    if labels:
        label_list = sorted({v for pair in pairs for v in pair})
        ids = {label: i for i, label in enumerate(label_list)}
        pairs = [(ids[u], ids[w]) for u, w in pairs]
        if nodes is not None and nodes < len(label_list):
            raise InputParseError(f"{len(label_list)} labels but --nodes {nodes}")

    if nodes is None:
        nodes = 1 + max((max(pair) for pair in pairs), default=-1)
    return GraphEdgeList(nodes, tuple(pairs), directed), label_list


def read_labels(path: PathLike) -> List[str]:
    return [line for line in Path(path).read_text(encoding="utf-8").splitlines() if line]


def write_labels(path: PathLike, labels: Sequence[str]) -> None:
    Path(path).write_text("".join(label + "\n" for label in labels), encoding="utf-8")


def format_graph(g: GraphEdgeList, labels: Optional[Sequence[str]] = None) -> bytes:
    lines = []
    for u, w in edge_sort(g).edges:
        if labels is not None:
            u, w = labels[u], labels[w]
        lines.append(f"{u} {w}\n")
    return "".join(lines).encode("utf-8")


def parse_observations(path: PathLike, num_observations: int) -> List[int]:
    xs = []
    for lineno, line in _text_lines(path):
        try:
            x = int(line)
        except ValueError:
            raise InputParseError("observations must be integers", lineno) from None
        if not 0 <= x < num_observations:
            raise InputParseError(f"observation {x} outside [0, {num_observations})", lineno)
        xs.append(x)
    return xs


def format_observations(xs: Sequence[int]) -> bytes:
    return "".join(f"{x}\n" for x in xs).encode("utf-8")


def canonical_text(mode_name: str, path: PathLike, **options) -> bytes:
    """Canonical output text for an input file, as decode would write it."""
    if mode_name == 'multiset':
        return format_multiset(parse_multiset(path, options.get('lmax', 65535)))
    if mode_name == 'nested':
        return format_nested(parse_nested(path, options.get('lmax', 65535),
                                          options.get('size_bound', DEFAULT_SIZE_BOUND)))
    if mode_name == 'partition':
        return format_partition(parse_partition(path))
    if mode_name == 'graph':
        labels = options.get('labels', False)
        g, label_list = parse_graph(path, options.get('directed', False),
                                    options.get('nodes'), labels)
        return format_graph(g, label_list)
    raise InvalidInputError(f"no canonical form for mode {mode_name!r}")
