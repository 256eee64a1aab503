#!/usr/bin/env python3
"""
permucodec - Command-line front end

Usage:
    permucodec encode <input> <message> --mode <mode> [options]
    permucodec decode <message> <output> [options]
    permucodec info <input> --mode <mode> [options]

Exit codes: 0 success, 1 usage, 2 input parse error, 3 corrupt message or
integrity failure.
"""

import argparse
import logging
import sys
from typing import List, Optional

from permucodec import __version__
from permucodec.ans.codecs import DEFAULT_LMAX
from permucodec.ans.core import DEFAULT_SEED_BITS
from permucodec.cli.commands import MODES, CodecOptions, cmd_decode, cmd_encode, cmd_info
from permucodec.errors import (
    CorruptMessageError,
    InputParseError,
    IntegrityError,
    PermucodecError,
)
from permucodec.graph.polya import DEFAULT_BETA
from permucodec.multiset.nested import DEFAULT_SIZE_BOUND

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CORRUPT = 3

EPILOG = """
Modes:
  multiset   - Newline-delimited byte records, order discarded
  nested     - One JSON object per line; a multiset of multisets of key/value records
  partition  - One cluster per line, whitespace-separated non-negative integer ids
  graph      - One edge "u v" per line (use --directed, --nodes, --labels)
  lvm        - One observation id per line, coded with bits-back under --model

Examples:
  permucodec encode records.txt records.rpcz --mode multiset
  permucodec decode records.rpcz records.out
  permucodec encode edges.txt edges.rpcz --mode graph --directed --nodes 1000
  permucodec encode names.txt names.rpcz --mode graph --labels names.labels
  permucodec decode names.rpcz names.out --labels names.labels
  permucodec info clusters.txt --mode partition
  permucodec encode data.txt data.rpcz --mode lvm --model toy.lvm
"""


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with the usage code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--mode', '-m', choices=MODES, default='multiset',
                        help='Object type (default: multiset)')
    common.add_argument('--directed', action='store_true',
                        help='Treat graph edges as ordered pairs')
    common.add_argument('--beta', type=int, default=DEFAULT_BETA,
                        help=f'Pólya urn pseudo-count (default: {DEFAULT_BETA})')
    common.add_argument('--lmax', type=int, default=DEFAULT_LMAX,
                        help=f'Longest byte record in bytes (default: {DEFAULT_LMAX})')
    common.add_argument('--nodes', type=int, default=None,
                        help='Graph vertex count (default: largest id + 1)')
    common.add_argument('--seed-bits', type=int, default=DEFAULT_SEED_BITS,
                        help=f'Initial state exponent; decode must match (default: {DEFAULT_SEED_BITS})')
    common.add_argument('--size-bound', type=int, default=DEFAULT_SIZE_BOUND,
                        help=f'Largest inner multiset in nested mode (default: {DEFAULT_SIZE_BOUND})')
    common.add_argument('--labels', default=None,
                        help='Graph label sidecar: written by encode, read by decode')
    common.add_argument('--model', default=None,
                        help='Latent variable model file for lvm mode')
    common.add_argument('--verbose', '-v', action='store_true',
                        help='Enable debug logging')

    parser = _Parser(
        prog='permucodec',
        description='Compress multisets, partitions and graphs without storing their order',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    encode = sub.add_parser('encode', parents=[common], help='Encode an input file to a message')
    encode.add_argument('input', help='Input file')
    encode.add_argument('output', help='Message file to write')

    decode = sub.add_parser('decode', parents=[common], help='Decode a message to canonical text')
    decode.add_argument('input', help='Message file')
    decode.add_argument('output', help='Output file to write')

    info = sub.add_parser('info', parents=[common], help='Report information content and savings')
    info.add_argument('input', help='Input file')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        options = CodecOptions(
            mode=args.mode,
            directed=args.directed,
            beta=args.beta,
            lmax=args.lmax,
            nodes=args.nodes,
            seed_bits=args.seed_bits,
            labels=args.labels,
            model=args.model,
            size_bound=args.size_bound,
        )
        if args.command == 'encode':
            return cmd_encode(args.input, args.output, options)
        if args.command == 'decode':
            return cmd_decode(args.input, args.output, options)
        return cmd_info(args.input, options)
    except InputParseError as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CorruptMessageError, IntegrityError) as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (PermucodecError, OSError) as exc:
        print(f"[ERROR] {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
