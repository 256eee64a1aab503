"""
Partition Savings Experiment Runner

Runs four experiments:
- Measured RCC savings against sum_i log2((n_i - 1)!) on random clusterings
- Savings bracket: max/min savings configurations against random sizes
- Vector index table: bytes per element and storage saved for sqrt(n)
  equal clusters, n = 10^6 .. 10^9
- Coding times of RCC, ROC-1 and ROC-2 over n and k
"""

import os
import sys
import time

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), '../..'))
sys.path.insert(0, os.path.join(PROJECT_ROOT, 'src'))

import numpy as np
import pandas as pd

from permucodec.ans import UniformCodec, initial_state
from permucodec.multiset import sequential_encode
from permucodec.partition import (
    Partition,
    compare_schemes,
    index_savings_percentage,
    max_savings_sizes,
    min_savings_sizes,
    partition_order_info,
    rcc_decode,
    rcc_encode,
    roc1_decode,
    roc1_encode,
    roc2_decode,
    roc2_encode,
    sqrt_cluster_savings,
)

RESULTS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'results')
SEED_BITS = 64
CODE_BYTES = [4, 8]


def random_partition(n: int, k: int, rng: np.random.Generator) -> Partition:
    """k non-empty clusters over 0..n-1 with random sizes."""
    labels = np.concatenate([np.arange(k), rng.integers(0, k, size=n - k)])
    rng.shuffle(labels)
    return Partition.from_lists([np.flatnonzero(labels == c).tolist() for c in range(k)])


def run_rcc_savings(rng: np.random.Generator, trials: int = 40, max_n: int = 10000):
    print("\n" + "="*70)
    print("RCC SAVINGS ON RANDOM CLUSTERINGS")
    print("="*70)
    rows = []
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        k = int(rng.integers(1, n + 1))
        p = random_partition(n, k, rng)
        codec = UniformCodec(n)
        s0 = initial_state(SEED_BITS)
        s = rcc_encode(p, codec, s0)
        decoded, restored = rcc_decode(s, n, codec)
        assert decoded == p and restored == s0

        plain = sequential_encode(list(range(n)), codec, s0)
        measured = plain.bit_length() - s.bit_length()
        expected = partition_order_info(p.sizes)
        rows.append({'n': n, 'k': k, 'measured_bits': measured, 'expected_bits': expected})
        print(f"  n={n:<6} k={k:<6} measured={measured:12.1f} expected={expected:12.1f}")
    return pd.DataFrame(rows)


def run_bracket(rng: np.random.Generator, n: int = 1000, samples: int = 200):
    print("\n" + "="*70)
    print(f"SAVINGS BRACKET (n={n})")
    print("="*70)
    rows = []
    for k in [2, 5, 10, 50, 100, 500]:
        lo = compare_schemes(min_savings_sizes(n, k)).rcc_bits
        hi = compare_schemes(max_savings_sizes(n, k)).rcc_bits
        random_bits = [partition_order_info(random_partition(n, k, rng).sizes) for _ in range(samples)]
        rows.append({'k': k, 'min_bits': lo, 'max_bits': hi,
                     'random_min_bits': min(random_bits), 'random_max_bits': max(random_bits)})
        print(f"  k={k:<4} min={lo:10.1f} random=[{min(random_bits):10.1f}, {max(random_bits):10.1f}] "
              f"max={hi:10.1f}")
    return pd.DataFrame(rows)


def run_index_table():
    print("\n" + "="*70)
    print("VECTOR INDEX SAVINGS (sqrt(n) clusters of sqrt(n) elements)")
    print("="*70)
    rows = []
    for exponent in range(6, 10):
        n = 10.0 ** exponent
        row = {'n': int(n), 'bytes_per_element': sqrt_cluster_savings(n)}
        for code_bytes in CODE_BYTES:
            row[f'sequential_ids_{code_bytes}B'] = index_savings_percentage(n, code_bytes, False)
            row[f'external_ids_{code_bytes}B'] = index_savings_percentage(n, code_bytes, True)
        rows.append(row)
        print(f"  n=10^{exponent}  {row['bytes_per_element']:.2f} bytes/element  " +
              "  ".join(f"{k}={v:.1f}%" for k, v in row.items() if k.endswith('B')))
    return pd.DataFrame(rows)


SCHEMES = {
    'RCC': (rcc_encode, rcc_decode),
    'ROC-1': (roc1_encode, roc1_decode),
    'ROC-2': (roc2_encode, roc2_decode),
}


def run_timing(rng: np.random.Generator, sizes=(1000, 4000, 16000), repeats: int = 3):
    print("\n" + "="*70)
    print("CODING TIMES")
    print("="*70)
    rows = []
    for n in sizes:
        for k in sorted({10, int(np.sqrt(n)), n // 10}):
            p = random_partition(n, k, rng)
            codec = UniformCodec(n)
            s0 = initial_state(SEED_BITS)
            for scheme, (encode, decode) in SCHEMES.items():
                encode_times, decode_times = [], []
                for _ in range(repeats):
                    start = time.perf_counter()
                    s = encode(p, codec, s0)
                    encode_times.append(time.perf_counter() - start)
                    start = time.perf_counter()
                    decoded, restored = decode(s, n, codec)
                    decode_times.append(time.perf_counter() - start)
                    assert decoded == p and restored == s0
                row = {'scheme': scheme, 'n': n, 'k': k, 'message_bits': s.bit_length(),
                       'encode_s': min(encode_times), 'decode_s': min(decode_times)}
                rows.append(row)
                print(f"  {scheme:<6} n={n:<6} k={k:<5} bits={row['message_bits']:<9} "
                      f"encode={row['encode_s']*1e3:8.1f}ms decode={row['decode_s']*1e3:8.1f}ms")
    return pd.DataFrame(rows)


def main():
    """Run all partition experiments."""
    os.makedirs(RESULTS_DIR, exist_ok=True)
    rng = np.random.default_rng(0)

    run_rcc_savings(rng).to_csv(os.path.join(RESULTS_DIR, 'rcc_savings.csv'), index=False)
    run_bracket(rng).to_csv(os.path.join(RESULTS_DIR, 'savings_bracket.csv'), index=False)
    run_index_table().to_csv(os.path.join(RESULTS_DIR, 'index_savings.csv'), index=False)
    run_timing(rng).to_csv(os.path.join(RESULTS_DIR, 'coding_times.csv'), index=False)

    print(f"\nResults saved to: {RESULTS_DIR}/")


if __name__ == "__main__":
    main()
