"""
Savings arithmetic for partitions.

Order information, the model implied by RCC, and the comparison against the
two ways ROC can code a clustering:

- ROC-1 sends every cluster size with a uniform code and ROC-codes each
  cluster into a shared state
- ROC-2 additionally samples the order of the clusters with bits-back, which
  needs the number of clusters sent as well

All quantities are in bits.
"""

import math
from typing import Iterable, Iterator, List, NamedTuple, Sequence

import numpy as np

from permucodec.errors import InvalidInputError
from permucodec.info import log2_factorial, log2_factorial_approx


class SchemeComparison(NamedTuple):
    rcc_bits: float
    roc1_bits: float
    roc2_bits: float


def _check_sizes(sizes: Sequence[int]) -> List[int]:
    sizes = [int(n) for n in sizes]
    if any(n < 1 for n in sizes):
        raise InvalidInputError(f"cluster sizes must be >= 1, got {sizes}")
    return sizes


def partition_order_info(sizes: Sequence[int]) -> float:
    """sum_i log2((n_i - 1)!), the log-size of the partition's equivalence class."""
    sizes = _check_sizes(sizes)
    if not sizes:
        return 0.0
    return float(np.sum(log2_factorial_approx(np.asarray(sizes) - 1)))


def implied_log_prob(sizes: Sequence[int]) -> float:
    """log2 Q(partition) = sum_i log2((n_i - 1)!) - log2(n!)."""
    sizes = _check_sizes(sizes)
    return sum(log2_factorial(n - 1) for n in sizes) - log2_factorial(sum(sizes))


def compare_schemes(sizes: Sequence[int], smallest_first: bool = False) -> SchemeComparison:
    """
    Savings of RCC, ROC-1 and ROC-2 for clusters of the given sizes.

    ROC-1 pays log2(n - N_i) bits for the i-th size, N_i being the elements
    coded before it; the sizes are taken in the given order unless
    smallest_first is set. Sending the smallest clusters first keeps
    n - N_i >= (k - i + 1) n_i, which bounds both ROC schemes by RCC.
    """
    sizes = _check_sizes(sizes)
    if smallest_first:
        sizes = sorted(sizes)
    n, k = sum(sizes), len(sizes)
    rcc = sum(log2_factorial(n_i - 1) for n_i in sizes)
    roc1, coded = 0.0, 0
    for n_i in sizes:
        roc1 += log2_factorial(n_i) - math.log2(n - coded)
        coded += n_i
    roc2 = roc1 + log2_factorial(k) - math.log2(n) if n else roc1
    return SchemeComparison(rcc, roc1, roc2)


def max_savings_sizes(n: int, k: int) -> List[int]:
    """One cluster of n - k + 1 elements, every other cluster a singleton."""
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    return [n - k + 1] + [1] * (k - 1)


def min_savings_sizes(n: int, k: int) -> List[int]:
    """Clusters as equal as possible: n // k, plus one for the first n % k."""
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    return [n // k + (1 if i < n % k else 0) for i in range(k)]


def bytes_per_element(sizes: Sequence[int]) -> float:
    """Order information in bytes per element."""
    sizes = _check_sizes(sizes)
    return partition_order_info(sizes) / (8 * sum(sizes))


def sqrt_cluster_savings(n: float) -> float:
    """
    Bytes per element saved for sqrt(n) equal clusters of sqrt(n) elements.

    Uses log|Π| = sqrt(n) * log2((sqrt(n) - 1)!) with a real-valued sqrt(n),
    the setting of inverted-file vector indexes.
    """
    root = math.sqrt(n)
    return float(root * log2_factorial_approx(root - 1.0)) / (8.0 * n)


def index_savings_percentage(n: float, code_bytes: float, external_ids: bool) -> float:
    """
    Percentage of index storage saved by dropping cluster labels.

    With sequential ids each element costs code_bytes plus log2(n) bits of id,
    all of which RCC removes along with the order information. With external
    8-byte ids the ids are kept and only the order information is saved.
    """
    saved = sqrt_cluster_savings(n)
    if external_ids:
        return 100.0 * saved / (code_bytes + 8.0)
    id_bytes = math.log2(n) / 8.0
    return 100.0 * (saved + id_bytes) / (code_bytes + id_bytes)


def set_partitions(elements: Sequence) -> Iterator[List[List]]:
    """Every set partition of the elements (Bell number many)."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in set_partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller
