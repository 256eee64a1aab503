"""
Information-content arithmetic shared by the codecs.

Exact quantities are computed with Python big integers and only converted to
bits at the end; the log-gamma variants are for sizes where building the
integer would be wasteful (vector-database scale partitions).
"""

import math
from typing import Iterable

import numpy as np
from scipy.special import gammaln

LN2 = math.log(2.0)

# Above this, log2(n!) comes from log-gamma instead of the exact product.
EXACT_FACTORIAL_LIMIT = 1 << 16


def range_product(lo: int, hi: int) -> int:
    """Product lo * (lo + 1) * ... * (hi - 1), by binary splitting."""
    if hi - lo <= 0:
        return 1
    if hi - lo <= 16:
        return math.prod(range(lo, hi))
    mid = (lo + hi) // 2
    return range_product(lo, mid) * range_product(mid, hi)


def ascending_factorial(x: int, k: int) -> int:
    """x↑k = x (x + 1) ... (x + k - 1); x↑0 = 1."""
    return range_product(x, x + k)


def log2_int(x: int) -> float:
    """log2 of a positive integer of any size."""
    return math.log2(x)


def log2_factorial(n: int) -> float:
    """log2(n!), exact up to EXACT_FACTORIAL_LIMIT."""
    if n <= 1:
        return 0.0
    if n > EXACT_FACTORIAL_LIMIT:
        return math.lgamma(n + 1) / LN2
    return math.log2(range_product(2, n + 1))


def log2_factorial_approx(n) -> np.ndarray:
    """log2(n!) through log-gamma; accepts arrays and real n."""
    return gammaln(np.asarray(n, dtype=np.float64) + 1.0) / LN2


def log2_multinomial(counts: Iterable[int]) -> float:
    """log2(n! / prod(c!)) for the multiplicities of a multiset."""
    counts = [int(c) for c in counts]
    return log2_factorial(sum(counts)) - sum(log2_factorial(c) for c in counts)
