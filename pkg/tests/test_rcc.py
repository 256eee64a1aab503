"""
Tests for partition coding (RCC) and the savings arithmetic.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from permucodec.ans import UniformCodec, initial_state, uniform_encode
from permucodec.errors import CorruptMessageError, InvalidInputError
from permucodec.multiset import Multiset, roc_encode, sequential_encode
from permucodec.partition import (
    Partition,
    bytes_per_element,
    compare_schemes,
    foata_canonicalize,
    implied_log_prob,
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
    set_partitions,
    sqrt_cluster_savings,
)


def random_partition(rng, n, k):
    labels = np.concatenate([np.arange(k), rng.integers(0, k, size=n - k)])
    rng.shuffle(labels)
    return Partition.from_lists([np.flatnonzero(labels == c).tolist() for c in range(k)])


def random_sizes(rng, max_k=30, max_size=40):
    return [int(x) for x in rng.integers(1, max_size + 1, size=int(rng.integers(1, max_k + 1)))]


class TestPartition:

    def test_equality_ignores_order(self):
        assert Partition.from_lists([[1, 3], [5, 2, 4]]) == Partition.from_lists([[4, 2, 5], [3, 1]])

    def test_properties(self):
        p = Partition.from_lists([[2, 4, 5], [1, 3], [0]])
        assert (p.n, p.k, p.sizes) == (6, 3, [3, 2, 1])

    def test_duplicate_element(self):
        with pytest.raises(InvalidInputError):
            Partition.from_lists([[1, 2], [2, 3]])


class TestFoata:

    def test_example(self):
        assert foata_canonicalize([[3, 1], [5, 4, 2]]) == [[2, 4, 5], [1, 3]]
        assert foata_canonicalize(Partition.from_lists([[1, 3], [2, 4, 5]])) == [[2, 4, 5], [1, 3]]

    def test_canonical_is_fixed_point(self, rng):
        p = random_partition(rng, 40, 7)
        canonical = foata_canonicalize(p)
        assert foata_canonicalize(canonical) == canonical
        assert [c[0] for c in canonical] == sorted((min(c) for c in p.clusters), reverse=True)

    @pytest.mark.parametrize("clusters", [[[1, 2], [2]], [[1], []]])
    def test_invalid(self, clusters):
        with pytest.raises(InvalidInputError):
            foata_canonicalize(clusters)


class TestRoundTrip:

    def test_random_partitions(self, rng):
        s0 = initial_state()
        for _ in range(30):
            n = int(rng.integers(1, 300))
            p = random_partition(rng, n, int(rng.integers(1, n + 1)))
            codec = UniformCodec(n)
            s = rcc_encode(p, codec, s0)
            assert rcc_decode(s, n, codec) == (p, s0)

    def test_sparse_ids(self):
        p = Partition.from_lists([[900, 7], [12], [450, 451, 3]])
        codec = UniformCodec(1000)
        s0 = initial_state()
        assert rcc_decode(rcc_encode(p, codec, s0), p.n, codec) == (p, s0)

    def test_empty(self):
        codec = UniformCodec(1)
        s0 = initial_state()
        assert rcc_encode(Partition.from_lists([]), codec, s0) == s0
        assert rcc_decode(s0, 0, codec) == (Partition.from_lists([]), s0)

    def test_repeated_head_is_corrupt(self):
        codec = UniformCodec(10)
        s = uniform_encode(uniform_encode(initial_state(), 3, 10), 3, 10)
        with pytest.raises(CorruptMessageError):
            rcc_decode(s, 2, codec)


class TestSavings:

    def _measured(self, p):
        codec = UniformCodec(p.n)
        s0 = initial_state()
        plain = sequential_encode(sorted(x for c in p.clusters for x in c), codec, s0)
        return plain.bit_length() - rcc_encode(p, codec, s0).bit_length()

    def test_three_two_one(self):
        p = Partition.from_lists([[0, 1, 2], [3, 4], [5]])
        assert partition_order_info(p.sizes) == pytest.approx(1.0)
        assert abs(self._measured(p) - 1) <= 1

    def test_singletons_save_nothing(self):
        p = Partition.from_lists([[x] for x in range(50)])
        assert partition_order_info(p.sizes) == 0.0
        assert abs(self._measured(p)) <= 1

    def test_random_partitions(self, rng):
        for _ in range(25):
            n = int(rng.integers(1, 3000))
            p = random_partition(rng, n, int(rng.integers(1, n + 1)))
            assert abs(self._measured(p) - partition_order_info(p.sizes)) <= 2


class TestImpliedModel:

    @pytest.mark.parametrize("n,bell", [(4, 15), (5, 52)])
    def test_sums_to_one(self, n, bell):
        partitions = list(set_partitions(range(n)))
        assert len(partitions) == bell
        assert len({Partition.from_lists(p) for p in partitions}) == bell
        total = sum(Fraction(math.prod(math.factorial(len(c) - 1) for c in p), math.factorial(n))
                    for p in partitions)
        assert total == 1
        assert sum(2.0 ** implied_log_prob([len(c) for c in p]) for p in partitions) == pytest.approx(1.0)


class TestVectorIndexArithmetic:

    @pytest.mark.parametrize("n,expected", [(1e6, 1.06), (1e7, 1.27), (1e8, 1.48), (1e9, 1.69)])
    def test_sqrt_clusters(self, n, expected):
        assert sqrt_cluster_savings(n) == pytest.approx(expected, abs=0.01)

    def test_thousand_by_thousand(self):
        sizes = [1000] * 1000
        assert partition_order_info(sizes) == pytest.approx(8.519e6, rel=1e-3)
        assert bytes_per_element(sizes) == pytest.approx(1.06, abs=0.01)

    @pytest.mark.parametrize("code_bytes,external,expected", [
        (4, False, 54.8), (8, False, 33.9), (4, True, 8.9), (8, True, 6.7),
    ])
    def test_storage_percentages(self, code_bytes, external, expected):
        assert index_savings_percentage(1e6, code_bytes, external) == pytest.approx(expected, abs=0.05)


class TestSchemeComparison:

    def test_three_one(self):
        rcc, roc1, roc2 = compare_schemes([3, 1])
        assert (round(rcc, 3), round(roc1, 3), round(roc2, 3)) == (1.0, 0.585, -0.415)

    def test_singletons_lose_with_roc(self):
        n = 6
        rcc, roc1, _ = compare_schemes([1] * n)
        assert rcc == 0.0
        assert roc1 == pytest.approx(-math.log2(math.factorial(n)))

    def test_ordering_of_schemes(self, rng):
        for _ in range(10000):
            sizes = random_sizes(rng)
            rcc, roc1, roc2 = compare_schemes(sizes, smallest_first=True)
            assert roc1 <= rcc + 1e-9
            assert roc2 <= rcc + 1e-9
            if math.factorial(len(sizes)) >= sum(sizes):
                assert roc1 <= roc2 + 1e-9

    def test_largest_first_can_beat_rcc(self):
        sizes = list(range(39, 0, -1)) + [1]
        rcc, _, roc2 = compare_schemes(sizes)
        assert roc2 > rcc
        rcc, _, roc2 = compare_schemes(sizes, smallest_first=True)
        assert roc2 <= rcc

    def test_bad_sizes(self):
        with pytest.raises(InvalidInputError):
            compare_schemes([3, 0])


class TestVisits:

    def _visits(self, visit_counter, p):
        codec = UniformCodec(p.n)
        s0 = initial_state()
        before = visit_counter()
        assert rcc_decode(rcc_encode(p, codec, s0), p.n, codec) == (p, s0)
        return visit_counter() - before

    @pytest.mark.parametrize("k", [1, 8, 64, 512])
    def test_bounded_by_cluster_sizes(self, rng, visit_counter, k):
        p = random_partition(rng, 4096, k)
        bound = sum(n_i * (1.44 * math.log2(n_i + 2) + 2) for n_i in p.sizes)
        assert self._visits(visit_counter, p) <= 4 * bound

    def test_adapts_to_cluster_sizes(self, visit_counter):
        n = 4096
        one = self._visits(visit_counter, Partition.from_lists([range(n)]))
        singletons = self._visits(visit_counter, Partition.from_lists([[x] for x in range(n)]))
        assert singletons == 0
        assert one > 10 * n


class TestRocClusterCoders:

    @pytest.mark.parametrize("encode,decode", [(roc1_encode, roc1_decode), (roc2_encode, roc2_decode)])
    def test_round_trip(self, rng, encode, decode):
        s0 = initial_state()
        for _ in range(20):
            n = int(rng.integers(1, 200))
            p = random_partition(rng, n, int(rng.integers(1, n + 1)))
            codec = UniformCodec(n)
            assert decode(encode(p, codec, s0), n, codec) == (p, s0)

    @pytest.mark.parametrize("encode,decode", [(roc1_encode, roc1_decode), (roc2_encode, roc2_decode)])
    def test_empty(self, encode, decode):
        codec = UniformCodec(1)
        s0 = initial_state()
        assert encode(Partition.from_lists([]), codec, s0) == s0
        assert decode(s0, 0, codec) == (Partition.from_lists([]), s0)

    def _plain(self, p, codec, s0):
        return sequential_encode(sorted(x for c in p.clusters for x in c), codec, s0).bit_length()

    def test_roc1_savings_match_smallest_first(self, rng):
        s0 = initial_state()
        for _ in range(15):
            n = int(rng.integers(2, 1500))
            p = random_partition(rng, n, int(rng.integers(1, n + 1)))
            codec = UniformCodec(n)
            measured = self._plain(p, codec, s0) - roc1_encode(p, codec, s0).bit_length()
            expected = compare_schemes(p.sizes, smallest_first=True).roc1_bits
            assert abs(measured - expected) <= 2

    def test_roc2_savings_match_decode_order(self, rng):
        s0 = initial_state()
        for _ in range(15):
            n = int(rng.integers(2, 1500))
            p = random_partition(rng, n, int(rng.integers(1, n + 1)))
            codec = UniformCodec(n)
            sampled = []
            s = roc2_encode(p, codec, s0, sampled)
            measured = self._plain(p, codec, s0) - s.bit_length()
            expected = compare_schemes([len(c) for c in reversed(sampled)]).roc2_bits
            assert abs(measured - expected) <= 2

    def test_rcc_saves_most(self, rng):
        s0 = initial_state()
        p = random_partition(rng, 1000, 30)
        codec = UniformCodec(1000)
        rcc = rcc_encode(p, codec, s0).bit_length()
        assert rcc <= roc1_encode(p, codec, s0).bit_length() + 2
        assert rcc <= roc2_encode(p, codec, s0).bit_length() + 2

    def test_roc1_repeated_element_is_corrupt(self):
        codec = UniformCodec(10)
        s = initial_state()
        s = uniform_encode(s, 4, 10)
        s = uniform_encode(s, 0, 1)
        s = uniform_encode(s, 4, 10)
        s = uniform_encode(s, 0, 2)
        with pytest.raises(CorruptMessageError):
            roc1_decode(s, 2, codec)

    def test_roc2_too_many_clusters_is_corrupt(self):
        codec = UniformCodec(10)
        s = roc_encode(Multiset((3, 5)), codec, initial_state())
        s = uniform_encode(s, 1, 2)
        s = uniform_encode(s, 1, 2)
        with pytest.raises(CorruptMessageError):
            roc2_decode(s, 2, codec)


class TestSavingsBracket:

    def test_configurations(self):
        assert max_savings_sizes(10, 3) == [8, 1, 1]
        assert min_savings_sizes(10, 3) == [4, 3, 3]
        with pytest.raises(InvalidInputError):
            min_savings_sizes(3, 4)

    def test_bracket_random_configurations(self, rng):
        n = 200
        for k in [1, 2, 5, 20, 100, 200]:
            lo = partition_order_info(min_savings_sizes(n, k))
            hi = partition_order_info(max_savings_sizes(n, k))
            for _ in range(50):
                bits = partition_order_info(random_partition(rng, n, k).sizes)
                assert lo - 1e-6 <= bits <= hi + 1e-6
