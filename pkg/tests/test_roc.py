"""
Tests for multiset coding (ROC) and nested multisets.
"""

import math
from fractions import Fraction

import numpy as np
import pytest

from permucodec.ans import (
    BytesCodec,
    CategoricalCodec,
    QuantizedDist,
    UniformCodec,
    initial_state,
    uniform_encode,
)
from permucodec.errors import InvalidInputError
from permucodec.info import log2_factorial
from permucodec.multiset import (
    Multiset,
    NestedShape,
    multiset_info_content,
    nested_decode,
    nested_encode,
    nested_info_savings,
    nested_savings_bound,
    roc_decode,
    roc_encode,
    sequence_cost,
    sequential_decode,
    sequential_encode,
)
from permucodec.swor import SworTree, sample

SIZE_BOUND = 255


def _skewed_codec(rng, unique):
    probs = np.arange(1, unique + 1, dtype=np.float64) ** -1.2
    return CategoricalCodec(QuantizedDist.quantize(rng.permutation(probs), 1 << 20))


def _draw(rng, codec, size):
    d = codec.dist
    weights = np.asarray(d.weights, dtype=np.float64) / d.precision
    return Multiset(tuple(int(x) for x in rng.choice(len(d), size=size, p=weights)))


def _nested_sequential(outer, codec, s):
    """Nested layout without the outer or inner sampling: the order-keeping baseline."""
    for inner in reversed(outer.elements):
        s = sequential_encode(list(inner), codec, s)
        s = uniform_encode(s, len(inner), SIZE_BOUND + 1)
    return s


class TestMultiset:

    def test_order_does_not_matter(self):
        assert Multiset((3, 1, 2, 1)) == Multiset((1, 1, 2, 3))
        assert Multiset.from_counts({'x': 2, 'y': 1}) == Multiset(('y', 'x', 'x'))

    def test_counts(self):
        m = Multiset(tuple('abbccc'))
        assert len(m) == 6 and m.size == 6
        assert m.multiplicity('c') == 3
        assert m.counts() == {'a': 1, 'b': 2, 'c': 3}

    def test_bad_counts(self):
        with pytest.raises(InvalidInputError):
            Multiset.from_counts({'x': 0})

    def test_unorderable(self):
        with pytest.raises(InvalidInputError):
            Multiset((1, 'a'))


class TestRoundTrip:

    def test_random_multisets(self, rng):
        codec = _skewed_codec(rng, 50)
        s0 = initial_state()
        for size in [0, 1, 2, 17, 300]:
            m = _draw(rng, codec, size)
            s = roc_encode(m, codec, s0)
            assert roc_decode(s, len(m), codec) == (m, s0)

    def test_byte_records(self):
        codec = BytesCodec(64)
        m = Multiset((b"b", b"a", b"b", b"", b"longer record"))
        s0 = initial_state()
        assert roc_decode(roc_encode(m, codec, s0), len(m), codec) == (m, s0)

    def test_sequential_baseline(self):
        codec = BytesCodec(8)
        items = [b"z", b"a", b"m"]
        s0 = initial_state()
        assert sequential_decode(sequential_encode(items, codec, s0), 3, codec) == (items, s0)


class TestRate:

    @pytest.mark.parametrize("size", [2 ** 9, 2 ** 10, 2 ** 11])
    def test_close_to_information_content(self, rng, size):
        codec = _skewed_codec(rng, 512)
        m = _draw(rng, codec, size)
        s0 = initial_state()
        s = roc_encode(m, codec, s0)
        info = multiset_info_content(m, sequence_cost(m, codec))
        assert abs((s.bit_length() - s0.bit_length()) - info) <= 32

    def test_three_byte_lines(self):
        codec = BytesCodec(65535)
        m = Multiset((b"a", b"b", b"b"))
        s0 = initial_state()
        payload = roc_encode(m, codec, s0).bit_length() - 64
        assert abs(payload - (sequence_cost(m, codec) - math.log2(3))) <= 2

    @pytest.mark.parametrize("n", [100, 1000, 10000])
    def test_order_savings_of_distinct_records(self, rng, n):
        codec = BytesCodec(16)
        records = sorted({rng.bytes(16) for _ in range(n)})
        assert len(records) == n
        s0 = initial_state()
        sequential = sequential_encode(records, codec, s0).bit_length()
        roc = roc_encode(Multiset(tuple(records)), codec, s0).bit_length()
        assert abs((sequential - roc) - log2_factorial(n)) <= 32


class TestStepChange:

    def test_expected_change_per_step_is_nonnegative(self, rng):
        counts = {0: 4, 1: 2, 2: 1, 3: 1}
        m = Multiset.from_counts(counts)
        codec = CategoricalCodec(QuantizedDist(tuple(counts), tuple(counts.values())))
        trials = 20000
        totals = np.zeros(len(m))
        for _ in range(trials):
            s = (1 << 64) + int(rng.integers(0, 1 << 62))
            tree = SworTree.build(m.elements)
            for i in range(len(m)):
                before = math.log2(s)
                s, z = sample(s, tree)
                s = codec.encode(s, z)
                totals[i] += math.log2(s) - before
        assert np.all(totals / trials >= -0.01)

    def test_first_step_with_matching_codec_is_free(self):
        counts = {0: 4, 1: 2, 2: 1, 3: 1}
        m = Multiset.from_counts(counts)
        codec = CategoricalCodec(QuantizedDist(tuple(counts), tuple(counts.values())))
        for offset in range(64):
            s0 = (1 << 64) + offset
            s, z = sample(s0, SworTree.build(m.elements))
            assert codec.encode(s, z) == s0


class TestVisits:

    def _visits_per_element(self, visit_counter, m, codec):
        s0 = initial_state()
        before = visit_counter()
        s = roc_encode(m, codec, s0)
        assert roc_decode(s, len(m), codec) == (m, s0)
        return (visit_counter() - before) / len(m)

    @pytest.mark.parametrize("unique", [4, 64, 1024])
    def test_logarithmic_in_distinct_symbols(self, rng, visit_counter, unique):
        codec = UniformCodec(unique)
        m = Multiset(tuple(int(x) for x in rng.integers(0, unique, size=4096)))
        distinct = len(m.counts())
        assert self._visits_per_element(visit_counter, m, codec) <= 4 * (1.44 * math.log2(distinct + 2) + 2)

    def test_flat_in_alphabet_size(self, rng, visit_counter):
        per_element = []
        for bits in (10, 20):
            alphabet = 1 << bits
            m = Multiset(tuple(int(x) for x in rng.choice(alphabet, size=512, replace=False)))
            per_element.append(self._visits_per_element(visit_counter, m, UniformCodec(alphabet)))
        assert max(per_element) / min(per_element) <= 1.2


class TestSamplingPath:

    def test_path_probability_is_inverse_multinomial(self, rng):
        codec = _skewed_codec(rng, 10)
        for _ in range(200):
            m = _draw(rng, codec, int(rng.integers(1, 51)))
            trace = []
            roc_encode(m, codec, initial_state(), trace)
            product = Fraction(1)
            for p, size in trace:
                product *= Fraction(p, size)
            expected = Fraction(math.prod(math.factorial(c) for c in m.counts().values()),
                                math.factorial(len(m)))
            assert product == expected


class TestNested:

    def test_round_trip(self, rng):
        codec = BytesCodec(8)
        outer = Multiset((
            Multiset((b"k1", b"v1", b"v1")),
            Multiset((b"x",)),
            Multiset(()),
            Multiset((b"x",)),
            Multiset((b"k1", b"k2")),
        ))
        s0 = initial_state()
        s = nested_encode(outer, codec, s0, SIZE_BOUND)
        assert nested_decode(s, NestedShape(len(outer), SIZE_BOUND), codec) == (outer, s0)

    def test_two_singletons_save_one_bit(self):
        codec = BytesCodec(8)
        outer = Multiset((Multiset((b"a",)), Multiset((b"b",))))
        s0 = initial_state()
        nested = nested_encode(outer, codec, s0, SIZE_BOUND).bit_length()
        sequential = _nested_sequential(outer, codec, s0).bit_length()
        assert nested_info_savings(outer) == pytest.approx(1.0)
        assert abs((sequential - nested) - 1) <= 1

    def test_corpus_savings_near_bound(self, rng):
        codec = BytesCodec(32)
        maps = set()
        while len(maps) < 100:
            size = int(rng.integers(5, 16))
            maps.add(Multiset(tuple(b"key%d=%d" % (k, int(rng.integers(1000))) for k in range(size))))
        outer = Multiset(tuple(maps))
        bound = nested_savings_bound(outer)
        assert nested_info_savings(outer) == pytest.approx(bound)

        s0 = initial_state()
        measured = (_nested_sequential(outer, codec, s0).bit_length()
                    - nested_encode(outer, codec, s0, SIZE_BOUND).bit_length())
        assert abs(measured - bound) <= 0.05 * bound

    def test_size_bound(self):
        outer = Multiset((Multiset((b"a", b"b", b"c")),))
        with pytest.raises(InvalidInputError):
            nested_encode(outer, BytesCodec(8), initial_state(), size_bound=2)

    def test_flat_elements_rejected(self):
        with pytest.raises(InvalidInputError):
            nested_encode(Multiset((b"a",)), BytesCodec(8), initial_state())
