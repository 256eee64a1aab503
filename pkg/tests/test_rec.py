"""
Tests for graph coding (REC), the Pólya urn model and its Fenwick index.
"""

import math
from fractions import Fraction
from itertools import permutations

import pytest
from scipy.special import gammaln

from permucodec.ans import initial_state
from permucodec.errors import InvalidInputError
from permucodec.graph import (
    GraphEdgeList,
    PolyaContext,
    RecTrace,
    edge_sort,
    er_graph_nll,
    graph_nll,
    order_savings,
    polya_conditionals,
    polya_sequence_nll,
    preferential_attachment_graph,
    rec_decode,
    rec_encode,
    uniform_multigraph,
)
from permucodec.graph.fenwick import FenwickTree
from permucodec.info import ascending_factorial, log2_factorial


def _round_trip(g, beta=1):
    s0 = initial_state()
    s = rec_encode(g, beta, s0)
    decoded, restored = rec_decode(s, g.n, g.m, beta, g.directed)
    assert restored == s0
    assert decoded == g.canonical()
    return s


class TestGraphEdgeList:

    def test_edge_sort(self):
        g = GraphEdgeList(5, ((3, 4), (1, 2), (3, 2)))
        assert edge_sort(g).edges == ((1, 2), (2, 3), (3, 4))

    def test_directed_keeps_orientation(self):
        g = GraphEdgeList(3, ((2, 1), (0, 2)), directed=True)
        assert edge_sort(g).edges == ((0, 2), (2, 1))

    def test_vertex_out_of_range(self):
        with pytest.raises(InvalidInputError):
            GraphEdgeList(3, ((0, 3),))

    def test_degrees(self):
        g = GraphEdgeList(3, ((0, 0), (0, 1)))
        assert g.degrees() == [3, 1, 0]
        assert not g.is_simple()


class TestOrderSavings:

    def test_simple_graph(self, rng):
        g = preferential_attachment_graph(60, 3, seed=7)
        assert g.is_simple()
        assert order_savings(g) == pytest.approx(g.m + log2_factorial(g.m))

    def test_single_loop(self):
        g = GraphEdgeList(1, ((0, 0),))
        assert order_savings(g) == 0.0
        assert graph_nll(g) == 0.0

    def test_repeated_edge(self):
        g = GraphEdgeList(3, ((1, 2), (1, 2)))
        assert order_savings(g) == pytest.approx(2.0)

    def test_directed_has_no_orientation_bits(self):
        g = GraphEdgeList(4, ((0, 1), (2, 3)), directed=True)
        assert order_savings(g) == pytest.approx(1.0)


class TestRoundTrip:

    def test_example_graph(self):
        g = GraphEdgeList(5, ((3, 4), (1, 2), (3, 2)))
        _round_trip(g)

    def test_empty(self):
        s0 = initial_state()
        assert rec_encode(GraphEdgeList(4), 1, s0) == s0
        assert rec_decode(s0, 4, 0) == (GraphEdgeList(4), s0)

    @pytest.mark.parametrize("directed", [False, True])
    @pytest.mark.parametrize("beta", [1, 3])
    def test_multigraphs(self, rng, directed, beta):
        for _ in range(5):
            g = uniform_multigraph(int(rng.integers(1, 30)), int(rng.integers(1, 200)), rng,
                                   directed=directed)
            _round_trip(g, beta)

    def test_loops_and_multi_edges(self):
        g = GraphEdgeList(3, ((0, 0), (0, 0), (1, 2), (2, 1), (1, 2), (2, 2)))
        _round_trip(g)


class TestRate:

    @pytest.mark.parametrize("directed", [False, True])
    def test_growth_equals_information_content(self, rng, directed):
        g = uniform_multigraph(50, 400, rng, directed=directed)
        s = _round_trip(g)
        measured = s.bit_length() - initial_state().bit_length()
        assert abs(measured - graph_nll(g)) <= 2

    def test_preferential_attachment_gap(self):
        g = preferential_attachment_graph(1000, 5, seed=1)
        s = _round_trip(g)
        nll = graph_nll(g)
        assert (s.bit_length() - 64 - nll) / nll < 0.001

    def test_nll_is_polya_minus_savings(self, rng):
        g = uniform_multigraph(20, 60, rng)
        expected = polya_sequence_nll(g, g.vertex_sequence()) - order_savings(g)
        assert graph_nll(g) == pytest.approx(expected)


class TestEdgeSampling:

    def test_path_probability(self):
        g = GraphEdgeList(4, ((0, 1), (0, 1), (0, 1), (2, 2), (2, 2), (1, 3)))
        trace = RecTrace()
        rec_encode(g, 1, initial_state(), trace)
        product = Fraction(1)
        for p, size in trace.edge_steps:
            product *= Fraction(p, size)
        expected = Fraction(math.factorial(3) * math.factorial(2), math.factorial(g.m))
        assert product == expected

    def test_decoder_mirrors_contexts(self, rng):
        g = uniform_multigraph(15, 40, rng)
        trace = RecTrace()
        s = rec_encode(g, 2, initial_state(), trace)
        contexts = []
        rec_decode(s, g.n, g.m, 2, contexts=contexts)
        assert contexts == list(reversed(trace.contexts))


class TestPolya:

    def test_permutation_invariance(self):
        g = GraphEdgeList(4, ((0, 1), (1, 1), (2, 3)))
        values = {polya_sequence_nll(g, order) for order in permutations(g.vertex_sequence())}
        assert len(values) == 1

    def test_joint_is_product_of_conditionals(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 8))
            beta = int(rng.integers(1, 4))
            order = [int(v) for v in rng.integers(0, n, size=int(rng.integers(0, 12)))]
            product = Fraction(1)
            for step in polya_conditionals(order, n, beta):
                product *= step
            numerator = math.prod(ascending_factorial(beta, order.count(v)) for v in range(n))
            assert product == Fraction(numerator, ascending_factorial(n * beta, len(order)))

    def test_ranges_tile_precision(self, rng):
        counts = [int(c) for c in rng.integers(0, 5, size=23)]
        ctx = PolyaContext(23, 2, counts)
        assert ctx.precision == sum(counts) + 23 * 2
        j = 0
        for v in range(23):
            t = ctx.range_of(v)
            assert t.c == j and t.p == counts[v] + 2
            assert ctx.reverse_lookup(j).symbol == v
            assert ctx.reverse_lookup(j + t.p - 1).symbol == v
            j += t.p

    def test_invalid_parameters(self):
        with pytest.raises(InvalidInputError):
            PolyaContext(0)
        with pytest.raises(InvalidInputError):
            PolyaContext(3, beta=0)
        with pytest.raises(InvalidInputError):
            PolyaContext(3).decrement(1)


class TestFenwick:

    def test_prefix_and_search(self, rng):
        size = 37
        tree, counts = FenwickTree(size), [0] * size
        for _ in range(300):
            i, delta = int(rng.integers(size)), int(rng.integers(1, 4))
            tree.add(i, delta)
            counts[i] += delta
        for v in range(size + 1):
            assert tree.prefix(v) == sum(counts[:v])
        beta = 1
        total = sum(counts) + beta * size
        for j in range(total):
            expected = max(v for v in range(size) if sum(counts[:v]) + beta * v <= j)
            assert tree.search(j, beta) == expected

    def test_visits_are_logarithmic(self):
        tree = FenwickTree(1 << 12)
        tree.add(5, 1)
        tree.visits = 0
        tree.search(100, 1)
        assert tree.visits <= 13


class TestErdosRenyi:

    def test_values(self):
        assert er_graph_nll(4, 2) == pytest.approx(math.log2(15))
        assert er_graph_nll(10, 0) == 0.0

    def test_too_many_edges(self):
        with pytest.raises(InvalidInputError):
            er_graph_nll(3, 4)

    def test_exact_agrees_with_log_gamma(self):
        pairs = math.comb(100, 2)
        nats = gammaln(pairs + 1) - gammaln(200 + 1) - gammaln(pairs - 200 + 1)
        assert abs(er_graph_nll(100, 200) - nats / math.log(2)) < 1e-6


class TestVisits:

    @pytest.mark.parametrize("n,per_node", [(200, 2), (1000, 4), (4000, 3)])
    def test_quasi_linear_in_edges(self, visit_counter, n, per_node):
        g = preferential_attachment_graph(n, per_node, seed=1)
        _round_trip(g)
        assert visit_counter() <= 24 * g.m * (math.log2(g.m + n) + 1)

    def test_multigraph(self, rng, visit_counter):
        g = uniform_multigraph(50, 5000, rng)
        _round_trip(g)
        assert visit_counter() <= 24 * g.m * (math.log2(g.m + g.n) + 1)


class TestGenerators:

    def test_preferential_attachment(self):
        g = preferential_attachment_graph(200, 4, seed=3)
        assert g.n == 200 and g.m == (200 - 4) * 4
        assert g.is_simple()

    def test_uniform_multigraph_without_loops(self, rng):
        g = uniform_multigraph(5, 300, rng, loops=False)
        assert g.m == 300
        assert all(u != w for u, w in g.edges)
