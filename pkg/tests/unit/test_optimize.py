"""Tests for the greedy, exact and brute-force optimizers and the cover solvers."""

import math

import pytest

from rhstool.config import GuardConfig
from rhstool.core.graph import Graph
from rhstool.core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from rhstool.core.validity import is_rdf, is_rhf, is_rhs
from rhstool.generators import gen_tight
from rhstool.optimize import (
    ExactRhsSolver,
    brute_min_rhf,
    brute_min_rhs,
    exact_min_rdf,
    exact_min_rhf,
    exact_min_rhs,
    greedy_hitting_set,
    greedy_rhf,
    greedy_rhs,
    rec_min,
    rvc_decide,
    rvc_enumerate,
    rvc_min,
    rvc_search,
)
from rhstool.reductions import edge_cover_hypergraph, vertex_cover_hypergraph
from rhstool.utils.errors import GuardRefusal, InfeasibleError, InstanceError


@pytest.mark.unit
class TestGreedy:
    """Test the greedy approximations."""

    def test_ex2(self, ex2):
        """Test greedy takes b then d on EX2."""
        r, weight = greedy_rhs(ex2)
        assert r == RhsPair(0, ex2.vertex_mask(['b', 'd']))
        assert weight == 4
        assert is_rhs(ex2, r)

    @pytest.mark.parametrize('n', [1, 3, 6])
    def test_ratio_two_on_tight(self, n):
        """Test greedy pays 2n on TIGHT(n) against an optimum of n."""
        h = gen_tight(n)
        _, weight = greedy_rhs(h)
        assert weight == 2 * n
        assert weight / exact_min_rhs(h).weight == 2

    def test_ratio_bound(self, ex1, ex2):
        """Test the 2(ln|I| + 1) bound on the worked examples."""
        for h in (ex1, ex2):
            _, weight = greedy_rhs(h)
            assert weight <= 2 * (math.log(h.m) + 1) * exact_min_rhs(h).weight

    def test_empty_edges_go_to_r1(self):
        """Test empty edges are paid for in R1."""
        h = Hypergraph.build(['x'], [('1', []), ('2', ['x'])])
        r, weight = greedy_rhs(h)
        assert r == RhsPair(0b01, 0b1)
        assert weight == 3

    def test_hitting_set_ties(self):
        """Test ties go to the smallest vertex."""
        h = Hypergraph.build(['x', 'y'], [('1', ['x', 'y'])])
        assert greedy_hitting_set(h) == 0b01

    def test_greedy_rhf(self, ex2, ex2_tau):
        """Test greedy rhf puts the hitting set at 2."""
        f, weight = greedy_rhf(ex2, ex2_tau)
        assert f == RomanAssignment.from_names(ex2.vertices, {'b': 2, 'd': 2})
        assert weight == 4
        assert is_rhf(ex2, ex2_tau, f)

    def test_greedy_rhf_infeasible(self):
        """Test an empty edge makes rhf infeasible."""
        h = Hypergraph.build(['x'], [('1', ['x']), ('2', [])])
        with pytest.raises(InfeasibleError):
            greedy_rhf(h, Correspondence((0,)))


@pytest.mark.unit
class TestExactRhs:
    """Test the branch-and-reduce optimizer."""

    def test_ex2_optimum(self, ex2):
        """Test the EX2 optimum 3 with witness ({5}, {b})."""
        result = exact_min_rhs(ex2)
        assert result.weight == 3
        assert result.witness == RhsPair.of(ex2, ['5'], ['b'])
        assert result.nodes >= 1

    def test_ex1_optimum(self, ex1):
        """Test the EX1 optimum 4 with witness ({3, 5}, {a})."""
        result = exact_min_rhs(ex1)
        assert result.weight == 4
        assert result.witness == RhsPair.of(ex1, ['3', '5'], ['a'])

    def test_matches_brute(self, ex1, ex2, tight3):
        """Test exact and brute optima agree."""
        for h in (ex1, ex2, tight3):
            assert exact_min_rhs(h).weight == brute_min_rhs(h).weight

    def test_heavy_vertex_taken(self):
        """Test a vertex in every edge beats paying for each index."""
        h = Hypergraph.build(['x', 'y', 'z', 'w'],
                             [(str(i), ['x', v]) for i, v in enumerate('yzw', 1)]
                             + [('4', ['x'])])
        result = ExactRhsSolver(h).solve()
        assert result.weight == 2
        assert result.witness == RhsPair(0, h.vertex_mask(['x']))

    def test_edgeless(self):
        """Test the optimum of a hypergraph without edges is 0."""
        result = exact_min_rhs(Hypergraph.build(['x'], []))
        assert result.weight == 0
        assert result.witness == RhsPair(0, 0)

    def test_brute_guard(self, ex1):
        """Test the brute optimizer refuses past its guard."""
        with pytest.raises(GuardRefusal):
            brute_min_rhs(ex1, GuardConfig(max_brute_size=5))


@pytest.mark.unit
class TestExactRhf:
    """Test minimum rhf and rdf."""

    def test_ex2_optimum(self, ex2, ex2_tau):
        """Test the EX2 rhf optimum is 4."""
        result = exact_min_rhf(ex2, ex2_tau)
        assert result.weight == 4
        assert is_rhf(ex2, ex2_tau, result.witness)
        assert brute_min_rhf(ex2, ex2_tau).weight == 4

    def test_infeasible(self):
        """Test an empty tau-free edge."""
        h = Hypergraph.build(['x'], [('1', ['x']), ('2', [])])
        with pytest.raises(InfeasibleError):
            exact_min_rhf(h, Correspondence((0,)))
        with pytest.raises(InfeasibleError):
            brute_min_rhf(h, Correspondence((0,)))

    def test_min_rdf_path(self, p3_instance):
        """Test the path a - b - c has Roman domination number 2 at b."""
        g = p3_instance.graph
        result = exact_min_rdf(g)
        assert result.weight == 2
        assert result.witness == RomanAssignment((0, 2, 0))
        assert is_rdf(g, result.witness)

    def test_min_rdf_edgeless(self):
        """Test isolated vertices each need a 1."""
        g = Graph.build(['a', 'b'], [])
        assert exact_min_rdf(g).weight == 2


@pytest.mark.unit
class TestRomanVertexCover:
    """Test Roman vertex cover decision, enumeration and minimum."""

    def test_single_edge(self, single_edge):
        """Test a single edge has three minimal covers of weight at most 2."""
        found = []
        stats = rvc_enumerate(single_edge, 2, found.append)
        assert stats.solutions == 3
        assert sorted(r.weight for r in found) == [1, 2, 2]
        assert rvc_decide(single_edge, 1)
        assert not rvc_decide(single_edge, 0)

    def test_triangle(self, triangle):
        """Test K3 has a Roman vertex cover of weight 3 but not 2."""
        assert rvc_decide(triangle, 3)
        assert not rvc_decide(triangle, 2)
        result = rvc_min(triangle)
        assert result.weight == 3
        assert is_rhs(vertex_cover_hypergraph(triangle), result.witness)

    def test_node_bound(self, triangle):
        """Test the search stays within 3 * 2^k nodes."""
        for k in range(7):
            _, nodes = rvc_search(triangle, k)
            assert nodes <= 3 * 2 ** k

    def test_negative_k(self, triangle):
        """Test a negative budget is rejected."""
        with pytest.raises(InstanceError):
            rvc_decide(triangle, -1)
        with pytest.raises(InstanceError):
            rvc_enumerate(triangle, -1)

    def test_edgeless(self):
        """Test a graph without edges needs nothing."""
        g = Graph.build(['a'], [])
        assert rvc_decide(g, 0)
        assert rvc_min(g).weight == 0


@pytest.mark.unit
class TestRomanEdgeCover:
    """Test Roman edge cover."""

    def test_triangle(self, triangle):
        """Test K3 has Roman edge cover number 3."""
        result = rec_min(triangle)
        assert result.weight == 3
        assert is_rhs(edge_cover_hypergraph(triangle), result.witness)

    def test_no_lighter_cover(self, triangle):
        """Test the brute optimum on the edge-cover hypergraph agrees."""
        assert brute_min_rhs(edge_cover_hypergraph(triangle)).weight == 3
