"""Tests for the extension solvers."""

import pytest

from rhstool.characterize import (
    brute_minimal_dominating_set,
    brute_minimal_rdf,
    check_extension_witness,
    is_minimal_rhf_theorem,
    is_minimal_rhs_theorem,
)
from rhstool.config import GuardConfig
from rhstool.core.graph import BoundedRdInstance, Graph
from rhstool.core.hypergraph import RhsPair, RomanAssignment
from rhstool.core.validity import is_rdf
from rhstool.extend import (
    ExtAnswer,
    bounded_ext_rd,
    ext_ds_split,
    ext_rhf_general,
    ext_rhf_surjective,
    ext_rhs,
    extend_pair,
    promote_closure,
)
from rhstool.reductions import find_split_partition
from rhstool.utils.errors import GuardRefusal, InstanceError, PreconditionError


def _assign(h, **values):
    return RomanAssignment.from_names(h.vertices, values)


@pytest.mark.unit
class TestExtRhs:
    """Test pair extension."""

    def test_extensible(self, ex1):
        """Test U = ({}, {c}) extends to ({1,2,3}, {c})."""
        answer = ext_rhs(ex1, RhsPair.of(ex1, [], ['c']))
        assert answer
        assert answer.witness == RhsPair.of(ex1, ['1', '2', '3'], ['c'])
        assert is_minimal_rhs_theorem(ex1, answer.witness)

    def test_index_meets_vertex(self, ex1):
        """Test an index of U1 hit by U2 means no."""
        answer = ext_rhs(ex1, RhsPair.of(ex1, ['4'], ['c']))
        assert not answer
        assert "'4'" in answer.reason

    def test_vertex_without_private_edge(self, ex1):
        """Test a vertex of U2 that no edge needs means no."""
        answer = ext_rhs(ex1, RhsPair.of(ex1, [], ['a', 'c', 'd']))
        assert not answer.decision
        assert "'c'" in answer.reason

    def test_bad_pre_solution(self, ex1):
        """Test a pre-solution outside the instance is rejected."""
        with pytest.raises(InstanceError):
            ext_rhs(ex1, RhsPair(0, 1 << 7))

    def test_extend_pair_raw(self):
        """Test the raw extension over edge bit sets."""
        assert extend_pair([0b01, 0b10], 0, 0b01) == 0b10
        assert extend_pair([0b01, 0b10], 0b01, 0b01) is None


@pytest.mark.unit
class TestExtRhfSurjective:
    """Test rhf extension when tau-free indices are hit by 2-vertices."""

    def test_single_two(self, ex2, ex2_tau):
        """Test g = d=2 extends to a=1, c=1, e=1, d=2."""
        answer = ext_rhf_surjective(ex2, ex2_tau, _assign(ex2, d=2))
        assert answer.decision
        assert answer.witness == _assign(ex2, a=1, c=1, e=1, d=2)
        assert is_minimal_rhf_theorem(ex2, ex2_tau, answer.witness)

    def test_promotion_forces_no(self, ex2, ex2_tau):
        """Test d=1 is raised next to b=2 and then lacks a private edge."""
        answer = ext_rhf_surjective(ex2, ex2_tau, _assign(ex2, b=2, d=1, e=2))
        assert not answer.decision
        assert "'d'" in answer.reason

    def test_no_private_edge(self, ex2, ex2_tau):
        """Test b=2 and d=2 leave d without a private edge besides its tau-edge."""
        answer = ext_rhf_surjective(ex2, ex2_tau, _assign(ex2, b=2, d=2, e=2))
        assert not answer.decision
        assert answer.reason

    def test_precondition(self, ex2, ex2_tau):
        """Test index 5 must be hit by a 2."""
        with pytest.raises(PreconditionError) as exc_info:
            ext_rhf_surjective(ex2, ex2_tau, RomanAssignment.zeros(ex2.n))
        assert '5' in str(exc_info.value)

    def test_promote_closure(self, ex2, ex2_tau):
        """Test the closure raises collisions and 1-vertices next to 2-vertices."""
        closed = promote_closure(ex2, ex2_tau, _assign(ex2, a=1, b=1, e=1))
        assert closed == _assign(ex2, a=2, b=2, e=2)
        assert ex2_tau.is_injective_on(closed.ones)


@pytest.mark.unit
class TestExtRhfGeneral:
    """Test rhf extension without preconditions."""

    def test_witness_strategy(self, ex2, ex2_tau):
        """Test the witness search returns R2={d} with rho(d)=5."""
        f = _assign(ex2, d=1, e=1)
        answer = ext_rhf_general(ex2, ex2_tau, f, strategy='witness')
        assert answer.decision
        assert answer.witness is None
        assert answer.certificate.r2 == ex2.vertex_mask(['d'])
        assert answer.certificate.rho == {ex2.vertex_id('d'): ex2.edge_id('5')}
        assert check_extension_witness(ex2, ex2_tau, f, answer.certificate)

    def test_sweep_strategy(self, ex2, ex2_tau):
        """Test the sweep returns a minimal rhf above f."""
        f = _assign(ex2, d=1, e=1)
        answer = ext_rhf_general(ex2, ex2_tau, f, strategy='sweep')
        assert answer.decision
        assert f.leq(answer.witness)
        assert is_minimal_rhf_theorem(ex2, ex2_tau, answer.witness)

    def test_strategies_agree_on_no(self, ex2, ex2_tau):
        """Test both strategies reject an assignment with every vertex at 2."""
        f = RomanAssignment.constant(ex2.n, 2)
        assert not ext_rhf_general(ex2, ex2_tau, f, strategy='sweep')
        assert not ext_rhf_general(ex2, ex2_tau, f, strategy='witness')

    def test_sweep_guard(self, ex2, ex2_tau):
        """Test the sweep refuses too many free coordinates."""
        with pytest.raises(GuardRefusal):
            ext_rhf_general(ex2, ex2_tau, RomanAssignment.zeros(ex2.n),
                            guards=GuardConfig(max_sweep_free=3))

    def test_sweep_in_pool(self, ex2, ex2_tau):
        """Test a pooled sweep returns the same first witness."""
        f = _assign(ex2, d=1)
        serial = ext_rhf_general(ex2, ex2_tau, f, strategy='sweep')
        pooled = ext_rhf_general(ex2, ex2_tau, f, strategy='sweep', jobs=2)
        assert pooled.witness == serial.witness

    def test_unknown_strategy(self, ex2, ex2_tau):
        """Test an unknown strategy name."""
        with pytest.raises(ValueError):
            ext_rhf_general(ex2, ex2_tau, RomanAssignment.zeros(ex2.n), strategy='guess')


@pytest.mark.unit
class TestBoundedExtRd:
    """Test bounded Roman domination extension."""

    def test_path_instance(self, bounded_instance):
        """Test the shipped P4 instance extends to b=2, d=1."""
        inst = bounded_instance.bounded()
        answer = bounded_ext_rd(inst)
        assert answer.decision
        g = inst.graph
        assert answer.witness.to_names(g.vertices) == {'b': 2, 'd': 1}
        assert inst.lower.leq(answer.witness) and answer.witness.leq(inst.upper)
        assert brute_minimal_rdf(g, answer.witness)

    def test_inconsistent_bounds(self, p3_instance):
        """Test f above h is a no."""
        g = p3_instance.graph
        inst = BoundedRdInstance(g, RomanAssignment((0, 2, 0)), RomanAssignment((2, 1, 2)))
        assert not bounded_ext_rd(inst).decision

    def test_isolated_zero(self):
        """Test a vertex capped at 0 without a neighbour that may take 2."""
        g = Graph.build(['a', 'b'], [('a', 'b')])
        inst = BoundedRdInstance(g, RomanAssignment((0, 0)), RomanAssignment((0, 1)))
        answer = bounded_ext_rd(inst)
        assert not answer.decision
        assert "'a'" in answer.reason

    def test_unbounded_is_plain_extension(self, p3_instance):
        """Test h = 2 everywhere and f = 0 always extends."""
        g = p3_instance.graph
        inst = BoundedRdInstance(g, RomanAssignment.zeros(3), RomanAssignment.constant(3, 2))
        answer = bounded_ext_rd(inst)
        assert answer.decision
        assert is_rdf(g, answer.witness)


@pytest.mark.unit
class TestExtDsSplit:
    """Test dominating set extension on split graphs."""

    def test_shipped_split_graph(self, split_instance):
        """Test U = {i1} extends to {i1, i2, i3}."""
        g = split_instance.graph
        clique, independent = find_split_partition(g)
        assert g.vertex_tokens(clique) == ['c1', 'c2', 'c3']
        answer = ext_ds_split(g, clique, independent, g.vertex_mask(['i1']))
        assert answer.decision
        assert g.vertex_tokens(answer.witness) == ['i1', 'i2', 'i3']
        assert brute_minimal_dominating_set(g, answer.witness)

    def test_not_extensible(self, split_instance):
        """Test U = {i1, c2} has no minimal dominating superset."""
        g = split_instance.graph
        clique, independent = find_split_partition(g)
        answer = ext_ds_split(g, clique, independent, g.vertex_mask(['i1', 'c2']))
        assert not answer.decision

    def test_bad_partition(self, split_instance):
        """Test a partition that is not a split partition."""
        g = split_instance.graph
        clique = g.vertex_mask(['c1', 'i1'])
        with pytest.raises(InstanceError):
            ext_ds_split(g, clique, g.all_vertices & ~clique, 0)

    def test_answer_truthiness(self):
        """Test ExtAnswer is truthy exactly when the decision is yes."""
        assert ExtAnswer(True)
        assert not ExtAnswer(False, reason='x')
