"""
Extension solvers.

Each solver decides whether a pre-solution lies below some minimal
solution and, when it does, usually returns one:

- ext_rhs: pairs (R1, R2), polynomial
- ext_rhf_surjective: assignments when every tau-free index is already hit
  by a 2, polynomial
- ext_rhf_general: any assignment, by a guarded sweep over all larger
  assignments or a search for an extensibility witness (R2, rho)
- bounded_ext_rd: Roman domination between a lower and an upper bound
- ext_ds_split: minimal dominating sets of split graphs

Choices left open by the algorithms always take the smallest dense id.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .characterize import ExtensionWitness, is_minimal_rhf_theorem
from .config import GuardConfig
from .core.bitset import bit, contains, iter_bits, lowest, popcount, subsets
from .core.graph import BoundedRdInstance, Graph
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .reductions import bounded_rd_to_rhf, ds_split_to_rhs
from .utils.errors import InstanceError, PreconditionError, check_guard
from .utils.pool import get_pool

logger = logging.getLogger(__name__)

STRATEGIES = ('sweep', 'witness')


@dataclass
class ExtAnswer:
    """
    Answer of an extension solver.

    Attributes:
        decision: True when some minimal solution dominates the pre-solution
        witness: One such minimal solution (pair, assignment or vertex set)
        reason: Why the answer is no, when the solver can tell
        certificate: Extensibility witness (R2, rho) found by the witness search
    """
    decision: bool
    witness: Optional[Union[RhsPair, RomanAssignment, int]] = None
    reason: Optional[str] = None
    certificate: Optional[ExtensionWitness] = None

    def __bool__(self) -> bool:
        return self.decision


def extend_pair(edges: Sequence[int], r1: int, r2: int) -> Optional[int]:
    """
    Extend (r1, r2) over raw edge bit sets; return M1 or None.

    Rejects when an index of r1 meets r2 or a member of r2 has no edge it
    hits alone. Otherwise every index missed by r2 joins M1.
    """
    m1 = r1
    private = 0
    for i, edge in enumerate(edges):
        met = edge & r2
        if not met:
            m1 |= 1 << i
            continue
        if contains(r1, i):
            return None
        if met & (met - 1) == 0:
            private |= met
    if private != r2:
        return None
    return m1


def ext_rhs(h: Hypergraph, u: RhsPair) -> ExtAnswer:
    """
    Decide whether some minimal rhs M satisfies u <= M.

    The witness keeps M2 = U2 and adds to U1 every index that U2 misses.

    Raises:
        InstanceError: u refers to indices or vertices outside h
    """
    errors = u.validate(h)
    if errors:
        raise InstanceError.from_errors("Pre-solution", errors)
    clash = u.r1 & h.hit_by(u.r2)
    if clash:
        i = lowest(clash)
        return ExtAnswer(False, reason=f"index '{h.edge_names[i]}' of U1 meets U2")
    for x in iter_bits(u.r2):
        if h.incidence(x) & ~h.hit_by(u.r2 & ~bit(x)) == 0:
            return ExtAnswer(False, reason=f"vertex '{h.vertices[x]}' of U2 has no private edge")
    m1 = u.r1 | (h.all_edges & ~h.hit_by(u.r2))
    return ExtAnswer(True, witness=RhsPair(m1, u.r2))


def _check_assignment(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> None:
    errors = tau.validate(h)
    if len(f) != h.n:
        errors.append(f"assignment has {len(f)} values for {h.n} vertices")
    if errors:
        raise InstanceError.from_errors("Instance", errors)


def _collisions(tau: Correspondence, ones: int) -> int:
    """1-vertices sharing their tau-index with another 1-vertex."""
    groups: Dict[int, int] = {}
    for x in iter_bits(ones):
        groups[tau(x)] = groups.get(tau(x), 0) | bit(x)
    result = 0
    for group in groups.values():
        if group & (group - 1):
            result |= group
    return result


def ext_rhf_surjective(h: Hypergraph, tau: Correspondence, g: RomanAssignment) -> ExtAnswer:
    """
    Decide whether some minimal rhf f satisfies g <= f.

    1-vertices that share a tau-index, or whose tau-edge meets a 2-vertex,
    become 2 (a worklist runs to a fixpoint). A 2-vertex without a private
    edge other than its tau-edge means no. Every index still unhit is then
    served by a 1 on the smallest vertex of its tau-preimage.

    Raises:
        PreconditionError: a tau-free index is not hit by g^-1(2)
    """
    _check_assignment(h, tau, g)
    uncovered = tau.empty_indices(h) & ~h.hit_by(g.twos)
    if uncovered:
        raise PreconditionError(
            "every index with empty tau-preimage must be hit by g^-1(2); unhit: "
            + ' '.join(h.edge_tokens(uncovered)))

    ones, twos = g.ones, g.twos
    collided = _collisions(tau, ones)
    ones &= ~collided
    twos |= collided

    pending = twos
    while pending:
        x = lowest(pending)
        pending &= ~bit(x)
        hit = h.incidence(x)
        moved = 0
        for y in iter_bits(ones):
            if contains(hit, tau(y)):
                moved |= bit(y)
        if moved:
            logger.debug("promoting %s: tau-edge meets 2-vertex '%s'",
                         ' '.join(h.vertex_tokens(moved)), h.vertices[x])
            ones &= ~moved
            twos |= moved
            pending |= moved

    for x in iter_bits(twos):
        private = 0
        for i in iter_bits(h.incidence(x)):
            if h.edges[i] & twos == bit(x):
                private |= bit(i)
        if private & ~bit(tau(x)) == 0:
            return ExtAnswer(False, reason=(
                f"vertex '{h.vertices[x]}' must be 2 but has no private edge besides its tau-edge"))

    unhit = h.all_edges & ~(h.hit_by(twos) | tau.image(ones))
    for i in iter_bits(unhit):
        ones |= bit(lowest(tau.preimage(i)))
    return ExtAnswer(True, witness=RomanAssignment.from_levels(h.n, ones, twos))


def promote_closure(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> RomanAssignment:
    """
    Raise forced 1-vertices to 2 until nothing changes.

    A 1-vertex whose tau-edge meets a 2-vertex, and two 1-vertices sharing a
    tau-index, are 2 in every minimal rhf above f. The result is extensible
    iff f is, and tau is injective on its 1-vertices.
    """
    ones, twos = f.ones, f.twos
    while True:
        hit = h.hit_by(twos)
        promote = _collisions(tau, ones)
        for y in iter_bits(ones):
            if contains(hit, tau(y)):
                promote |= bit(y)
        if not promote:
            return RomanAssignment.from_levels(h.n, ones, twos)
        ones &= ~promote
        twos |= promote


# Sweep over all assignments above f.

def _sweep_task(task: Tuple[Hypergraph, Correspondence, Tuple[int, ...], List[int], Tuple[int, ...]]
                ) -> Optional[RomanAssignment]:
    h, tau, base, free, prefix = task
    values = list(base)
    for x, value in zip(free, prefix):
        values[x] = value
    rest = free[len(prefix):]
    for choice in itertools.product(*(range(base[x], 3) for x in rest)):
        for x, value in zip(rest, choice):
            values[x] = value
        candidate = RomanAssignment(tuple(values))
        if is_minimal_rhf_theorem(h, tau, candidate):
            return candidate
    return None


def _sweep(h: Hypergraph, tau: Correspondence, f: RomanAssignment, guards: GuardConfig,
           jobs: int) -> ExtAnswer:
    free = [x for x in range(h.n) if f[x] < 2]
    check_guard('ext_rhf_general sweep', len(free), guards.max_sweep_free)

    split_at = 0
    if jobs > 1:
        tasks_wanted = 4 * jobs
        count = 1
        while split_at < len(free) and count < tasks_wanted:
            count *= 3 - f[free[split_at]]
            split_at += 1
    prefixes = itertools.product(*(range(f[x], 3) for x in free[:split_at]))
    tasks = [(h, tau, f.values, free, prefix) for prefix in prefixes]
    logger.debug("sweep over %d free coordinates in %d tasks", len(free), len(tasks))

    with get_pool(jobs) as pool:
        results = pool.map(_sweep_task, tasks)
    for result in results:
        if result is not None:
            return ExtAnswer(True, witness=result)
    return ExtAnswer(False, reason="no minimal rhf lies above f")


# Search for an extensibility witness (R2, rho).

def _private_choices(h: Hypergraph, tau: Correspondence, r2: int) -> Optional[List[List[int]]]:
    choices = []
    for x in iter_bits(r2):
        options = [i for i in iter_bits(h.incidence(x) & ~bit(tau(x)))
                   if h.edges[i] & r2 == bit(x)]
        if not options:
            return None
        choices.append(options)
    return choices


def _witness_search(h: Hypergraph, tau: Correspondence, f: RomanAssignment,
                    guards: GuardConfig) -> ExtAnswer:
    closed = promote_closure(h, tau, f)
    ones, twos = closed.ones, closed.twos
    check_guard('ext_rhf_general witness', popcount(ones), guards.max_sweep_free)
    free_indices = tau.empty_indices(h)

    for extra in subsets(ones):
        r2 = twos | extra
        rest = ones & ~extra
        if h.hit_by(r2) & tau.image(rest):
            continue
        choices = _private_choices(h, tau, r2)
        if choices is None:
            continue
        base = 0
        for x in iter_bits(rest):
            base |= h.edges[tau(x)]
        targets = free_indices & ~h.hit_by(r2)
        for rho in itertools.product(*choices):
            covered = base
            for i in rho:
                covered |= h.edges[i]
            if all(h.edges[i] & ~covered for i in iter_bits(targets)):
                certificate = ExtensionWitness(r2, dict(zip(iter_bits(r2), rho)))
                logger.debug("witness found: R2=%s", ' '.join(h.vertex_tokens(r2)))
                return ExtAnswer(True, certificate=certificate)
    return ExtAnswer(False, reason="no extensibility witness exists")


def ext_rhf_general(h: Hypergraph, tau: Correspondence, f: RomanAssignment,
                    strategy: str = 'sweep', guards: Optional[GuardConfig] = None,
                    jobs: int = 1) -> ExtAnswer:
    """
    Decide rhf extension without preconditions.

    ``sweep`` walks all g >= f in canonical order (first free vertex
    slowest) and returns the first minimal one; with ``jobs > 1`` the space
    is split by prefix across a process pool and the earliest hit still
    wins. ``witness`` applies ``promote_closure`` and searches the sets R2
    between f^-1(2) and f^-1({1, 2}) with their private-edge maps rho; it
    returns the certificate instead of an assignment.

    Raises:
        GuardRefusal: too many free coordinates for the chosen strategy
        ValueError: unknown strategy
    """
    _check_assignment(h, tau, f)
    guards = guards or GuardConfig()
    if strategy == 'sweep':
        return _sweep(h, tau, f, guards, jobs)
    if strategy == 'witness':
        return _witness_search(h, tau, f, guards)
    raise ValueError(f"unknown strategy '{strategy}', expected one of {STRATEGIES}")


def bounded_ext_rd(inst: BoundedRdInstance) -> ExtAnswer:
    """
    Decide whether a minimal rdf g with f <= g <= h exists.

    Works on the hitting form from ``bounded_rd_to_rhf``: every vertex with
    h(v) = 0 is a tau-free index that some neighbour must dominate with a 2.
    The search picks such a dominator for the smallest undominated one,
    recursing until all are dominated, and hands each distinct set of
    2-vertices to ``ext_rhf_surjective``.
    """
    errors = inst.validate()
    if errors:
        raise InstanceError.from_errors("Bounded instance", errors)
    if not inst.consistent:
        return ExtAnswer(False, reason="f is not below h")

    reduction = bounded_rd_to_rhf(inst)
    target = reduction.target
    h, tau, lower = target.hypergraph, target.require_tau(), target.f
    free = tau.empty_indices(h)
    stranded = free & h.empty_edges()
    if stranded:
        return ExtAnswer(False, reason=(
            f"vertex '{h.edge_names[lowest(stranded)]}' has h=0 and no neighbour that may take 2"))

    seen = set()

    def search(twos: int) -> Optional[RomanAssignment]:
        if twos in seen:
            return None
        seen.add(twos)
        open_ = free & ~h.hit_by(twos)
        if not open_:
            answer = ext_rhf_surjective(h, tau, lower.with_values(twos, 2))
            return answer.witness if answer.decision else None
        i = lowest(open_)
        for x in iter_bits(h.edges[i]):
            found = search(twos | bit(x))
            if found is not None:
                return found
        return None

    found = search(lower.twos)
    logger.debug("bounded_ext_rd explored %d dominator sets", len(seen))
    if found is None:
        return ExtAnswer(False, reason="no minimal rdf between f and h")
    return ExtAnswer(True, witness=reduction.backward(found))


def ext_ds_split(g: Graph, clique: int, independent: int, u: int) -> ExtAnswer:
    """
    Decide whether a minimal dominating set D with u <= D exists on a split graph.

    Raises:
        InstanceError: invalid split partition or u outside V
    """
    if u & ~g.all_vertices:
        raise InstanceError("pre-solution contains vertices outside V")
    reduction = ds_split_to_rhs(g, clique, independent, u)
    target = reduction.target
    answer = ext_rhs(target.hypergraph, target.preset)
    if not answer.decision:
        return ExtAnswer(False, reason=answer.reason)
    return ExtAnswer(True, witness=reduction.backward(answer.witness))


__all__ = [
    'ExtAnswer',
    'STRATEGIES',
    'extend_pair',
    'ext_rhs',
    'ext_rhf_surjective',
    'promote_closure',
    'ext_rhf_general',
    'bounded_ext_rd',
    'ext_ds_split',
]
