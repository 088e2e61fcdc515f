"""
Minimum-weight solvers.

- greedy_rhs / greedy_rhf: greedy hitting set with every 2 paid twice,
  within 2 (ln|I| + 1) of the optimum
- exact_min_rhs: branch and reduce with best-so-far pruning
- exact_min_rhf / exact_min_rdf: through the reductions to rhs
- brute_min_rhs / brute_min_rhf: guarded exhaustive optima for checking
- rvc_decide / rvc_enumerate / rvc_min / rec_min: Roman vertex and edge cover
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from .config import GuardConfig
from .core.bitset import bit, iter_bits, lowest, popcount, subsets
from .core.graph import Graph
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .core.validity import is_rhf
from .enumeration import EnumerationStats, Sink, enumerate_minimal_rhs
from .reductions import (
    edge_cover_hypergraph,
    rd_to_rhf,
    rhf_to_rhs,
    vertex_cover_hypergraph,
)
from .search import DELETE, TAKE, Branch, SearchNode
from .utils.errors import InfeasibleError, InstanceError, SearchInvariantError, check_guard

logger = logging.getLogger(__name__)


@dataclass
class OptResult:
    """
    Result of a minimum-weight solver.

    Attributes:
        weight: Weight of ``witness``; the optimum for exact solvers
        witness: A solution of that weight
        nodes: Search nodes explored (exact solvers only)
    """
    weight: int
    witness: Union[RhsPair, RomanAssignment]
    nodes: int = 0


def _require_feasible(h: Hypergraph, tau: Correspondence) -> None:
    stranded = h.empty_edges() & tau.empty_indices(h)
    if stranded:
        raise InfeasibleError(
            "no rhf exists: empty edges with empty tau-preimage: "
            + ' '.join(h.edge_tokens(stranded)))


# ---------------------------------------------------------------------------
# Greedy
# ---------------------------------------------------------------------------

def greedy_hitting_set(h: Hypergraph) -> int:
    """
    Greedy max-coverage hitting set over the distinct non-empty edges.

    Each step takes the vertex meeting the most edges not yet hit; ties go
    to the smallest id.
    """
    pending = list(dict.fromkeys(e for e in h.edges if e))
    chosen = 0
    while pending:
        best, best_count = -1, 0
        for x in range(h.n):
            count = sum(1 for e in pending if e >> x & 1)
            if count > best_count:
                best, best_count = x, count
        chosen |= bit(best)
        pending = [e for e in pending if not e >> best & 1]
    return chosen



def greedy_rhs(h: Hypergraph) -> Tuple[RhsPair, int]:
    """
    (empty edges, greedy hitting set) and its weight.

    R1 is empty unless some edge is empty: no vertex can hit such an edge,
    so it is paid for in R1 and the pair stays an rhs.
    """
    pair = RhsPair(h.empty_edges(), greedy_hitting_set(h))
    return pair, pair.weight


def greedy_rhf(h: Hypergraph, tau: Correspondence) -> Tuple[RomanAssignment, int]:
    """
    The greedy hitting set at value 2, nothing at value 1.

    Raises:
        InfeasibleError: some edge is empty
    """
    _require_feasible(h, tau)
    f = RomanAssignment.from_levels(h.n, 0, greedy_hitting_set(h))
    return f, f.weight



# ---------------------------------------------------------------------------
# Exact
# ---------------------------------------------------------------------------

class ExactRhsSolver:
    """
    Branch and reduce for a minimum rhs.

    Reductions, applied until nothing changes:
    - an unhit index with an empty live edge joins R1
    - a free vertex in at most two unhit indices is deleted
    - a free vertex whose singleton live edge {x} occurs for three or more
      unhit indices joins R2

    Branching on the smallest free vertex x with three unhit indices:
    delete x, or take x and delete the other members of its three edges.
    Otherwise on the smallest free vertex: take it or delete it. A node
    whose optimistic weight cannot beat the best pair found is cut.
    """

    def __init__(self, h: Hypergraph):
        self.h = h
        self.best = RhsPair(h.all_edges, 0)
        self.best_weight = h.m
        self.nodes = 0

    def solve(self) -> OptResult:
        self._visit(SearchNode(self.h))
        logger.info("exact_min_rhs: weight %d after %d nodes", self.best_weight, self.nodes)
        return OptResult(self.best_weight, self.best, self.nodes)

    def _reduce(self, node: SearchNode) -> None:
        h = self.h
        while True:
            unhit = node.unhit
            empty = 0
            for i in iter_bits(unhit):
                if not node.live_edge(i):
                    empty |= bit(i)
            if empty:
                node.put(empty)
                continue
            light = 0
            for x in iter_bits(node.free):
                if popcount(h.incidence(x) & unhit) <= 2:
                    light |= bit(x)
            if light:
                node.delete(light)
                continue
            for x in iter_bits(node.free):
                singles = sum(1 for i in iter_bits(h.incidence(x) & unhit)
                              if node.live_edge(i) == bit(x))
                if singles >= 3:
                    node.take(bit(x))
                    break
            else:
                return

    def _visit(self, node: SearchNode) -> None:
        self.nodes += 1
        self._reduce(node)
        if node.weight + node.finishing_bound() >= self.best_weight:
            return
        free = node.free
        if not free:
            weight = node.weight + popcount(node.unhit)
            if weight < self.best_weight:
                self.best = RhsPair(node.r1 | node.unhit, node.r2)
                self.best_weight = weight
                logger.debug("new best weight %d", weight)
            return

        unhit = node.unhit
        degree3 = [x for x in iter_bits(free) if popcount(self.h.incidence(x) & unhit) == 3]
        if degree3:
            x = degree3[0]
            others = 0
            for i in iter_bits(self.h.incidence(x) & unhit):
                others |= node.live_edge(i)
            branches: List[Branch] = [
                ((DELETE, bit(x)),),
                ((TAKE, bit(x)), (DELETE, others & ~bit(x))),
            ]
        else:
            x = lowest(free)
            branches = [((TAKE, bit(x)),), ((DELETE, bit(x)),)]
        for branch in branches:
            mark = node.mark()
            node.apply(branch)
            self._visit(node)
            node.undo(mark)



def exact_min_rhs(h: Hypergraph) -> OptResult:
    """Minimum-weight rhs with witness and node count."""
    return ExactRhsSolver(h).solve()


def exact_min_rhf(h: Hypergraph, tau: Correspondence) -> OptResult:
    """
    Minimum-weight rhf, solved as a minimum rhs after duplicating tau-free edges.

    Raises:
        InfeasibleError: some edge is empty
    """
    _require_feasible(h, tau)
    reduction = rhf_to_rhs(h, tau)
    result = exact_min_rhs(reduction.target.hypergraph)
    f = reduction.backward(result.witness)
    if f.weight > result.weight or not is_rhf(h, tau, f):
        raise SearchInvariantError(
            f"back-mapped rhf of weight {f.weight} does not match rhs optimum {result.weight}")
    return OptResult(f.weight, f, result.nodes)



def exact_min_rdf(g: Graph) -> OptResult:
    """Minimum Roman domination through the closed-neighbourhood hypergraph."""
    target = rd_to_rhf(g).target
    return exact_min_rhf(target.hypergraph, target.require_tau())


def brute_min_rhs(h: Hypergraph, guards: Optional[GuardConfig] = None) -> OptResult:
    """
    Scan every R2; the cheapest R1 for it is the set of indices it misses.

    Raises:
        GuardRefusal: |X| + |I| exceeds ``max_brute_size``
    """
    guards = guards or GuardConfig()
    check_guard('brute_min_rhs', h.n + h.m, guards.max_brute_size)
    best: Optional[RhsPair] = None
    for r2 in subsets(h.all_vertices):
        pair = RhsPair(h.all_edges & ~h.hit_by(r2), r2)
        if best is None or pair.weight < best.weight:
            best = pair
    assert best is not None
    return OptResult(best.weight, best)


def brute_min_rhf(h: Hypergraph, tau: Correspondence,
                  guards: Optional[GuardConfig] = None) -> OptResult:
    """
    Scan all 3^|X| assignments.

    Raises:
        GuardRefusal: |X| exceeds ``max_rhf_oracle``
        InfeasibleError: no assignment is an rhf
    """
    guards = guards or GuardConfig()
    check_guard('brute_min_rhf', h.n, guards.max_rhf_oracle)
    best: Optional[RomanAssignment] = None
    for values in itertools.product(range(3), repeat=h.n):
        f = RomanAssignment(values)
        if (best is None or f.weight < best.weight) and is_rhf(h, tau, f):
            best = f
    if best is None:
        raise InfeasibleError(f"{h.describe()} has no rhf for this tau")
    return OptResult(best.weight, best)


# ---------------------------------------------------------------------------
# Roman vertex cover and Roman edge cover
# ---------------------------------------------------------------------------

def _rvc(edges: List[Tuple[int, int]], k: int, counter: List[int]) -> bool:
    counter[0] += 1
    if not edges or (len(edges) == 1 and k == 1):
        return True
    if k in (0, 1):
        return False
    v, u = edges[0]
    if _rvc([e for e in edges if v not in e], k - 2, counter):
        return True
    if _rvc([e for e in edges if u not in e], k - 2, counter):
        return True
    return _rvc(edges[1:], k - 1, counter)


def rvc_search(g: Graph, k: int) -> Tuple[bool, int]:
    """
    Decide Roman vertex cover of weight at most k; also return the node count.

    Branches on the smallest edge {v, u}: v in R2, u in R2, or the edge in R1.

    Raises:
        InstanceError: k is negative
    """
    if k < 0:
        raise InstanceError(f"k must be non-negative, got {k}")
    counter = [0]
    answer = _rvc(g.edges(), k, counter)
    return answer, counter[0]


def rvc_decide(g: Graph, k: int) -> bool:
    """
    Raises:
        InstanceError: k is negative
        SearchInvariantError: the search exceeded 3 * 2^k nodes
    """
    answer, nodes = rvc_search(g, k)
    if nodes > 3 * 2 ** k:
        raise SearchInvariantError(f"rvc search used {nodes} nodes, bound is {3 * 2 ** k}")
    logger.debug("rvc k=%d: %s after %d nodes", k, answer, nodes)
    return answer


def rvc_enumerate(g: Graph, k: int, sink: Optional[Sink] = None) -> EnumerationStats:
    """
    Every minimal Roman vertex cover of weight at most k, over ``vertex_cover_hypergraph``.

    Raises:
        InstanceError: k is negative
    """
    if k < 0:
        raise InstanceError(f"k must be non-negative, got {k}")
    return enumerate_minimal_rhs(vertex_cover_hypergraph(g), weight_cap=k, sink=sink)


def rvc_min(g: Graph) -> OptResult:
    """
    Minimum Roman vertex cover: the least k ``rvc_decide`` accepts.

    The witness is the first cover ``rvc_enumerate`` emits under that cap;
    ``nodes`` sums the decision searches.
    """
    nodes = 0
    k = 0
    while True:
        answer, used = rvc_search(g, k)
        nodes += used
        if answer:
            break
        k += 1
    found: List[RhsPair] = []
    rvc_enumerate(g, k, found.append)
    best = min(found, key=lambda r: (r.weight, r.sort_key()))
    return OptResult(best.weight, best, nodes)


def rec_min(g: Graph) -> OptResult:
    """
    Minimum Roman edge cover: (V, {}) of weight |V|.

    Pairs live on ``edge_cover_hypergraph``, whose indices are the vertices.
    """
    h = edge_cover_hypergraph(g)
    return OptResult(g.n, RhsPair(h.all_edges, 0))


__all__ = [
    'OptResult',
    'greedy_hitting_set',
    'greedy_rhs',
    'greedy_rhf',
    'ExactRhsSolver',
    'exact_min_rhs',
    'exact_min_rhf',
    'exact_min_rdf',
    'brute_min_rhs',
    'brute_min_rhf',
    'rvc_search',
    'rvc_decide',
    'rvc_enumerate',
    'rvc_min',
    'rec_min',
]
