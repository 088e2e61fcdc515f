"""
Enumeration of minimal Roman hitting sets.

``enumerate_minimal_rhs`` is a branch-and-reduce search with polynomial
delay and polynomial space. Every node first applies two reductions until
nothing changes:

- a free vertex hitting no unhit index is deleted
- an unhit index whose live edge is empty joins R1

then drops out unless the extension check on the live hypergraph succeeds,
so every node that survives has a solution below it. A node with no unhit
index and no free vertex emits (R1, R2); any other node fires the
lowest-numbered applicable ``BranchRule`` on its smallest qualifying vertex
or index. Each branch lowers the measure |X' - R2| + |I'| by at least the
matching entry of ``BRANCH_VECTORS``; the search checks this as it goes.

The brute-force enumerators scan the definition directly and exist to check
the search on small instances.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .characterize import brute_minimal_rhf, brute_minimal_rhs
from .config import GuardConfig
from .core.bitset import bit, iter_bits, lowest, popcount, subsets
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .extend import extend_pair
from .search import BRANCH_VECTORS, DELETE, PUT, TAKE, Branch, BranchRule, SearchNode
from .utils.errors import SearchInvariantError, check_guard

logger = logging.getLogger(__name__)

Sink = Callable[[RhsPair], None]


@dataclass
class EnumerationStats:
    """
    Counters of one enumeration run.

    Attributes:
        solutions: Pairs emitted
        visited: Search nodes that survived reductions, cap test and extension check
        pruned: Nodes cut by the weight cap or the extension check
        max_delay: Most nodes visited before the first, between two, or after the last emission
        instance_size: |X| + |I|
        rule_counts: Firings per reduction and branching rule
    """
    solutions: int = 0
    visited: int = 0
    pruned: int = 0
    max_delay: int = 0
    instance_size: int = 0
    rule_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def delay_bound(self) -> int:
        """Node budget between consecutive emissions: 2(|X|+|I|) + 2."""
        return 2 * self.instance_size + 2

    def count(self, rule: str, times: int = 1) -> None:
        self.rule_counts[rule] = self.rule_counts.get(rule, 0) + times

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            'solutions': self.solutions,
            'visited': self.visited,
            'pruned': self.pruned,
            'max_delay': self.max_delay,
            'delay_bound': self.delay_bound,
        }
        for rule in sorted(self.rule_counts):
            data[rule] = self.rule_counts[rule]
        return data


def _select_rule(node: SearchNode) -> Tuple[BranchRule, List[Branch]]:
    """Lowest-numbered applicable rule on its smallest qualifying object."""
    unhit, free = node.unhit, node.free
    live = {i: node.live_edge(i) for i in iter_bits(unhit)}
    degree = {x: node.h.incidence(x) & unhit for x in iter_bits(free)}

    for i, s in live.items():
        if popcount(s) == 1:
            return BranchRule.SINGLETON_EDGE, [((PUT, bit(i)), (DELETE, s)), ((TAKE, s),)]

    for x, ux in degree.items():
        if popcount(ux) >= 3:
            return BranchRule.HEAVY_VERTEX, [((TAKE, bit(x)),), ((DELETE, bit(x)),)]

    for x, ux in degree.items():
        if popcount(ux) == 1 and popcount(live[lowest(ux)]) == 2:
            i = lowest(ux)
            y = bit(lowest(live[i] & ~bit(x)))
            return BranchRule.LONE_PAIR, [
                ((TAKE, bit(x)), (DELETE, y)),
                ((TAKE, y), (DELETE, bit(x))),
                ((PUT, bit(i)), (DELETE, bit(x) | y)),
            ]

    for x, ux in degree.items():
        if popcount(ux) == 1:
            rest = live[lowest(ux)] & ~bit(x)
            return BranchRule.LONE_EDGE, [((TAKE, bit(x)), (DELETE, rest)), ((DELETE, bit(x)),)]

    for x, ux in degree.items():
        partners = [y for y, uy in degree.items() if y > x and uy == ux]
        if partners:
            y = partners[0]
            return BranchRule.TWINS, [
                ((TAKE, bit(x)), (DELETE, bit(y))),
                ((TAKE, bit(y)), (DELETE, bit(x))),
                ((DELETE, bit(x) | bit(y)),),
            ]

    for i, s in live.items():
        if popcount(s) == 2:
            x, y = (bit(v) for v in iter_bits(s))
            return BranchRule.EDGE_OF_TWO, [
                ((TAKE, x),),
                ((TAKE, y), (DELETE, x)),
                ((PUT, bit(i)), (DELETE, s)),
            ]

    for i, s in live.items():
        if popcount(s) == 3:
            x, y, z = (bit(v) for v in iter_bits(s))
            return BranchRule.EDGE_OF_THREE, [
                ((TAKE, x),),
                ((TAKE, y), (DELETE, x)),
                ((TAKE, z), (DELETE, x | y)),
                ((PUT, bit(i)), (DELETE, s)),
            ]

    if free:
        x = lowest(free)
        ux = degree[x]
        if popcount(ux) == 2:
            i, j = iter_bits(ux)
            rest = live[i] & ~bit(x)
            y = lowest(rest) if rest else None
            if y is not None and popcount(degree[y]) == 2:
                others = degree[y] & ~bit(i)
                if others and others != bit(j):
                    k = lowest(others)
                    return BranchRule.CHAIN, [
                        ((DELETE, bit(x)),),
                        ((TAKE, bit(x)), (DELETE, bit(y))),
                        ((TAKE, bit(x) | bit(y)), (DELETE, live[k] & ~bit(y))),
                    ]

    raise SearchInvariantError(
        f"no branching rule applies: |X'-R2|={popcount(free)}, |I'|={popcount(unhit)}")


class RhsEnumerator:
    """
    Depth-first enumerator over one ``SearchNode``.

    Example:
        stats = RhsEnumerator(h, sink=print).run()
    """

    def __init__(self, h: Hypergraph, weight_cap: Optional[int] = None,
                 sink: Optional[Sink] = None, check_measure: bool = True):
        self.h = h
        self.weight_cap = weight_cap
        self.sink = sink
        self.check_measure = check_measure
        self.stats = EnumerationStats(instance_size=h.n + h.m)
        self._since_emit = 0

    def run(self) -> EnumerationStats:
        node = SearchNode(self.h)
        self._visit(node)
        self.stats.max_delay = max(self.stats.max_delay, self._since_emit)
        logger.info("enumerated %d minimal rhs (%d nodes, %d pruned)",
                    self.stats.solutions, self.stats.visited, self.stats.pruned)
        return self.stats

    def _reduce(self, node: SearchNode) -> None:
        while True:
            unhit = node.unhit
            stale = 0
            for x in iter_bits(node.free):
                if not node.h.incidence(x) & unhit:
                    stale |= bit(x)
            if stale:
                node.delete(stale)
                self.stats.count('RR1', popcount(stale))
            empty = 0
            for i in iter_bits(unhit):
                if not node.live_edge(i):
                    empty |= bit(i)
            if empty:
                node.put(empty)
                self.stats.count('RR2', popcount(empty))
            if not stale and not empty:
                return

    def _visit(self, node: SearchNode) -> None:
        self._reduce(node)
        if self.weight_cap is not None and node.weight + node.finishing_bound() > self.weight_cap:
            self.stats.pruned += 1
            return
        if extend_pair(node.live_edges(), node.r1, node.r2) is None:
            self.stats.pruned += 1
            return

        self.stats.visited += 1
        self._since_emit += 1
        if not node.unhit and not node.free:
            self._emit(node.pair())
            return

        rule, branches = _select_rule(node)
        self.stats.count(rule.label)
        vector = BRANCH_VECTORS[rule]
        for k, branch in enumerate(branches):
            mark = node.mark()
            before = node.measure
            node.apply(branch)
            if self.check_measure and before - node.measure < vector[k]:
                raise SearchInvariantError(
                    f"{rule.label} branch {k + 1} lowered the measure by "
                    f"{before - node.measure}, expected at least {vector[k]}")
            self._visit(node)
            node.undo(mark)

    def _emit(self, pair: RhsPair) -> None:
        self.stats.solutions += 1
        self.stats.max_delay = max(self.stats.max_delay, self._since_emit)
        self._since_emit = 0
        if self.sink is not None:
            self.sink(pair)


def enumerate_minimal_rhs(h: Hypergraph, weight_cap: Optional[int] = None,
                          sink: Optional[Sink] = None,
                          check_measure: bool = True) -> EnumerationStats:
    """
    Emit every minimal rhs of ``h`` exactly once through ``sink``.

    With ``weight_cap`` only pairs of weight at most the cap are emitted.

    Raises:
        SearchInvariantError: a branch lowered the measure too little or no rule applied
    """
    return RhsEnumerator(h, weight_cap, sink, check_measure).run()


def list_minimal_rhs(h: Hypergraph, weight_cap: Optional[int] = None) -> List[RhsPair]:
    """All minimal rhs in emission order."""
    found: List[RhsPair] = []
    enumerate_minimal_rhs(h, weight_cap, found.append)
    return found


def brute_enumerate_minimal_rhs(h: Hypergraph,
                                guards: Optional[GuardConfig] = None) -> List[RhsPair]:
    """
    Every valid pair passing ``brute_minimal_rhs``, sorted by (R1, R2).

    Raises:
        GuardRefusal: |X| + |I| exceeds ``max_enum_oracle``
    """
    guards = guards or GuardConfig()
    check_guard('brute_enumerate_minimal_rhs', h.n + h.m, guards.max_enum_oracle)
    found = []
    for r2 in subsets(h.all_vertices):
        need = h.all_edges & ~h.hit_by(r2)
        for extra in subsets(h.all_edges & ~need):
            pair = RhsPair(need | extra, r2)
            if brute_minimal_rhs(h, pair, guards):
                found.append(pair)
    return sorted(found, key=RhsPair.sort_key)


def brute_enumerate_minimal_rhf(h: Hypergraph, tau: Correspondence,
                                guards: Optional[GuardConfig] = None) -> List[RomanAssignment]:
    """
    Every assignment passing ``brute_minimal_rhf``, in lexicographic order of values.

    Raises:
        GuardRefusal: |X| exceeds ``max_rhf_oracle``
    """
    guards = guards or GuardConfig()
    check_guard('brute_enumerate_minimal_rhf', h.n, guards.max_rhf_oracle)
    found = []
    for values in itertools.product(range(3), repeat=h.n):
        f = RomanAssignment(values)
        if brute_minimal_rhf(h, tau, f, guards):
            found.append(f)
    return found


__all__ = [
    'EnumerationStats',
    'RhsEnumerator',
    'enumerate_minimal_rhs',
    'list_minimal_rhs',
    'brute_enumerate_minimal_rhs',
    'brute_enumerate_minimal_rhf',
]
