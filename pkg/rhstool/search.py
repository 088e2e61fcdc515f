"""
Search-node state shared by the enumerator and the exact optimizer.

A node holds the live vertices X', the partial solution (R1, R2) and the
indices hit by R2. Changes go through ``apply`` and are recorded on a trail,
so a branch is undone by ``undo(mark)`` instead of copying the node.
"""

from enum import IntEnum
from typing import Dict, List, Sequence, Tuple

from .core.bitset import iter_bits, popcount
from .core.hypergraph import Hypergraph, RhsPair

# A branch is a sequence of primitive moves on the node.
Move = Tuple[str, int]
Branch = Tuple[Move, ...]

TAKE = 'take'      # vertices into R2
DELETE = 'delete'  # vertices out of X'
PUT = 'put'        # indices into R1


class BranchRule(IntEnum):
    """Branching rules of the enumerator in firing priority."""
    SINGLETON_EDGE = 1
    HEAVY_VERTEX = 2
    LONE_PAIR = 3
    LONE_EDGE = 4
    TWINS = 5
    EDGE_OF_TWO = 6
    EDGE_OF_THREE = 7
    CHAIN = 8

    @property
    def label(self) -> str:
        return f"BR{self.value}"


# Guaranteed measure decrease per branch, in branch order.
BRANCH_VECTORS: Dict[BranchRule, Tuple[int, ...]] = {
    BranchRule.SINGLETON_EDGE: (2, 2),
    BranchRule.HEAVY_VERTEX: (4, 1),
    BranchRule.LONE_PAIR: (3, 3, 3),
    BranchRule.LONE_EDGE: (4, 1),
    BranchRule.TWINS: (4, 4, 2),
    BranchRule.EDGE_OF_TWO: (3, 4, 3),
    BranchRule.EDGE_OF_THREE: (3, 4, 5, 4),
    BranchRule.CHAIN: (1, 4, 8),
}


class SearchNode:
    """Mutable search state over a fixed hypergraph."""

    def __init__(self, h: Hypergraph):
        self.h = h
        self.live = h.all_vertices
        self.r1 = 0
        self.r2 = 0
        self.hit = 0
        self._trail: List[Tuple[str, int]] = []

    # -- trail ------------------------------------------------------------

    def mark(self) -> int:
        return len(self._trail)

    def undo(self, mark: int) -> None:
        while len(self._trail) > mark:
            name, old = self._trail.pop()
            setattr(self, name, old)

    def _set(self, name: str, value: int) -> None:
        old = getattr(self, name)
        if old != value:
            self._trail.append((name, old))
            setattr(self, name, value)

    # -- moves ------------------------------------------------------------

    def take(self, vertices: int) -> None:
        self._set('r2', self.r2 | vertices)
        self._set('hit', self.hit | self.h.incidence_of_set(vertices))

    def delete(self, vertices: int) -> None:
        self._set('live', self.live & ~vertices)

    def put(self, indices: int) -> None:
        self._set('r1', self.r1 | indices)

    def apply(self, branch: Sequence[Move]) -> None:
        for kind, mask in branch:
            getattr(self, kind)(mask)

    # -- derived ----------------------------------------------------------

    @property
    def unhit(self) -> int:
        """I' = I minus (R1 and the indices hit by R2)."""
        return self.h.all_edges & ~(self.r1 | self.hit)

    @property
    def free(self) -> int:
        """X' minus R2."""
        return self.live & ~self.r2

    def live_edge(self, i: int) -> int:
        return self.h.edges[i] & self.live

    def live_edges(self) -> Tuple[int, ...]:
        return tuple(e & self.live for e in self.h.edges)

    @property
    def measure(self) -> int:
        return popcount(self.free) + popcount(self.unhit)

    @property
    def weight(self) -> int:
        return popcount(self.r1) + 2 * popcount(self.r2)

    def pair(self) -> RhsPair:
        return RhsPair(self.r1, self.r2)

    def finishing_bound(self) -> int:
        """
        Lower bound on the cost of hitting the indices still unhit.

        Each costs 1 in R1, or a share of 2 for a free vertex hitting d of
        them, with d at most the largest unhit degree of a free vertex.
        """
        unhit = self.unhit
        count = popcount(unhit)
        if not count:
            return 0
        d = max((popcount(self.h.incidence(x) & unhit) for x in iter_bits(self.free)), default=0)
        if d <= 2:
            return count
        return -(-2 * count // d)

