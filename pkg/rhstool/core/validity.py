"""Definition-level validity predicates and the closed-neighbourhood hypergraph."""

from typing import Tuple

from .bitset import contains, iter_bits
from .graph import Graph
from .hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment


def unhit_by_pair(h: Hypergraph, r: RhsPair) -> int:
    """Indices neither in R1 nor met by R2."""
    return h.all_edges & ~(r.r1 | h.hit_by(r.r2))


def is_rhs(h: Hypergraph, r: RhsPair) -> bool:
    """Every index is in R1 or its edge meets R2."""
    return unhit_by_pair(h, r) == 0


def rhf_hit(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> int:
    """Indices hit by ``f``: met by a 2-vertex or tau-image of a 1-vertex."""
    return h.hit_by(f.twos) | tau.image(f.ones)


def is_rhf(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> bool:
    return rhf_hit(h, tau, f) == h.all_edges


def is_rdf(g: Graph, f: RomanAssignment) -> bool:
    """Every 0-vertex has a neighbour of value 2."""
    dominated = g.neighbors_of_set(f.twos)
    zeros = f.level(0)
    return zeros & ~dominated == 0


def is_hypergraph_rdf(h: Hypergraph, f: RomanAssignment) -> bool:
    """Every 0-vertex shares an edge with a 2-vertex other than itself."""
    twos = f.twos
    for x in iter_bits(f.level(0)):
        if not any(h.edges[i] & twos for i in iter_bits(h.incidence(x))):
            return False
    return True


def closed_neighborhood_hypergraph(g: Graph) -> Tuple[Hypergraph, Correspondence]:
    """G_nb: one edge N[v] named after v, with the identity correspondence."""
    h = Hypergraph(g.vertices, g.vertices, tuple(g.closed(v) for v in range(g.n)))
    return h, Correspondence.identity(g.n)


def pair_of_assignment(tau: Correspondence, f: RomanAssignment) -> RhsPair:
    """(tau(f^-1(1)), f^-1(2))."""
    return RhsPair(tau.image(f.ones), f.twos)


def dominates(g: Graph, d: int, within: int) -> bool:
    """``d`` dominates every vertex of ``within`` inside G[within]."""
    return within & ~(g.closed_of_set(d) & within) == 0
