"""
Minimality characterizations and their definition-level twins.

The ``is_minimal_*_theorem`` predicates decide minimality through
structural conditions (disjointness, private edges or neighbours, minimal
hitting or dominating sets). Each has an ``explain_*`` companion that names
the first violated condition, and a ``brute_minimal_*`` twin that works from
the definition alone. The twins exist to cross-check the structural
predicates on small instances and refuse larger ones.

Condition identifiers returned by the explain functions:

- ``one-near-two``: a 1-vertex is dominated by or shares its tau-edge with a 2-vertex
- ``privacy``: a 2-vertex has no private neighbour other than itself
- ``minimal-domination`` / ``minimal-hitting-set``: the 2-set is not minimal
- ``r1-disjoint``: an index in R1 is also hit by R2
- ``tau-injective``: two 1-vertices share a tau-index
- ``private-edge``: a 2-vertex lacks a private edge besides its tau-edge
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

from .config import GuardConfig
from .core.bitset import bit, contains, iter_bits
from .core.graph import Graph
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .core.validity import dominates, is_rdf, is_rhf, is_rhs
from .utils.errors import InstanceError, PreconditionError, check_guard

logger = logging.getLogger(__name__)


@dataclass
class ExtensionWitness:
    """A set R2 with a private-edge choice rho: R2 -> I."""
    r2: int
    rho: Dict[int, int] = field(default_factory=dict)


def is_minimal_hitting_set(family: Iterable[int], d: int) -> bool:
    """
    ``d`` hits every member of ``family`` and each of its vertices has a
    member that only it hits.
    """
    private = 0
    for s in family:
        met = s & d
        if not met:
            return False
        if met & (met - 1) == 0:
            private |= met
    return private == d


def private_neighborhood(g: Graph, d: int, v: int) -> int:
    """P_{G,D}(v) = N[v] minus N[D - {v}]."""
    if not contains(d, v):
        raise InstanceError(f"vertex '{g.vertices[v]}' is not in D")
    return g.closed(v) & ~g.closed_of_set(d & ~bit(v))


def private_neighbor_report(g: Graph, d: int) -> Dict[int, int]:
    """Private neighbourhood of every member of ``d``."""
    return {v: private_neighborhood(g, d, v) for v in iter_bits(d)}


def _induced_private(g: Graph, within: int, d: int, v: int) -> int:
    others = 0
    for u in iter_bits(d & ~bit(v)):
        others |= g.closed(u)
    return g.closed(v) & within & ~others


def explain_minimal_rdf(g: Graph, f: RomanAssignment, po: bool = False) -> Optional[str]:
    """First violated condition of the (PO-)minimal rdf characterization."""
    ones, twos = f.ones, f.twos
    if g.closed_of_set(twos) & ones:
        return 'one-near-two'
    within = f.level(0) | twos
    if not po:
        for v in iter_bits(twos):
            if _induced_private(g, within, twos, v) & ~bit(v) == 0:
                return 'privacy'
    if not dominates(g, twos, within):
        return 'minimal-domination'
    for v in iter_bits(twos):
        if _induced_private(g, within, twos, v) == 0:
            return 'minimal-domination'
    return None


def is_minimal_rdf_theorem(g: Graph, f: RomanAssignment) -> bool:
    return explain_minimal_rdf(g, f) is None


def is_po_minimal_rdf_theorem(g: Graph, f: RomanAssignment) -> bool:
    return explain_minimal_rdf(g, f, po=True) is None


def explain_minimal_rhs(h: Hypergraph, r: RhsPair) -> Optional[str]:
    errors = r.validate(h)
    if errors:
        raise InstanceError.from_errors("Pair", errors)
    if r.r1 & h.hit_by(r.r2):
        return 'r1-disjoint'
    family = (h.edges[i] for i in iter_bits(h.all_edges & ~r.r1))
    if not is_minimal_hitting_set(family, r.r2):
        return 'minimal-hitting-set'
    return None


def is_minimal_rhs_theorem(h: Hypergraph, r: RhsPair) -> bool:
    return explain_minimal_rhs(h, r) is None


def explain_minimal_rhf(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> Optional[str]:
    ones, twos = f.ones, f.twos
    if not tau.is_injective_on(ones):
        return 'tau-injective'
    for x in iter_bits(ones):
        if h.edges[tau(x)] & twos:
            return 'one-near-two'
    for x in iter_bits(twos):
        if not any(h.edges[i] & twos == bit(x)
                   for i in iter_bits(h.incidence(x) & ~bit(tau(x)))):
            return 'private-edge'
    served = tau.image(ones)
    family = (h.edges[i] for i in iter_bits(h.all_edges & ~served))
    if not is_minimal_hitting_set(family, twos):
        return 'minimal-hitting-set'
    return None


def is_minimal_rhf_theorem(h: Hypergraph, tau: Correspondence, f: RomanAssignment) -> bool:
    return explain_minimal_rhf(h, tau, f) is None


def explain_extension_witness(h: Hypergraph, tau: Correspondence, f: RomanAssignment,
                              w: ExtensionWitness) -> Optional[str]:
    """
    First violated constraint of an extensibility witness (R2, rho), or None.

    Constraint identifiers: ``rho-not-tau``, ``private-edge``,
    ``ones-avoid-r2`` and ``conditional-hit``.

    Raises:
        PreconditionError: tau is not injective on f^-1(1)
        InstanceError: R2 is outside [f^-1(2), f^-1(1) | f^-1(2)] or rho is not total on R2
    """
    ones, twos = f.ones, f.twos
    if not tau.is_injective_on(ones):
        raise PreconditionError(
            "witness check needs tau injective on f^-1(1); apply promote_closure first")
    r2 = w.r2
    if twos & ~r2 or r2 & ~(ones | twos):
        raise InstanceError("witness R2 must satisfy f^-1(2) <= R2 <= f^-1(1) | f^-1(2)")
    missing = [x for x in iter_bits(r2) if x not in w.rho]
    if missing or any(not 0 <= i < h.m for i in w.rho.values()):
        raise InstanceError("witness rho must map every R2 vertex to an edge index")

    for x in iter_bits(r2):
        if w.rho[x] == tau(x):
            return 'rho-not-tau'
    for x in iter_bits(r2):
        if h.edges[w.rho[x]] & r2 != bit(x):
            return 'private-edge'
    rest = ones & ~r2
    for x in iter_bits(rest):
        if h.edges[tau(x)] & r2:
            return 'ones-avoid-r2'
    covered = 0
    for x in iter_bits(rest):
        covered |= h.edges[tau(x)]
    for x in iter_bits(r2):
        covered |= h.edges[w.rho[x]]
    for i in iter_bits(tau.empty_indices(h)):
        if h.edges[i] & ~covered == 0 and not h.edges[i] & r2:
            return 'conditional-hit'
    return None


def check_extension_witness(h: Hypergraph, tau: Correspondence, f: RomanAssignment,
                            w: ExtensionWitness) -> bool:
    return explain_extension_witness(h, tau, f, w) is None


# Definition-level oracles.
#
# Validity is upward closed in each order used here, so a strictly smaller
# valid object exists iff some immediate predecessor is valid. The descent
# through the downward closure therefore stops after one step.

def _predecessors(f: RomanAssignment, po: bool) -> Iterable[RomanAssignment]:
    for x, value in enumerate(f.values):
        if value:
            yield f.with_value(x, 0 if po else value - 1)


def brute_minimal_rhs(h: Hypergraph, r: RhsPair, guards: Optional[GuardConfig] = None) -> bool:
    guards = guards or GuardConfig()
    check_guard('brute_minimal_rhs', h.n + h.m, guards.max_brute_size)
    if not is_rhs(h, r):
        return False
    for i in iter_bits(r.r1):
        if is_rhs(h, RhsPair(r.r1 & ~bit(i), r.r2)):
            return False
    for x in iter_bits(r.r2):
        if is_rhs(h, RhsPair(r.r1, r.r2 & ~bit(x))):
            return False
    return True


def brute_minimal_rhf(h: Hypergraph, tau: Correspondence, f: RomanAssignment,
                      guards: Optional[GuardConfig] = None) -> bool:
    guards = guards or GuardConfig()
    check_guard('brute_minimal_rhf', h.n + h.m, guards.max_brute_size)
    if not is_rhf(h, tau, f):
        return False
    return not any(is_rhf(h, tau, g) for g in _predecessors(f, po=False))


def brute_minimal_rdf(g: Graph, f: RomanAssignment, guards: Optional[GuardConfig] = None) -> bool:
    guards = guards or GuardConfig()
    check_guard('brute_minimal_rdf', g.n, guards.max_brute_size)
    if not is_rdf(g, f):
        return False
    return not any(is_rdf(g, p) for p in _predecessors(f, po=False))


def brute_minimal_po_rdf(g: Graph, f: RomanAssignment,
                         guards: Optional[GuardConfig] = None) -> bool:
    guards = guards or GuardConfig()
    check_guard('brute_minimal_po_rdf', g.n, guards.max_brute_size)
    if not is_rdf(g, f):
        return False
    return not any(is_rdf(g, p) for p in _predecessors(f, po=True))


def brute_minimal_dominating_set(g: Graph, d: int) -> bool:
    """Inclusion-minimal dominating set of the whole graph."""
    if not dominates(g, d, g.all_vertices):
        return False
    return not any(dominates(g, d & ~bit(v), g.all_vertices) for v in iter_bits(d))
