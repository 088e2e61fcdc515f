"""
Reductions between Roman hitting, Roman domination and cover problems.

Every construction returns a ``ReductionOutput``: the target instance, a
``forward`` mapper taking source solutions to target solutions, a
``backward`` mapper for the other direction and the weight ``offset``
between the two optima (target = source + offset).

Gadget vertices get deterministic names (``a``, ``b``, ``c``, ``v_<x>``,
``w_<i>``, ``u_<i>``, ``<x>'``) so a serialized target is reproducible.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple, Union

from .core.bitset import bit, contains, iter_bits, lowest, mask_of
from .core.graph import BoundedRdInstance, Graph
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .core.instance import GraphInstance, HypergraphInstance
from .core.validity import closed_neighborhood_hypergraph
from .utils.errors import InfeasibleError, InstanceError, TrivialInstanceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionOutput:
    """A target instance plus solution mappers and the optimum offset."""
    name: str
    target: Union[HypergraphInstance, GraphInstance]
    offset: int
    forward: Callable[[Any], Any]
    backward: Callable[[Any], Any]


def _identity(solution: Any) -> Any:
    return solution


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


# ---------------------------------------------------------------------------
# Hitting-set views of graph problems
# ---------------------------------------------------------------------------

def vertex_cover_hypergraph(g: Graph) -> Hypergraph:
    """Universe V, one edge {u, v} per graph edge, named ``u-v``."""
    edges = g.edges()
    names = [f"{g.vertices[u]}-{g.vertices[v]}" for u, v in edges]
    return Hypergraph(g.vertices, tuple(names), tuple(bit(u) | bit(v) for u, v in edges))


def edge_cover_hypergraph(g: Graph) -> Hypergraph:
    """Universe E, one edge per vertex holding its incident graph edges."""
    edges = g.edges()
    names = tuple(f"{g.vertices[u]}-{g.vertices[v]}" for u, v in edges)
    incident = [0] * g.n
    for k, (u, v) in enumerate(edges):
        incident[u] |= bit(k)
        incident[v] |= bit(k)
    return Hypergraph(names, g.vertices, tuple(incident))


# ---------------------------------------------------------------------------
# Roman domination and Roman hitting
# ---------------------------------------------------------------------------

def rd_to_rhf(g: Graph) -> ReductionOutput:
    """Roman domination on G is Roman hitting on its closed-neighbourhood hypergraph."""
    h, tau = closed_neighborhood_hypergraph(g)
    return ReductionOutput('rd-to-rhf', HypergraphInstance(h, tau), 0, _identity, _identity)


def rhf_to_rhs(h: Hypergraph, tau: Correspondence) -> ReductionOutput:
    """
    Duplicate every edge whose tau-preimage is empty.

    An index nobody can hit with a 1 costs at least 2 in any rhf; its copy
    makes the same hold for rhs, so both optima coincide. ``backward``
    normalizes a pair of the target into an rhf of the source of no larger
    weight.

    Raises (from ``backward``):
        InfeasibleError: an empty edge has an empty preimage
    """
    empty = tau.empty_indices(h)
    duplicates = list(iter_bits(empty))
    taken = set(h.edge_names)
    names = list(h.edge_names) + [_fresh(h.edge_names[i] + "'", taken) for i in duplicates]
    edges = list(h.edges) + [h.edges[i] for i in duplicates]
    target = Hypergraph(h.vertices, tuple(names), tuple(edges))
    copy_of = {h.m + k: i for k, i in enumerate(duplicates)}
    logger.debug("rhf_to_rhs: duplicated %d tau-free edges", len(duplicates))

    def forward(f: RomanAssignment) -> RhsPair:
        return RhsPair(tau.image(f.ones), f.twos)

    def backward(r: RhsPair) -> RomanAssignment:
        twos = r.r2
        r1 = 0
        for i in iter_bits(r.r1):
            r1 |= bit(copy_of.get(i, i))
        for i in iter_bits(r1 & empty):
            if h.edges[i] & twos:
                continue
            if not h.edges[i]:
                raise InfeasibleError(f"edge '{h.edge_names[i]}' is empty and has no tau-preimage")
            twos |= bit(lowest(h.edges[i]))
        ones = 0
        for i in iter_bits(r1 & ~empty & ~h.hit_by(twos)):
            ones |= bit(lowest(tau.preimage(i)))
        return RomanAssignment.from_levels(h.n, ones, twos)

    return ReductionOutput('rhf-to-rhs', HypergraphInstance(target), 0, forward, backward)


def rhs_to_rhf(h: Hypergraph, k: int) -> ReductionOutput:
    """
    Index vertices plus a universal edge turn RHS into RHF.

    The target universe is X plus one vertex per index; edge ``i`` becomes
    s_i together with its index vertex, and a new edge ``a`` covers X. tau
    sends X to ``a`` and every index vertex to its own edge. For k < |I| a
    rhs of weight at most k exists iff a rhf of weight at most k does.

    Raises:
        TrivialInstanceError: k >= |I|, where (I, {}) already answers yes
    """
    if k >= h.m:
        raise TrivialInstanceError(
            f"k={k} >= |I|={h.m}: (I, {{}}) is a rhs of weight {h.m}, nothing to reduce")
    taken = set(h.vertices)
    index_vertices = [_fresh(f"e_{name}", taken) for name in h.edge_names]
    universal = _fresh('a', set(h.edge_names))
    vertices = tuple(h.vertices) + tuple(index_vertices)
    edges = tuple(e | bit(h.n + i) for i, e in enumerate(h.edges)) + (h.all_vertices,)
    target = Hypergraph(vertices, tuple(h.edge_names) + (universal,), edges)
    tau = Correspondence(tuple([h.m] * h.n) + tuple(range(h.m)))

    def forward(r: RhsPair) -> RomanAssignment:
        ones = r.r1 << h.n
        if not r.r2 and h.n:
            ones |= bit(0)
        return RomanAssignment.from_levels(target.n, ones, r.r2)

    def backward(f: RomanAssignment) -> RhsPair:
        r2 = f.twos & h.all_vertices
        r1 = (f.support >> h.n) & h.all_edges
        return RhsPair(r1 & ~h.hit_by(r2), r2)

    return ReductionOutput('rhs-to-rhf', HypergraphInstance(target, tau), 0, forward, backward)


def rhf_to_rd_gadget(h: Hypergraph, tau: Correspondence) -> ReductionOutput:
    """
    Split-graph gadget: min rdf of the target = min rhf of the source + 2.

    Clique: ``a`` and one ``v_<x>`` per vertex. Independent side: the
    pendants ``b`` and ``c`` of ``a``, one ``w_<i>`` per index and one
    ``u_<i>`` per index with empty tau-preimage, each adjacent to the
    ``v_<x>`` of its edge members.
    """
    empty = tau.empty_indices(h)
    names: List[str] = ['a', 'b', 'c']
    names += [f"v_{x}" for x in h.vertices]
    names += [f"w_{i}" for i in h.edge_names]
    u_ids: Dict[int, int] = {}
    for i in iter_bits(empty):
        u_ids[i] = len(names)
        names.append(f"u_{h.edge_names[i]}")
    v0, w0 = 3, 3 + h.n

    pairs: List[Tuple[str, str]] = [('a', 'b'), ('a', 'c')]
    pairs += [('a', names[v0 + x]) for x in range(h.n)]
    pairs += [(names[v0 + x], names[v0 + y]) for x in range(h.n) for y in range(x + 1, h.n)]
    for i, edge in enumerate(h.edges):
        for x in iter_bits(edge):
            pairs.append((names[v0 + x], names[w0 + i]))
            if i in u_ids:
                pairs.append((names[v0 + x], names[u_ids[i]]))
    graph = Graph.build(names, pairs)
    logger.debug("rhf_to_rd_gadget: %s", graph.describe())

    def forward(f: RomanAssignment) -> RomanAssignment:
        twos = bit(0) | (f.twos << v0)
        ones = tau.image(f.ones) << w0
        return RomanAssignment.from_levels(graph.n, ones, twos)

    def backward(g: RomanAssignment) -> RomanAssignment:
        twos = (g.twos >> v0) & h.all_vertices
        hit = h.hit_by(twos)
        ones = 0
        for i in iter_bits(h.all_edges & ~hit):
            if contains(empty, i):
                if not h.edges[i]:
                    raise InfeasibleError(
                        f"edge '{h.edge_names[i]}' is empty and has no tau-preimage")
                twos |= bit(lowest(h.edges[i]))
            else:
                ones |= bit(lowest(tau.preimage(i)))
        return RomanAssignment.from_levels(h.n, ones & ~twos, twos)

    return ReductionOutput('rhf-to-rd', GraphInstance(graph), 2, forward, backward)


# ---------------------------------------------------------------------------
# Cover problems
# ---------------------------------------------------------------------------

def vc_to_rvc(g: Graph) -> ReductionOutput:
    """
    Attach a pendant ``<v>'`` to every vertex.

    G has a vertex cover of size k iff the target has a Roman vertex cover
    of weight k + |V|. Solutions of the source are vertex masks; solutions of
    the target are pairs over ``vertex_cover_hypergraph`` of the target.
    """
    taken = set(g.vertices)
    pendants = [_fresh(f"{v}'", taken) for v in g.vertices]
    vertices = list(g.vertices) + pendants
    pairs = [(g.vertices[u], g.vertices[v]) for u, v in g.edges()]
    pairs += [(v, p) for v, p in zip(g.vertices, pendants)]
    target = Graph.build(vertices, pairs)
    cover = vertex_cover_hypergraph(target)
    position = {edge: i for i, edge in enumerate(cover.edges)}

    def forward(c: int) -> RhsPair:
        r1 = mask_of(position[bit(v) | bit(g.n + v)] for v in range(g.n) if not contains(c, v))
        return RhsPair(r1, c)

    def backward(r: RhsPair) -> int:
        c = (r.r2 | (r.r2 >> g.n)) & g.all_vertices
        for i in iter_bits(r.r1):
            edge = cover.edges[i]
            if edge & ~g.all_vertices == 0 and not edge & c:
                c |= bit(lowest(edge))
        return c

    return ReductionOutput('vc-to-rvc', GraphInstance(target), g.n, forward, backward)


# ---------------------------------------------------------------------------
# Domination on split graphs and bounded Roman domination
# ---------------------------------------------------------------------------

def check_split_partition(g: Graph, clique: int, independent: int) -> List[str]:
    """Validate a split partition and return list of errors."""
    errors = []
    if clique & independent:
        errors.append("clique and independent set overlap: "
                      + ' '.join(g.vertex_tokens(clique & independent)))
    if (clique | independent) != g.all_vertices:
        errors.append("partition misses vertices: "
                      + ' '.join(g.vertex_tokens(g.all_vertices & ~(clique | independent))))
    if not g.is_clique(clique):
        errors.append("clique side is not a clique")
    if not g.is_independent(independent):
        errors.append("independent side is not independent")
    return errors


def normalize_split_partition(g: Graph, clique: int, independent: int) -> Tuple[int, int]:
    """Move clique vertices without an independent neighbour to the independent side."""
    while True:
        lonely = [c for c in iter_bits(clique) if not g.neighbors(c) & independent]
        if not lonely:
            return clique, independent
        c = lonely[0]
        logger.debug("moving lonely clique vertex '%s' to the independent side", g.vertices[c])
        clique &= ~bit(c)
        independent |= bit(c)


def find_split_partition(g: Graph) -> Tuple[int, int]:
    """
    Recognize a split graph from its degree sequence.

    With degrees sorted descending and m the largest index such that
    d_m >= m - 1, the first m vertices form a clique and the rest an
    independent set iff the degree-sum identity holds.

    Raises:
        InstanceError: the graph is not a split graph
    """
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    m = 0
    for k, d in enumerate(degrees, start=1):
        if d >= k - 1:
            m = k
    left = sum(degrees[:m])
    right = m * (m - 1) + sum(degrees[m:])
    if left != right:
        raise InstanceError(f"{g.describe()} is not a split graph")
    clique = mask_of(order[:m])
    return clique, g.all_vertices & ~clique


def ds_split_to_rhs(g: Graph, clique: int, independent: int, u: int = 0) -> ReductionOutput:
    """
    Minimal dominating sets of a split graph as minimal rhs.

    The target universe is the clique side C; each independent vertex i
    contributes the edge N(i), named after i. The pre-solution U becomes
    (U on the independent side, U on the clique side). Pairs map to
    dominating sets by D = R1 + R2.

    Raises:
        InstanceError: the partition is not a split partition
    """
    errors = check_split_partition(g, clique, independent)
    if errors:
        raise InstanceError.from_errors("Split partition", errors)
    clique, independent = normalize_split_partition(g, clique, independent)

    c_ids = list(iter_bits(clique))
    i_ids = list(iter_bits(independent))
    c_pos = {v: k for k, v in enumerate(c_ids)}
    i_pos = {v: k for k, v in enumerate(i_ids)}

    def to_c(mask: int) -> int:
        return mask_of(c_pos[v] for v in iter_bits(mask & clique))

    def to_i(mask: int) -> int:
        return mask_of(i_pos[v] for v in iter_bits(mask & independent))

    target = Hypergraph(tuple(g.vertices[v] for v in c_ids),
                        tuple(g.vertices[v] for v in i_ids),
                        tuple(to_c(g.neighbors(v)) for v in i_ids))
    preset = RhsPair(to_i(u), to_c(u))

    def forward(d: int) -> RhsPair:
        return RhsPair(to_i(d), to_c(d))

    def backward(r: RhsPair) -> int:
        return mask_of(i_ids[k] for k in iter_bits(r.r1)) | mask_of(c_ids[k] for k in iter_bits(r.r2))

    return ReductionOutput('ds-split-to-rhs', HypergraphInstance(target, preset=preset), 0,
                           forward, backward)


def bounded_rd_to_rhf(inst: BoundedRdInstance) -> ReductionOutput:
    """
    Bounded Roman domination extension as Roman hitting extension.

    The universe is X = V minus h^-1(0). Every vertex v of G gives the edge
    T_v = (N(v) on h^-1(2)) plus v itself when h(v) != 0, named after v, and
    tau(v) = T_v. Indices of h^-1(0) are exactly the tau-free ones. A vertex
    with h(v) = 1 lies in T_v alone, so no minimal rhf gives it a 2.

    Raises:
        InstanceError: f is not below h
    """
    if not inst.consistent:
        raise InstanceError("lower bound f is not below upper bound h")
    g, lower, upper = inst.graph, inst.lower, inst.upper
    allowed = g.all_vertices & ~upper.level(0)
    x_ids = list(iter_bits(allowed))
    pos = {v: k for k, v in enumerate(x_ids)}
    high = upper.level(2)

    def to_x(mask: int) -> int:
        return mask_of(pos[v] for v in iter_bits(mask & allowed))

    edges = tuple(to_x((g.neighbors(v) & high) | (bit(v) & allowed)) for v in range(g.n))
    target = Hypergraph(tuple(g.vertices[v] for v in x_ids), g.vertices, edges)
    tau = Correspondence(tuple(x_ids))
    f_bar = RomanAssignment(tuple(lower[v] for v in x_ids))

    def forward(f: RomanAssignment) -> RomanAssignment:
        return RomanAssignment(tuple(f[v] for v in x_ids))

    def backward(f: RomanAssignment) -> RomanAssignment:
        values = [0] * g.n
        for k, v in enumerate(x_ids):
            values[v] = f[k]
        return RomanAssignment(tuple(values))

    return ReductionOutput('bounded-rd-to-rhf', HypergraphInstance(target, tau, f_bar), 0,
                           forward, backward)


# ---------------------------------------------------------------------------
# Hypergraph Roman domination
# ---------------------------------------------------------------------------

def two_section(h: Hypergraph) -> Graph:
    """
    The 2-section: x and y adjacent iff some edge contains both.

    Raises:
        InstanceError: the hypergraph has two indices with the same edge
    """
    if not h.is_simple():
        raise InstanceError(f"{h.describe()} is not simple; the 2-section needs distinct edges")
    adjacency = [0] * h.n
    for edge in h.edges:
        for x in iter_bits(edge):
            adjacency[x] |= edge & ~bit(x)
    return Graph(h.vertices, tuple(adjacency))


REDUCTIONS: Dict[str, str] = {
    'rd-to-rhf': 'graph -> hypergraph with tau (offset 0)',
    'rhf-to-rhs': 'hypergraph with tau -> hypergraph (offset 0)',
    'rhs-to-rhf': 'hypergraph + k -> hypergraph with tau (decision at k)',
    'rhf-to-rd': 'hypergraph with tau -> split graph (offset +2)',
    'vc-to-rvc': 'graph -> graph with pendants (offset +|V|)',
    'ds-split': 'split graph + U -> hypergraph with preset',
    'bounded-rd': 'graph + f, h -> hypergraph with tau and f',
    'two-section': 'simple hypergraph -> graph',
}


__all__ = [
    'ReductionOutput',
    'REDUCTIONS',
    'vertex_cover_hypergraph',
    'edge_cover_hypergraph',
    'rd_to_rhf',
    'rhf_to_rhs',
    'rhs_to_rhf',
    'rhf_to_rd_gadget',
    'vc_to_rvc',
    'check_split_partition',
    'normalize_split_partition',
    'find_split_partition',
    'ds_split_to_rhs',
    'bounded_rd_to_rhf',
    'two_section',
]
