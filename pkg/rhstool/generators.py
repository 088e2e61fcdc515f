"""
Instance generators.

Deterministic families, seeded random hypergraphs and pre-solutions, and
graph corpora for cross-checking solvers against the brute-force oracles.
Every random generator takes a seed or a ``numpy.random.Generator`` so a
corpus can be rebuilt exactly.
"""

import logging
from typing import Iterator, List, Tuple, Union

import networkx as nx
import numpy as np

from .core.bitset import bit, mask_of
from .core.graph import BoundedRdInstance, Graph
from .core.hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from .core.instance import HypergraphInstance

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, None]


def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def gen_tight(n: int) -> Hypergraph:
    """
    n disjoint edges s_i = {x_(2i-1), x_(2i)}.

    Each edge is hit in exactly three minimal ways, so there are 3^n
    minimal rhs.
    """
    if n < 1:
        raise ValueError(f"tight family needs n >= 1, got {n}")
    vertices = tuple(f"x{k}" for k in range(1, 2 * n + 1))
    names = tuple(str(i) for i in range(1, n + 1))
    edges = tuple(bit(2 * i) | bit(2 * i + 1) for i in range(n))
    return Hypergraph(vertices, names, edges)


def gen_random(nv: int, ne: int, density: float, seed: Seed = None,
               with_tau: bool = False) -> HypergraphInstance:
    """
    Random hypergraph with vertices ``v1..`` and edges ``1..``.

    Each vertex-edge incidence is drawn independently with probability
    ``density``. With ``with_tau`` every vertex maps to a uniform edge
    containing it; a vertex in no edge first joins a uniform edge.

    Raises:
        ValueError: negative sizes, density outside (0, 1], or a tau
            requested with vertices but no edges
    """
    if nv < 0 or ne < 0:
        raise ValueError(f"sizes must be non-negative, got nv={nv}, ne={ne}")
    if not 0 < density <= 1:
        raise ValueError(f"density must be in (0, 1], got {density}")
    if with_tau and nv and not ne:
        raise ValueError("a tau needs at least one edge")

    rng = _rng(seed)
    incidence = rng.random((ne, nv)) < density
    edges = [mask_of(int(x) for x in np.flatnonzero(row)) for row in incidence]

    tau = None
    if with_tau:
        targets = []
        for x in range(nv):
            owners = [i for i in range(ne) if edges[i] >> x & 1]
            if not owners:
                i = int(rng.integers(ne))
                edges[i] |= bit(x)
                owners = [i]
            targets.append(owners[int(rng.integers(len(owners)))])
        tau = Correspondence(tuple(targets))

    h = Hypergraph(tuple(f"v{k}" for k in range(1, nv + 1)),
                   tuple(str(i) for i in range(1, ne + 1)),
                   tuple(edges))
    logger.debug("gen_random: %s density=%.2f", h.describe(), density)
    return HypergraphInstance(h, tau)


def random_pair(h: Hypergraph, seed: Seed = None, p: float = 0.3) -> RhsPair:
    """A random pre-solution: each index and vertex kept with probability ``p``."""
    rng = _rng(seed)
    r1 = mask_of(i for i in range(h.m) if rng.random() < p)
    r2 = mask_of(x for x in range(h.n) if rng.random() < p)
    return RhsPair(r1, r2)


def random_assignment(n: int, seed: Seed = None,
                      weights: Tuple[float, float, float] = (0.6, 0.25, 0.15)) -> RomanAssignment:
    """Values drawn independently with probabilities ``weights`` for 0, 1, 2."""
    rng = _rng(seed)
    values = rng.choice(3, size=n, p=np.asarray(weights) / sum(weights))
    return RomanAssignment(tuple(int(v) for v in values))


def random_corpus(count: int, max_vertices: int = 6, max_edges: int = 6,
                  seed: Seed = 0, with_tau: bool = False) -> Iterator[HypergraphInstance]:
    """``count`` random instances with sizes and densities drawn per instance."""
    rng = _rng(seed)
    for _ in range(count):
        nv = int(rng.integers(1, max_vertices + 1))
        ne = int(rng.integers(1, max_edges + 1))
        density = float(rng.uniform(0.2, 0.7))
        yield gen_random(nv, ne, density, rng, with_tau)


def small_graphs(max_n: int, connected: bool = True) -> Iterator[Graph]:
    """
    Every graph with 1 to ``max_n`` vertices up to isomorphism.

    Comes from the networkx atlas, so ``max_n`` is at most 7.
    """
    if not 1 <= max_n <= 7:
        raise ValueError(f"the graph atlas covers 1 to 7 vertices, got {max_n}")
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n == 0:
            continue
        if n > max_n:
            break
        if connected and not nx.is_connected(graph):
            continue
        yield Graph.from_networkx(graph)


def random_graph(n: int, p: float, seed: Seed = None) -> Graph:
    """G(n, p) through networkx."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError(f"need n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = _rng(seed)
    graph = nx.gnp_random_graph(n, p, seed=int(rng.integers(2 ** 31)))
    return Graph.from_networkx(graph)


def random_split_graph(n_clique: int, n_independent: int, p: float = 0.5,
                       seed: Seed = None) -> Tuple[Graph, int, int]:
    """
    A split graph: clique ``c1..``, independent set ``i1..``, each cross edge with probability p.

    Returns the graph with its clique and independent-set masks.
    """
    if n_clique < 0 or n_independent < 0:
        raise ValueError("part sizes must be non-negative")
    rng = _rng(seed)
    clique = [f"c{k}" for k in range(1, n_clique + 1)]
    independent = [f"i{k}" for k in range(1, n_independent + 1)]
    pairs: List[Tuple[str, str]] = [
        (clique[a], clique[b]) for a in range(n_clique) for b in range(a + 1, n_clique)]
    pairs += [(u, w) for w in independent for u in clique if rng.random() < p]
    g = Graph.build(clique + independent, pairs)
    c_mask = mask_of(range(n_clique))
    return g, c_mask, g.all_vertices & ~c_mask


def random_bounds(g: Graph, seed: Seed = None) -> BoundedRdInstance:
    """Random lower and upper bounds with f <= h pointwise."""
    rng = _rng(seed)
    upper = [int(v) for v in rng.integers(0, 3, size=g.n)]
    lower = [int(rng.integers(0, u + 1)) if rng.random() < 0.4 else 0 for u in upper]
    return BoundedRdInstance(g, RomanAssignment(tuple(lower)), RomanAssignment(tuple(upper)))


__all__ = [
    'gen_tight',
    'gen_random',
    'random_pair',
    'random_assignment',
    'random_corpus',
    'small_graphs',
    'random_graph',
    'random_split_graph',
    'random_bounds',
]
