"""Simple undirected graphs and bounded Roman domination instances."""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from .bitset import bit, contains, full, iter_bits, mask_of
from .hypergraph import RomanAssignment
from ..utils.errors import InstanceError


@dataclass(frozen=True)
class Graph:
    """
    A simple graph G = (V, E) on dense vertex ids.

    ``adjacency[v]`` is the open neighbourhood N(v) as a bit set.
    """
    vertices: Tuple[str, ...]
    adjacency: Tuple[int, ...]
    _ids: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        errors = self.validate()
        if errors:
            raise InstanceError.from_errors("Graph", errors)
        object.__setattr__(self, '_ids', {v: k for k, v in enumerate(self.vertices)})

    @classmethod
    def build(cls, vertices: Sequence[str], edges: Iterable[Tuple[str, str]]) -> 'Graph':
        """Build from vertex tokens and token pairs."""
        ids = {v: k for k, v in enumerate(vertices)}
        adjacency = [0] * len(vertices)
        errors = []
        for u, v in edges:
            if u not in ids or v not in ids:
                missing = u if u not in ids else v
                errors.append(f"edge {u}-{v}: unknown vertex '{missing}'")
                continue
            a, b = ids[u], ids[v]
            if a == b:
                errors.append(f"self-loop at '{u}'")
            elif contains(adjacency[a], b):
                errors.append(f"duplicate edge {u}-{v}")
            else:
                adjacency[a] |= bit(b)
                adjacency[b] |= bit(a)
        if errors:
            raise InstanceError.from_errors("Graph", errors)
        return cls(tuple(vertices), tuple(adjacency))

    def validate(self) -> List[str]:
        """Validate the graph and return list of errors."""
        errors = []
        if len(set(self.vertices)) != len(self.vertices):
            errors.append("duplicate vertex tokens")
        if len(self.adjacency) != len(self.vertices):
            errors.append("adjacency and vertex list differ in length")
            return errors
        universe = full(len(self.vertices))
        for v, nbrs in enumerate(self.adjacency):
            if contains(nbrs, v):
                errors.append(f"self-loop at '{self.vertices[v]}'")
            if nbrs & ~universe:
                errors.append(f"'{self.vertices[v]}' has neighbours outside V")
            for u in iter_bits(nbrs & universe):
                if not contains(self.adjacency[u], v):
                    errors.append(f"asymmetric adjacency {self.vertices[v]}-{self.vertices[u]}")
        return errors

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def all_vertices(self) -> int:
        return full(self.n)

    def vertex_id(self, token: str) -> int:
        try:
            return self._ids[token]
        except KeyError:
            raise InstanceError(f"unknown vertex '{token}'") from None

    def vertex_mask(self, tokens: Iterable[str]) -> int:
        return mask_of(self.vertex_id(t) for t in tokens)

    def vertex_tokens(self, mask: int) -> List[str]:
        return [self.vertices[v] for v in iter_bits(mask)]

    def neighbors(self, v: int) -> int:
        return self.adjacency[v]

    def closed(self, v: int) -> int:
        return self.adjacency[v] | bit(v)

    def neighbors_of_set(self, mask: int) -> int:
        """N(S): union of the open neighbourhoods."""
        result = 0
        for v in iter_bits(mask):
            result |= self.adjacency[v]
        return result

    def closed_of_set(self, mask: int) -> int:
        """N[S]."""
        return self.neighbors_of_set(mask) | mask

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adjacency[u]) if u < v]

    def edge_count(self) -> int:
        return len(self.edges())

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_clique(self, mask: int) -> bool:
        return all(mask & ~(self.adjacency[v] | bit(v)) == 0 for v in iter_bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(self.adjacency[v] & mask == 0 for v in iter_bits(mask))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((self.vertices[u], self.vertices[v]) for u, v in self.edges())
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Graph':
        """Convert; node labels become tokens in sorted order of their string form."""
        nodes = sorted(graph.nodes, key=lambda node: (len(str(node)), str(node)))
        names = [str(node) for node in nodes]
        return cls.build(names, ((str(u), str(v)) for u, v in graph.edges))

    def describe(self) -> str:
        return f"Graph[|V|={self.n}, |E|={self.edge_count()}]"


@dataclass(frozen=True)
class BoundedRdInstance:
    """A graph with lower bound ``lower`` (f) and upper bound ``upper`` (h)."""
    graph: Graph
    lower: RomanAssignment
    upper: RomanAssignment

    def validate(self) -> List[str]:
        errors = []
        if len(self.lower) != self.graph.n:
            errors.append("lower bound is not total on V")
        if len(self.upper) != self.graph.n:
            errors.append("upper bound is not total on V")
        return errors

    @property
    def consistent(self) -> bool:
        """True when f <= h pointwise."""
        return self.lower.leq(self.upper)
