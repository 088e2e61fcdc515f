"""
Hypergraphs, correspondences, Roman assignments and Roman hitting set pairs.

Vertices and edge indices are opaque tokens in instance files and dense
integers everywhere else. Sets of either kind are integer bit sets (see
``rhstool.core.bitset``); whenever a choice between members is needed the
smallest dense id wins, so every solver is deterministic.

Key components:
- Hypergraph: universe plus an indexed edge sequence (duplicate edges allowed)
- Correspondence: map tau from vertices to incident edge indices
- RomanAssignment: map f from vertices to {0, 1, 2}
- RhsPair: pair (R1 of indices, R2 of vertices) weighted |R1| + 2|R2|

All types are immutable once built and safe to share between workers.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .bitset import bit, contains, full, iter_bits, lowest, mask_of, popcount
from ..utils.errors import InstanceError


@dataclass(frozen=True)
class Hypergraph:
    """
    A hypergraph (X, (s_i) for i in I).

    ``edges[i]`` is the vertex set of edge ``i`` as a bit set. Two indices may
    carry the same vertex set. Token names are kept for reporting; the
    token-to-id dictionaries and per-vertex incidences are derived.
    """
    vertices: Tuple[str, ...]
    edge_names: Tuple[str, ...]
    edges: Tuple[int, ...]
    _vertex_ids: Dict[str, int] = field(init=False, repr=False, compare=False)
    _edge_ids: Dict[str, int] = field(init=False, repr=False, compare=False)
    _incidence: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        errors = self.validate()
        if errors:
            raise InstanceError.from_errors("Hypergraph", errors)
        incidence = [0] * len(self.vertices)
        for i, edge in enumerate(self.edges):
            for x in iter_bits(edge):
                incidence[x] |= bit(i)
        object.__setattr__(self, '_vertex_ids', {v: k for k, v in enumerate(self.vertices)})
        object.__setattr__(self, '_edge_ids', {e: k for k, e in enumerate(self.edge_names)})
        object.__setattr__(self, '_incidence', tuple(incidence))

    @classmethod
    def build(cls, vertices: Sequence[str],
              edges: Sequence[Tuple[str, Iterable[str]]]) -> 'Hypergraph':
        """Build from tokens: ``edges`` is a sequence of (name, member tokens)."""
        ids = {v: k for k, v in enumerate(vertices)}
        errors = []
        names, masks = [], []
        for name, members_ in edges:
            mask = 0
            for token in members_:
                if token not in ids:
                    errors.append(f"edge '{name}': unknown vertex '{token}'")
                else:
                    mask |= bit(ids[token])
            names.append(str(name))
            masks.append(mask)
        if errors:
            raise InstanceError.from_errors("Hypergraph", errors)
        return cls(tuple(vertices), tuple(names), tuple(masks))

    def validate(self) -> List[str]:
        """Validate the hypergraph and return list of errors."""
        errors = []
        if len(set(self.vertices)) != len(self.vertices):
            errors.append("duplicate vertex tokens in universe")
        if len(set(self.edge_names)) != len(self.edge_names):
            errors.append("duplicate edge indices")
        if len(self.edge_names) != len(self.edges):
            errors.append("edge names and edge sets differ in length")
        universe = full(len(self.vertices))
        for name, edge in zip(self.edge_names, self.edges):
            if edge & ~universe:
                errors.append(f"edge '{name}' has members outside the universe")
        return errors

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> int:
        return full(self.n)

    @property
    def all_edges(self) -> int:
        return full(self.m)

    def vertex_id(self, token: str) -> int:
        try:
            return self._vertex_ids[token]
        except KeyError:
            raise InstanceError(f"unknown vertex '{token}'") from None

    def edge_id(self, token: str) -> int:
        try:
            return self._edge_ids[token]
        except KeyError:
            raise InstanceError(f"unknown edge index '{token}'") from None

    def vertex_mask(self, tokens: Iterable[str]) -> int:
        return mask_of(self.vertex_id(t) for t in tokens)

    def edge_mask(self, tokens: Iterable[str]) -> int:
        return mask_of(self.edge_id(t) for t in tokens)

    def vertex_tokens(self, mask: int) -> List[str]:
        return [self.vertices[x] for x in iter_bits(mask)]

    def edge_tokens(self, mask: int) -> List[str]:
        return [self.edge_names[i] for i in iter_bits(mask)]

    def incidence(self, x: int) -> int:
        """Indices of the edges containing vertex ``x``."""
        return self._incidence[x]

    def incidence_of_set(self, mask: int) -> int:
        """Union of the incidences of the members of ``mask``."""
        result = 0
        for x in iter_bits(mask):
            result |= self._incidence[x]
        return result

    def union_of_edges(self, index_mask: int) -> int:
        result = 0
        for i in iter_bits(index_mask):
            result |= self.edges[i]
        return result

    def hit_by(self, vertex_mask: int) -> int:
        """Indices whose edge meets ``vertex_mask``."""
        return self.incidence_of_set(vertex_mask)

    def empty_edges(self) -> int:
        return mask_of(i for i, e in enumerate(self.edges) if e == 0)

    def is_simple(self) -> bool:
        """True when no two indices carry the same vertex set."""
        return len(set(self.edges)) == len(self.edges)

    def restrict(self, vertex_mask: int) -> 'Hypergraph':
        """Same indices and universe, each edge intersected with ``vertex_mask``."""
        return Hypergraph(self.vertices, self.edge_names,
                          tuple(e & vertex_mask for e in self.edges))

    def describe(self) -> str:
        return f"Hypergraph[|X|={self.n}, |I|={self.m}]"


def incidence(h: Hypergraph, x: str) -> FrozenSet[str]:
    """Edge indices containing the vertex token ``x``."""
    return frozenset(h.edge_tokens(h.incidence(h.vertex_id(x))))


@dataclass(frozen=True)
class Correspondence:
    """
    A correspondence tau: X -> I with x in s_tau(x).

    ``targets[x]`` is the dense edge id assigned to vertex ``x``.
    """
    targets: Tuple[int, ...]

    @classmethod
    def from_names(cls, h: Hypergraph, mapping: Mapping[str, str]) -> 'Correspondence':
        """Build from a token mapping; it must cover the whole universe."""
        errors = []
        targets = []
        for x, token in enumerate(h.vertices):
            if token not in mapping:
                errors.append(f"tau missing for vertex '{token}'")
                targets.append(-1)
                continue
            name = mapping[token]
            if name not in h.edge_names:
                errors.append(f"tau({token}) = unknown edge index '{name}'")
                targets.append(-1)
                continue
            targets.append(h.edge_id(name))
        for token in mapping:
            if token not in h.vertices:
                errors.append(f"tau given for unknown vertex '{token}'")
        if errors:
            raise InstanceError.from_errors("Correspondence", errors)
        tau = cls(tuple(targets))
        errors = tau.validate(h)
        if errors:
            raise InstanceError.from_errors("Correspondence", errors)
        return tau

    @classmethod
    def identity(cls, n: int) -> 'Correspondence':
        return cls(tuple(range(n)))

    def validate(self, h: Hypergraph) -> List[str]:
        """Validate against ``h`` and return list of errors."""
        errors = []
        if len(self.targets) != h.n:
            return [f"tau has {len(self.targets)} entries for {h.n} vertices"]
        for x, i in enumerate(self.targets):
            if not 0 <= i < h.m:
                errors.append(f"tau({h.vertices[x]}) out of range")
            elif not contains(h.edges[i], x):
                errors.append(
                    f"tau({h.vertices[x]}) = {h.edge_names[i]} but "
                    f"{h.vertices[x]} is not in that edge")
        return errors

    def __call__(self, x: int) -> int:
        return self.targets[x]

    def image(self, vertex_mask: int) -> int:
        """tau(S) as an index set."""
        return mask_of(self.targets[x] for x in iter_bits(vertex_mask))

    def preimage(self, i: int) -> int:
        """tau^-1(i) as a vertex set."""
        return mask_of(x for x, t in enumerate(self.targets) if t == i)

    def empty_indices(self, h: Hypergraph) -> int:
        """Indices with an empty preimage."""
        return h.all_edges & ~self.image(h.all_vertices)

    def is_surjective(self, h: Hypergraph) -> bool:
        return self.empty_indices(h) == 0

    def is_injective_on(self, vertex_mask: int) -> bool:
        targets = [self.targets[x] for x in iter_bits(vertex_mask)]
        return len(set(targets)) == len(targets)

    def to_names(self, h: Hypergraph) -> Dict[str, str]:
        return {h.vertices[x]: h.edge_names[i] for x, i in enumerate(self.targets)}


@dataclass(frozen=True)
class RomanAssignment:
    """A total map f: X -> {0, 1, 2} stored as a tuple of values by dense id."""
    values: Tuple[int, ...]

    def __post_init__(self):
        bad = [v for v in self.values if v not in (0, 1, 2)]
        if bad:
            raise InstanceError(f"assignment values must be 0, 1 or 2, got {bad[0]}")

    @classmethod
    def zeros(cls, n: int) -> 'RomanAssignment':
        return cls((0,) * n)

    @classmethod
    def constant(cls, n: int, value: int) -> 'RomanAssignment':
        return cls((value,) * n)

    @classmethod
    def from_levels(cls, n: int, ones: int, twos: int) -> 'RomanAssignment':
        """Build from the sets f^-1(1) and f^-1(2)."""
        if ones & twos:
            raise InstanceError("f^-1(1) and f^-1(2) overlap")
        return cls(tuple(2 if contains(twos, x) else 1 if contains(ones, x) else 0
                         for x in range(n)))

    @classmethod
    def from_names(cls, vertices: Sequence[str], mapping: Mapping[str, int],
                   default: int = 0) -> 'RomanAssignment':
        """Build from a token mapping; absent vertices take ``default``."""
        unknown = [t for t in mapping if t not in vertices]
        if unknown:
            raise InstanceError(f"assignment for unknown vertex '{unknown[0]}'")
        return cls(tuple(int(mapping.get(v, default)) for v in vertices))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def level(self, value: int) -> int:
        """f^-1(value) as a vertex set."""
        return mask_of(x for x, v in enumerate(self.values) if v == value)

    @property
    def ones(self) -> int:
        return self.level(1)

    @property
    def twos(self) -> int:
        return self.level(2)

    @property
    def support(self) -> int:
        return mask_of(x for x, v in enumerate(self.values) if v)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def leq(self, other: 'RomanAssignment') -> bool:
        """Pointwise order f <= g."""
        return all(a <= b for a, b in zip(self.values, other.values))

    def leq_po(self, other: 'RomanAssignment') -> bool:
        """Partial order where a value may only drop to 0 or stay."""
        return all(a == b or a == 0 for a, b in zip(self.values, other.values))

    def with_value(self, x: int, value: int) -> 'RomanAssignment':
        values = list(self.values)
        values[x] = value
        return RomanAssignment(tuple(values))

    def with_values(self, vertex_mask: int, value: int) -> 'RomanAssignment':
        values = list(self.values)
        for x in iter_bits(vertex_mask):
            values[x] = value
        return RomanAssignment(tuple(values))

    def to_names(self, vertices: Sequence[str], nonzero: bool = True) -> Dict[str, int]:
        return {vertices[x]: v for x, v in enumerate(self.values) if v or not nonzero}


@dataclass(frozen=True)
class RhsPair:
    """
    A pair (R1, R2): ``r1`` is an index set, ``r2`` a vertex set.

    The weight is |R1| + 2|R2|.
    """
    r1: int = 0
    r2: int = 0

    @classmethod
    def of(cls, h: Hypergraph, r1: Iterable[str] = (), r2: Iterable[str] = ()) -> 'RhsPair':
        """Build from edge and vertex tokens of ``h``."""
        return cls(h.edge_mask(r1), h.vertex_mask(r2))

    @property
    def weight(self) -> int:
        return popcount(self.r1) + 2 * popcount(self.r2)

    def leq(self, other: 'RhsPair') -> bool:
        """Componentwise inclusion."""
        return self.r1 & ~other.r1 == 0 and self.r2 & ~other.r2 == 0

    def validate(self, h: Hypergraph) -> List[str]:
        errors = []
        if self.r1 & ~h.all_edges:
            errors.append("R1 contains indices outside I")
        if self.r2 & ~h.all_vertices:
            errors.append("R2 contains vertices outside X")
        return errors

    def sort_key(self) -> Tuple[int, int]:
        return (self.r1, self.r2)


def weight_assignment(f: RomanAssignment) -> int:
    """Sum of the values of ``f``."""
    return f.weight


def weight_pair(r: RhsPair) -> int:
    """|R1| + 2|R2|."""
    return r.weight


def smallest(mask: int) -> Optional[int]:
    """Smallest member or None for the empty set."""
    return lowest(mask) if mask else None
