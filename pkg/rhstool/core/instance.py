"""
Instance files: parsing, canonical serialization and validation.

Two line-oriented formats are supported; ``#`` starts a comment.

Hypergraph instances::

    universe a b c d
    edge 1 a b
    edge 2 a
    tau a 1
    assign b 2
    preset1 1
    preset2 c

Graph instances::

    vertex a b c
    gedge a b
    assign b 2
    upper a 1

``universe`` and ``vertex`` may be split over several lines. Absent ``assign``
entries are 0 and absent ``upper`` entries are 2. A ``tau`` section, when
present, must cover every vertex.

The canonical form written by ``serialize_instance`` lists tokens in
first-declared order, one edge per line, and omits defaults, so parsing a
canonical file and writing it again reproduces it byte for byte.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .graph import BoundedRdInstance, Graph
from .hypergraph import Correspondence, Hypergraph, RhsPair, RomanAssignment
from ..utils.errors import InstanceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypergraphInstance:
    """A hypergraph with optional correspondence, assignment and pair pre-solution."""
    hypergraph: Hypergraph
    tau: Optional[Correspondence] = None
    assignment: Optional[RomanAssignment] = None
    preset: RhsPair = field(default_factory=RhsPair)

    @property
    def f(self) -> RomanAssignment:
        """The assignment, all-zero when the file gave none."""
        if self.assignment is None:
            return RomanAssignment.zeros(self.hypergraph.n)
        return self.assignment

    def require_tau(self) -> Correspondence:
        if self.tau is None:
            raise InstanceError("instance has no tau section")
        return self.tau


@dataclass(frozen=True)
class GraphInstance:
    """A graph with optional lower assignment f and upper bound h."""
    graph: Graph
    assignment: Optional[RomanAssignment] = None
    upper: Optional[RomanAssignment] = None

    @property
    def f(self) -> RomanAssignment:
        if self.assignment is None:
            return RomanAssignment.zeros(self.graph.n)
        return self.assignment

    @property
    def h(self) -> RomanAssignment:
        if self.upper is None:
            return RomanAssignment.constant(self.graph.n, 2)
        return self.upper

    def bounded(self) -> BoundedRdInstance:
        return BoundedRdInstance(self.graph, self.f, self.h)


Instance = Union[HypergraphInstance, GraphInstance]


def _tokenize(text: str) -> List[Tuple[int, str, List[str]]]:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0].strip()
        if not content:
            continue
        keyword, *tokens = content.split()
        lines.append((lineno, keyword, tokens))
    return lines


def _parse_value(token: str, lineno: int, errors: List[str]) -> Optional[int]:
    if token not in ('0', '1', '2'):
        errors.append(f"line {lineno}: value must be 0, 1 or 2, got '{token}'")
        return None
    return int(token)


def _parse_hypergraph(lines, errors: List[str]) -> Optional[HypergraphInstance]:
    universe: List[str] = []
    seen_vertices = set()
    edges: List[Tuple[int, str, List[str]]] = []
    tau: Dict[str, Tuple[int, str]] = {}
    assign: Dict[str, Tuple[int, int]] = {}
    preset1: List[Tuple[int, str]] = []
    preset2: List[Tuple[int, str]] = []

    for lineno, keyword, tokens in lines:
        if keyword == 'universe':
            for token in tokens:
                if token in seen_vertices:
                    errors.append(f"line {lineno}: duplicate vertex '{token}'")
                else:
                    seen_vertices.add(token)
                    universe.append(token)
        elif keyword == 'edge':
            if not tokens:
                errors.append(f"line {lineno}: edge needs an index token")
                continue
            edges.append((lineno, tokens[0], tokens[1:]))
        elif keyword == 'tau':
            if len(tokens) != 2:
                errors.append(f"line {lineno}: expected 'tau <vertex> <edge>'")
            elif tokens[0] in tau:
                errors.append(f"line {lineno}: duplicate tau for '{tokens[0]}'")
            else:
                tau[tokens[0]] = (lineno, tokens[1])
        elif keyword == 'assign':
            if len(tokens) != 2:
                errors.append(f"line {lineno}: expected 'assign <vertex> <0|1|2>'")
                continue
            value = _parse_value(tokens[1], lineno, errors)
            if tokens[0] in assign:
                errors.append(f"line {lineno}: duplicate assign for '{tokens[0]}'")
            elif value is not None:
                assign[tokens[0]] = (lineno, value)
        elif keyword == 'preset1':
            preset1.extend((lineno, t) for t in tokens)
        elif keyword == 'preset2':
            preset2.extend((lineno, t) for t in tokens)
        else:
            errors.append(f"line {lineno}: unknown keyword '{keyword}'")

    edge_names: List[str] = []
    edge_members: List[List[str]] = []
    for lineno, name, members in edges:
        if name in edge_names:
            errors.append(f"line {lineno}: duplicate edge index '{name}'")
            continue
        for token in members:
            if token not in seen_vertices:
                errors.append(f"line {lineno}: unknown vertex '{token}' in edge '{name}'")
        edge_names.append(name)
        edge_members.append([t for t in members if t in seen_vertices])

    for token, (lineno, name) in tau.items():
        if token not in seen_vertices:
            errors.append(f"line {lineno}: tau for unknown vertex '{token}'")
        if name not in edge_names:
            errors.append(f"line {lineno}: tau refers to unknown edge '{name}'")
    for token, (lineno, _) in assign.items():
        if token not in seen_vertices:
            errors.append(f"line {lineno}: assign for unknown vertex '{token}'")
    for lineno, name in preset1:
        if name not in edge_names:
            errors.append(f"line {lineno}: preset1 refers to unknown edge '{name}'")
    for lineno, token in preset2:
        if token not in seen_vertices:
            errors.append(f"line {lineno}: preset2 refers to unknown vertex '{token}'")
    if tau:
        missing = [v for v in universe if v not in tau]
        if missing:
            errors.append(f"tau section is partial: missing {', '.join(missing)}")
    if errors:
        return None

    h = Hypergraph.build(universe, list(zip(edge_names, edge_members)))
    correspondence = None
    if tau:
        try:
            correspondence = Correspondence.from_names(h, {v: e for v, (_, e) in tau.items()})
        except InstanceError as exc:
            errors.extend(exc.errors)
            return None
    assignment = None
    if assign:
        assignment = RomanAssignment.from_names(h.vertices, {v: val for v, (_, val) in assign.items()})
    preset = RhsPair(h.edge_mask(t for _, t in preset1), h.vertex_mask(t for _, t in preset2))
    return HypergraphInstance(h, correspondence, assignment, preset)


def _parse_graph(lines, errors: List[str]) -> Optional[GraphInstance]:
    vertices: List[str] = []
    seen = set()
    pairs: List[Tuple[int, str, str]] = []
    assign: Dict[str, Tuple[int, int]] = {}
    upper: Dict[str, Tuple[int, int]] = {}

    for lineno, keyword, tokens in lines:
        if keyword == 'vertex':
            for token in tokens:
                if token in seen:
                    errors.append(f"line {lineno}: duplicate vertex '{token}'")
                else:
                    seen.add(token)
                    vertices.append(token)
        elif keyword == 'gedge':
            if len(tokens) != 2:
                errors.append(f"line {lineno}: expected 'gedge <u> <v>'")
            else:
                pairs.append((lineno, tokens[0], tokens[1]))
        elif keyword in ('assign', 'upper'):
            target = assign if keyword == 'assign' else upper
            if len(tokens) != 2:
                errors.append(f"line {lineno}: expected '{keyword} <vertex> <0|1|2>'")
                continue
            value = _parse_value(tokens[1], lineno, errors)
            if tokens[0] in target:
                errors.append(f"line {lineno}: duplicate {keyword} for '{tokens[0]}'")
            elif value is not None:
                target[tokens[0]] = (lineno, value)
        else:
            errors.append(f"line {lineno}: unknown keyword '{keyword}'")

    seen_pairs = set()
    for lineno, u, v in pairs:
        for token in (u, v):
            if token not in seen:
                errors.append(f"line {lineno}: unknown vertex '{token}'")
        if u == v:
            errors.append(f"line {lineno}: self-loop at '{u}'")
        key = frozenset((u, v))
        if key in seen_pairs:
            errors.append(f"line {lineno}: duplicate edge {u}-{v}")
        seen_pairs.add(key)
    for table, keyword in ((assign, 'assign'), (upper, 'upper')):
        for token, (lineno, _) in table.items():
            if token not in seen:
                errors.append(f"line {lineno}: {keyword} for unknown vertex '{token}'")
    if errors:
        return None

    g = Graph.build(vertices, [(u, v) for _, u, v in pairs])
    f = RomanAssignment.from_names(g.vertices, {v: x for v, (_, x) in assign.items()}) if assign else None
    h = (RomanAssignment.from_names(g.vertices, {v: x for v, (_, x) in upper.items()}, default=2)
         if upper else None)
    return GraphInstance(g, f, h)


def parse_instance(text: str, source: str = '<string>') -> Instance:
    """
    Parse instance text.

    The format is chosen by keyword: ``universe``/``edge`` lines make a
    hypergraph instance, ``vertex``/``gedge`` lines a graph instance.

    Raises:
        InstanceError: listing every problem found, each with its line number
    """
    lines = _tokenize(text)
    keywords = {keyword for _, keyword, _ in lines}
    is_graph = bool(keywords & {'vertex', 'gedge', 'upper'})
    is_hyper = bool(keywords & {'universe', 'edge', 'tau', 'preset1', 'preset2'})
    if is_graph and is_hyper:
        raise InstanceError(f"{source}: mixes hypergraph and graph keywords")

    errors: List[str] = []
    instance = _parse_graph(lines, errors) if is_graph else _parse_hypergraph(lines, errors)
    if errors or instance is None:
        raise InstanceError.from_errors(f"{source}: instance", errors)
    logger.debug("parsed %s from %s", type(instance).__name__, source)
    return instance


def load_instance(path: Union[str, Path]) -> Instance:
    """Load an instance file of either kind."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_instance(text, str(path))


def load_hypergraph_instance(path: Union[str, Path]) -> HypergraphInstance:
    instance = load_instance(path)
    if not isinstance(instance, HypergraphInstance):
        raise InstanceError(f"{path}: expected a hypergraph instance, got a graph")
    return instance


def load_graph_instance(path: Union[str, Path]) -> GraphInstance:
    instance = load_instance(path)
    if not isinstance(instance, GraphInstance):
        raise InstanceError(f"{path}: expected a graph instance, got a hypergraph")
    return instance


def _line(keyword: str, tokens: List[str]) -> str:
    return ' '.join([keyword] + tokens)


def serialize_instance(instance: Instance) -> str:
    """Write the canonical text of ``instance``."""
    out: List[str] = []
    if isinstance(instance, HypergraphInstance):
        h = instance.hypergraph
        out.append(_line('universe', list(h.vertices)))
        for name, edge in zip(h.edge_names, h.edges):
            out.append(_line('edge', [name] + h.vertex_tokens(edge)))
        if instance.tau is not None:
            for x, i in enumerate(instance.tau.targets):
                out.append(_line('tau', [h.vertices[x], h.edge_names[i]]))
        if instance.assignment is not None:
            for x, value in enumerate(instance.assignment.values):
                if value:
                    out.append(_line('assign', [h.vertices[x], str(value)]))
        if instance.preset.r1:
            out.append(_line('preset1', h.edge_tokens(instance.preset.r1)))
        if instance.preset.r2:
            out.append(_line('preset2', h.vertex_tokens(instance.preset.r2)))
    else:
        g = instance.graph
        out.append(_line('vertex', list(g.vertices)))
        for u, v in g.edges():
            out.append(_line('gedge', [g.vertices[u], g.vertices[v]]))
        if instance.assignment is not None:
            for v, value in enumerate(instance.assignment.values):
                if value:
                    out.append(_line('assign', [g.vertices[v], str(value)]))
        if instance.upper is not None:
            for v, value in enumerate(instance.upper.values):
                if value != 2:
                    out.append(_line('upper', [g.vertices[v], str(value)]))
    return '\n'.join(out) + '\n'


def save_instance(instance: Instance, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(serialize_instance(instance), encoding='utf-8')
    return path


def validate_instance_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Validate an instance file and return validation results."""
    try:
        instance = load_instance(path)
        errors: List[str] = []
        if isinstance(instance, HypergraphInstance) and instance.tau is not None:
            errors = instance.tau.validate(instance.hypergraph)
        return {
            'valid': not errors,
            'errors': errors,
            'instance': instance,
        }
    except InstanceError as e:
        return {
            'valid': False,
            'errors': e.errors,
            'instance': None,
        }


__all__ = [
    'HypergraphInstance',
    'GraphInstance',
    'Instance',
    'parse_instance',
    'load_instance',
    'load_hypergraph_instance',
    'load_graph_instance',
    'serialize_instance',
    'save_instance',
    'validate_instance_file',
]
