"""Core data model: hypergraphs, graphs, assignments, pairs and instance files."""

from .hypergraph import (
    Correspondence,
    Hypergraph,
    RhsPair,
    RomanAssignment,
    incidence,
    weight_assignment,
    weight_pair,
)
from .graph import BoundedRdInstance, Graph
from .validity import (
    closed_neighborhood_hypergraph,
    is_hypergraph_rdf,
    is_rdf,
    is_rhf,
    is_rhs,
)
from .instance import (
    GraphInstance,
    HypergraphInstance,
    load_instance,
    parse_instance,
    save_instance,
    serialize_instance,
    validate_instance_file,
)

__all__ = [
    'Correspondence',
    'Hypergraph',
    'RhsPair',
    'RomanAssignment',
    'incidence',
    'weight_assignment',
    'weight_pair',
    'BoundedRdInstance',
    'Graph',
    'closed_neighborhood_hypergraph',
    'is_hypergraph_rdf',
    'is_rdf',
    'is_rhf',
    'is_rhs',
    'GraphInstance',
    'HypergraphInstance',
    'load_instance',
    'parse_instance',
    'save_instance',
    'serialize_instance',
    'validate_instance_file',
]
