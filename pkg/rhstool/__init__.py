"""rhs-tool - Roman hitting sets and Roman hitting functions on hypergraphs."""

__version__ = "0.3.0"
__author__ = "rhs-tool developers"

# Data model and instance files
from .core import *

# Solvers
from .characterize import (
    ExtensionWitness,
    check_extension_witness,
    is_minimal_rdf_theorem,
    is_minimal_rhf_theorem,
    is_minimal_rhs_theorem,
    is_po_minimal_rdf_theorem,
)
from .extend import (
    ExtAnswer,
    bounded_ext_rd,
    ext_ds_split,
    ext_rhf_general,
    ext_rhf_surjective,
    ext_rhs,
    promote_closure,
)
from .enumeration import EnumerationStats, enumerate_minimal_rhs, list_minimal_rhs
from .optimize import (
    OptResult,
    exact_min_rdf,
    exact_min_rhf,
    exact_min_rhs,
    greedy_rhf,
    greedy_rhs,
    rec_min,
    rvc_decide,
    rvc_enumerate,
    rvc_min,
)
from .config import get_config
from .utils.errors import *

__all__ = [
    # Data model
    'Hypergraph',
    'Correspondence',
    'RomanAssignment',
    'RhsPair',
    'Graph',
    'BoundedRdInstance',
    'HypergraphInstance',
    'GraphInstance',
    'load_instance',
    'parse_instance',
    'save_instance',
    'is_rhs',
    'is_rhf',
    'is_rdf',
    # Characterizations
    'ExtensionWitness',
    'check_extension_witness',
    'is_minimal_rdf_theorem',
    'is_po_minimal_rdf_theorem',
    'is_minimal_rhs_theorem',
    'is_minimal_rhf_theorem',
    # Extension
    'ExtAnswer',
    'ext_rhs',
    'ext_rhf_surjective',
    'ext_rhf_general',
    'promote_closure',
    'bounded_ext_rd',
    'ext_ds_split',
    # Enumeration and optimization
    'EnumerationStats',
    'enumerate_minimal_rhs',
    'list_minimal_rhs',
    'OptResult',
    'greedy_rhs',
    'greedy_rhf',
    'exact_min_rhs',
    'exact_min_rhf',
    'exact_min_rdf',
    'rvc_decide',
    'rvc_enumerate',
    'rvc_min',
    'rec_min',
    'get_config',
    # Errors
    'RhsError',
    'InstanceError',
    'PreconditionError',
    'InfeasibleError',
    'GuardRefusal',
    'TrivialInstanceError',
    'SearchInvariantError',
    'ExitCode',
]
