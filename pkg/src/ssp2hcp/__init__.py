"""Set splitting to directed Hamiltonian cycle reduction, with oracles for both sides."""

from .graph import DiGraph
from .reduction import (
    ConstructionError,
    OccurrenceTables,
    ReductionArtifact,
    VertexLabel,
    build_graph,
    expected_counts,
    occurrence_tables,
)
from .simplify import DecidedNo, DecidedYes, Reduced, SimpleForm, simplify
from .solver import Cycle, SolveOutcome, Status, find_hamiltonian_cycle, verify_cycle
from .ssp import (
    Partition,
    Side,
    SplitReport,
    SspInstance,
    brute_force_ssp,
    check_partition,
    generate_random_instance,
    parse_ssp,
)
from .witness import TraceFailure, cycle_from_partition, extract_partition

__all__ = [
    "ConstructionError", "Cycle", "DecidedNo", "DecidedYes", "DiGraph", "OccurrenceTables",
    "Partition", "Reduced", "ReductionArtifact", "Side", "SimpleForm", "SolveOutcome",
    "SplitReport", "SspInstance", "Status", "TraceFailure", "VertexLabel", "brute_force_ssp",
    "build_graph", "check_partition", "cycle_from_partition", "expected_counts",
    "extract_partition", "find_hamiltonian_cycle", "generate_random_instance",
    "occurrence_tables", "parse_ssp", "simplify", "verify_cycle",
]
