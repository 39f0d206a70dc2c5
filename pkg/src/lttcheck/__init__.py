"""Decide whether a finite automaton's language is locally threshold testable.

Two independent deciders: a transition-graph analysis (four conditions over
the graph and its pair graph) and a transition-semigroup oracle (aperiodicity
plus a two-sided idempotent identity).  Both report machine-checkable
witnesses on failure and back the ``lttcheck`` command-line tool.
"""

from ._kernels import available_backends, default_backend
from .automaton import (
    Automaton,
    AutomatonParseError,
    CompleteAutomaton,
    complete_automaton,
    complete_with_sink,
    default_labels,
    parse_automaton,
    serialize_automaton,
)
from .checker import (
    EMPTY,
    ILL_DEFINED,
    GraphArtifacts,
    TripleSccTable,
    Verdict,
    build_graph_artifacts,
    check_ltt,
    check_ltt_detailed,
    compute_scc_table,
    revalidate_witness,
)
from .difftest import DiffSummary, exhaustive_stream, random_stream, run_diff
from .generate import (
    XorShift64Star,
    enumerate_complete_automata,
    random_complete_automaton,
    random_trials,
)
from .graphs import (
    ReachabilityTable,
    SccDecomposition,
    cycle_states,
    product_square,
    reachability,
    strongly_connected_components,
)
from .report import DeciderReport, RunReport
from .semigroup import (
    DEFAULT_CAP,
    CayleyParseError,
    CayleySemigroup,
    SemigroupCapacityError,
    TransitionSemigroup,
    build_semigroup,
    is_aperiodic,
    parse_cayley,
    satisfies_identity,
    semigroup_verdict,
    serialize_cayley,
)

__version__ = "0.1.0"

__all__ = [
    "Automaton",
    "AutomatonParseError",
    "CayleyParseError",
    "CayleySemigroup",
    "CompleteAutomaton",
    "DEFAULT_CAP",
    "DeciderReport",
    "DiffSummary",
    "EMPTY",
    "GraphArtifacts",
    "ILL_DEFINED",
    "ReachabilityTable",
    "RunReport",
    "SccDecomposition",
    "SemigroupCapacityError",
    "TransitionSemigroup",
    "TripleSccTable",
    "Verdict",
    "XorShift64Star",
    "available_backends",
    "build_graph_artifacts",
    "build_semigroup",
    "check_ltt",
    "check_ltt_detailed",
    "complete_automaton",
    "complete_with_sink",
    "compute_scc_table",
    "cycle_states",
    "default_backend",
    "default_labels",
    "enumerate_complete_automata",
    "exhaustive_stream",
    "is_aperiodic",
    "parse_automaton",
    "parse_cayley",
    "product_square",
    "random_complete_automaton",
    "random_stream",
    "random_trials",
    "reachability",
    "revalidate_witness",
    "run_diff",
    "satisfies_identity",
    "semigroup_verdict",
    "serialize_automaton",
    "serialize_cayley",
    "strongly_connected_components",
    "__version__",
]
