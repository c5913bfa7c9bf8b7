"""Two far-apart X-Y paths, or one small ball meeting every X-Y path."""
from .certificates import (
    Certificate,
    DistantPaths,
    HittingBall,
    Verdict,
    menger_two_paths,
    verify_ball,
    verify_certificate,
    verify_paths,
)
from .dichotomy import InvariantError, solve, solve_with_trace
from .generators import Instance, default_corpus, figure1_instance, grid_instance, random_instance
from .graph_core import INF, Graph, Path
from .intervals import IntervalSystem, SeparatorWitness, interlaced_or_separator
from .oracle import OracleBudget, Outcome, exact_distant_paths, min_hitting_ball

__all__ = [
    "Certificate", "DistantPaths", "HittingBall", "Verdict", "menger_two_paths",
    "verify_ball", "verify_certificate", "verify_paths",
    "InvariantError", "solve", "solve_with_trace",
    "Instance", "default_corpus", "figure1_instance", "grid_instance", "random_instance",
    "INF", "Graph", "Path",
    "IntervalSystem", "SeparatorWitness", "interlaced_or_separator",
    "OracleBudget", "Outcome", "exact_distant_paths", "min_hitting_ball",
]
