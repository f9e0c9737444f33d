"""Greedy and exact Dodgson and Young election scores."""

from .ballots import BallotFormatError, format_native, parse_profile, write_native
from .bench import BenchConfig, BenchReport, run_benchmark
from .edits import (
    DeficitReduction,
    Edit,
    InapplicableEditError,
    apply_edit,
    apply_sequence,
    deficit_reduction_trace,
    format_witness,
    is_condorcet_sequence,
    parse_witness,
)
from .estimator import EditDistanceScorer
from .exact import OracleInfeasible, bfs_dodgson, exact_dodgson, exact_young
from .generate import generate_impartial_culture
from .greedy import (
    UNSCORABLE,
    MarginalCost,
    Move,
    ScoreReport,
    enumerate_dodgson_moves,
    enumerate_young_moves,
    greedy_score,
    marginal_cost,
)
from .profile import (
    Profile,
    TallyMatrix,
    TieConvention,
    build_profile,
    condorcet_winner,
    deficit,
    pairwise_tally,
    total_deficit,
)
from .rules import ComparisonRecord, ElectionResult, compare_results, score_all

__version__ = "0.1.0"
