"""Max-cut solver based on a piecewise-linear gradient-flow spin machine.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (  # noqa: F401
    BinaryConfig,
    ContinuousState,
    DynParams,
    Graph,
    Kernel,
    KernelKind,
    RestartMode,
    RoundingMode,
    RoundingOutcome,
    RunRecord,
    Schedule,
    SearchMode,
    SolveResult,
    apply_emr,
    apply_nmr,
    brute_force_maxcut,
    circular_distance,
    cut_value,
    embed_binary,
    evolve,
    exhaustive_rounding,
    expected_cut,
    imbalance,
    lyapunov_energy,
    optimal_rounding,
    post_process,
    random_rounding,
    relaxed_cut,
    round_at,
    solve,
    step_euler,
    wrap_period,
)

__all__ = [
    "BinaryConfig",
    "ContinuousState",
    "DynParams",
    "Graph",
    "Kernel",
    "KernelKind",
    "RestartMode",
    "RoundingMode",
    "RoundingOutcome",
    "RunRecord",
    "Schedule",
    "SearchMode",
    "SolveResult",
    "apply_emr",
    "apply_nmr",
    "brute_force_maxcut",
    "circular_distance",
    "cut_value",
    "embed_binary",
    "evolve",
    "exhaustive_rounding",
    "expected_cut",
    "imbalance",
    "lyapunov_energy",
    "optimal_rounding",
    "post_process",
    "random_rounding",
    "relaxed_cut",
    "round_at",
    "solve",
    "step_euler",
    "wrap_period",
]
