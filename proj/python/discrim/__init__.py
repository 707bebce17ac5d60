"""Discrimination measures for inequivalent multipartite entangled states."""

from ._discrim import (
    DenseState,
    PauliString,
    cluster4,
    coin_equivalence,
    discriminate,
    expectation,
    ghz,
    graph_state,
    max_overlap,
    measures_from_correlations,
    mixed_state,
    noise_curve,
    outcome_distribution,
    overlap,
    permute_qubits,
    pure_state,
    relative_entropy,
    simulate_runs,
    stabilizer_ops,
    state,
    subset_search,
    two_point_bound,
    two_point_count,
    w3,
    what_w3,
    white_noise,
)

__all__ = [
    "DenseState",
    "PauliString",
    "cluster4",
    "coin_equivalence",
    "discriminate",
    "expectation",
    "ghz",
    "graph_state",
    "max_overlap",
    "measures_from_correlations",
    "mixed_state",
    "noise_curve",
    "outcome_distribution",
    "overlap",
    "permute_qubits",
    "pure_state",
    "relative_entropy",
    "simulate_runs",
    "stabilizer_ops",
    "state",
    "subset_search",
    "two_point_bound",
    "two_point_count",
    "w3",
    "what_w3",
    "white_noise",
]
