"""Multimodal optimization with chaotic variation and basin decoding."""

from ._core import (
    adapt_tau,
    allocate_quotas,
    bifurcation_scan,
    decode_basins,
    evaluate,
    igd,
    igdx,
    knn_adjacency,
    median_pairwise_distance,
    normalize_heights,
    peak_ratio,
    problem_ids,
    problem_info,
    run,
)

__all__ = [
    "adapt_tau",
    "allocate_quotas",
    "bifurcation_scan",
    "decode_basins",
    "evaluate",
    "igd",
    "igdx",
    "knn_adjacency",
    "median_pairwise_distance",
    "normalize_heights",
    "peak_ratio",
    "problem_ids",
    "problem_info",
    "run",
]

__version__ = "0.1.0"
