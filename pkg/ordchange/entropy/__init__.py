"""Conditional entropy of ordinal patterns and pair distributions"""

from .distributions import (
    PairDistribution,
    estimate_pair_distribution,
    estimate_pattern_distribution,
    iid_pair_distribution,
    iid_pattern_distribution,
    mix,
    project_pairs,
)
from .conditional import conditional_information, ece, entropy_h

__all__ = [
    "PairDistribution",
    "conditional_information",
    "ece",
    "entropy_h",
    "estimate_pair_distribution",
    "estimate_pattern_distribution",
    "iid_pair_distribution",
    "iid_pattern_distribution",
    "mix",
    "project_pairs",
]
