"""Empirical and theoretical conditional entropy of ordinal patterns (nats)"""

import numpy as np
from scipy.special import xlogy

from ..errors import InvalidInputError
from ..ordinal.counts import PairCounts
from .distributions import PairDistribution


def _nlogn_sum(values: np.ndarray) -> float:
    # 0 ln 0 := 0
    return float(np.sum(xlogy(values, values)))


def conditional_information(counts: PairCounts) -> float:
    """
    T * eCE for a count table, Σ n_i ln n_i - Σ n_ij ln n_ij

    This is the quantity the CEofOP statistic is assembled from; the pattern
    entropy in a range weighted by its number of pairs.
    """
    value = _nlogn_sum(counts.n_single) - _nlogn_sum(counts.n_pair)
    return max(value, 0.0)


def ece(counts: PairCounts) -> float:
    """Empirical conditional entropy of the patterns behind a count table"""
    if counts.total_pairs < 1:
        raise InvalidInputError("empirical conditional entropy needs at least one pattern pair")
    return conditional_information(counts) / counts.total_pairs


def entropy_h(dist: PairDistribution) -> float:
    """
    Conditional entropy H(P) of a pair distribution

    H(P) = -Σ p_ij ln p_ij + Σ p_i ln p_i with p_i the row marginal.
    Normalization is enforced when the distribution is built.
    """
    if not isinstance(dist, PairDistribution):
        raise InvalidInputError("entropy_h expects a PairDistribution")
    value = _nlogn_sum(dist.marginal()) - _nlogn_sum(dist.p_pair)
    return max(value, 0.0)
