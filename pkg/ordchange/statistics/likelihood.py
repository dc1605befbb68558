"""Likelihood-ratio statistic for a change in pattern transition probabilities"""

import numpy as np

from ..ordinal.counts import count_range
from ..ordinal.patterns import PatternSequence
from .ceofop import validate_split_time


def _transition_log_likelihood(seq: PatternSequence, t_start: int, t_end: int) -> float:
    """Σ over pairs l in [t_start, t_end - 1] of ln p(pi(l+1) | pi(l)), fitted on that range"""
    counts = count_range(seq, t_start, t_end)
    codes = seq.window(t_start, t_end)
    first, second = codes[:-1], codes[1:]
    probabilities = counts.n_pair[first, second] / counts.n_single[first]
    return float(np.sum(np.log(probabilities)))


def lr_statistic(seq: PatternSequence, t: int) -> float:
    """
    -2 ln Lkl(H0) + 2 ln Lkl(HA) for a Markov chain of patterns

    H0 fits one transition matrix to all pairs; HA fits one before the split
    and one after, skipping the d pairs that straddle it. The first pattern
    is taken as fixed so its probability cancels.
    """
    validate_split_time(seq, t)
    a, b, d = seq.start_time, seq.end_time, seq.order
    null = _transition_log_likelihood(seq, a, b)
    alternative = _transition_log_likelihood(seq, a, t) + _transition_log_likelihood(seq, t + d, b)
    return -2.0 * null + 2.0 * alternative
