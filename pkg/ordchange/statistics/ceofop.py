"""
CEofOP statistic: conditional entropy of ordinal patterns around a split

For a pattern sequence pi(a..b) of order d and a split time t,

    CEofOP(t) = (b - a - d) eCE(pi(a..b)) - (t - a) eCE(pi(a..t))
                - (b - t - d) eCE(pi(t+d..b))

defined for a < t < b - d. The d pairs at l = t .. t+d-1 straddle the split
and belong to neither part. A sequence extracted from x(0..L) has a = d,
b = L, which gives the usual weights L - 2d, t - d and L - (t + d).
"""

import logging

import numpy as np
from scipy.special import xlogy

from ..entropy.conditional import ece
from ..errors import InvalidInputError
from ..ordinal.counts import PairCounts, count_range
from ..ordinal.patterns import PatternSequence
from .profile import StatProfile

logger = logging.getLogger(__name__)


def validate_split_time(seq: PatternSequence, t: int) -> None:
    """Raise unless start_time < t < end_time - d"""
    a, b, d = seq.start_time, seq.end_time, seq.order
    if not a < t < b - d:
        raise InvalidInputError(
            f"split time {t} outside the admissible range {a} < t < {b - d}"
        )


def ceofop_at(seq: PatternSequence, t: int) -> float:
    """CEofOP at one split time, every eCE recomputed from scratch"""
    validate_split_time(seq, t)
    a, b, d = seq.start_time, seq.end_time, seq.order
    whole = ece(count_range(seq, a, b))
    left = ece(count_range(seq, a, t))
    right = ece(count_range(seq, t + d, b))
    return (b - a - d) * whole - (t - a) * left - (b - t - d) * right


def _log_ratio_sum(counts: PairCounts) -> float:
    """Σ n_ij ln(n_ij / n_i) over observed pairs"""
    observed = counts.n_pair > 0
    rows = np.broadcast_to(counts.n_single[:, None], counts.n_pair.shape)
    n = counts.n_pair[observed].astype(float)
    return float(np.sum(n * np.log(n / rows[observed])))


def ceofop_count_form(seq: PatternSequence, t: int) -> float:
    """CEofOP at one split time written directly in pattern-pair counts"""
    validate_split_time(seq, t)
    a, b, d = seq.start_time, seq.end_time, seq.order
    whole = count_range(seq, a, b)
    return (
        -(b - a - d) / whole.total_pairs * _log_ratio_sum(whole)
        + _log_ratio_sum(count_range(seq, a, t))
        + _log_ratio_sum(count_range(seq, t + d, b))
    )


def _stable_order(keys: np.ndarray) -> np.ndarray:
    """
    Stable sorting permutation of nonnegative keys below 2**32

    Two passes over 16-bit digits, low digit first. numpy sorts 16-bit
    integers with a stable radix sort, so each pass is linear.
    """
    keys = np.asarray(keys, dtype=np.uint32)
    order = np.argsort((keys & 0xFFFF).astype(np.uint16), kind="stable")
    high = (keys[order] >> 16).astype(np.uint16)
    if high.any():
        order = order[np.argsort(high, kind="stable")]
    return order


def _occurrence_rank(keys: np.ndarray) -> np.ndarray:
    """For each position, how many earlier positions hold the same key"""
    order = _stable_order(keys)
    ordered = keys[order]
    n = keys.size
    starts = np.flatnonzero(np.r_[True, ordered[1:] != ordered[:-1]])
    group_start = np.repeat(starts, np.diff(np.r_[starts, n]))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n) - group_start
    return rank


def _gain_table(n: int) -> np.ndarray:
    # g(r) = f(r+1) - f(r) with f(n) = n ln n
    counts = np.arange(n + 1, dtype=float)
    return np.diff(xlogy(counts, counts))


def admissible_range(seq: PatternSequence, t_min_offset: int = 0):
    """Inclusive (lo, hi) of split times a profile covers; lo > hi when none"""
    if t_min_offset < 0:
        raise InvalidInputError("t_min_offset must be nonnegative")
    a, b, d = seq.start_time, seq.end_time, seq.order
    return max(a + 1, a + t_min_offset), min(b - d - 1, b - t_min_offset)


def ceofop_profile(seq: PatternSequence, t_min_offset: int = 0) -> StatProfile:
    """
    CEofOP at every split time in [start + offset, end - offset]

    Runs in linear time: occurrence ranks come from a radix sort of the
    pattern and pair codes, the rest is prefix sums. Each pair's contribution to Σ n_i ln n_i - Σ n_ij ln n_ij
    depends only on how many times its pattern and its pair occurred before it,
    so prefix sums give the left part for every t and reversed prefix sums give
    the right part.
    """
    lo, hi = admissible_range(seq, t_min_offset)
    if hi < lo:
        logger.debug("No admissible split time in [%d, %d] with offset %d",
                     seq.start_time, seq.end_time, t_min_offset)
        return StatProfile.empty("ceofop")

    a, b, d = seq.start_time, seq.end_time, seq.order
    codes = seq.codes
    first = codes[:-1]
    pair = first * seq.n_patterns + codes[1:]
    gain = _gain_table(first.size)

    forward = gain[_occurrence_rank(first)] - gain[_occurrence_rank(pair)]
    prefix = np.concatenate(([0.0], np.cumsum(forward)))

    backward = (
        gain[_occurrence_rank(first[::-1])[::-1]]
        - gain[_occurrence_rank(pair[::-1])[::-1]]
    )
    suffix = np.concatenate((np.cumsum(backward[::-1])[::-1], [0.0]))

    t = np.arange(lo, hi + 1, dtype=np.int64)
    whole = (b - a - d) / first.size * prefix[-1]
    values = whole - prefix[t - a] - suffix[t + d - a]
    return StatProfile("ceofop", t, values)


def example_toy_series(length: int) -> np.ndarray:
    """
    Periodic series x(0..L) whose pattern transitions change at L/2

    Before L/2 the order-1 patterns run up, up, down, down so each pattern has
    two successors; after L/2 up and down strictly alternate. Both patterns are
    equally frequent on either side, only the transitions change.
    """
    if length < 8 or length % 2:
        raise InvalidInputError("toy series length must be even and at least 8")
    half = length // 2
    t = np.arange(length + 1)
    cycle = np.array([0.0, 1.0, 2.0, 1.0])
    x = cycle[t % 4]
    after = t > half
    x[after] = x[half] + ((t[after] - half) % 2)
    return x
