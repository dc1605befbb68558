"""Pattern and pattern-pair probability distributions"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Optional

import numpy as np

from ..errors import InvalidInputError
from ..ordinal.counts import count_range
from ..ordinal.patterns import MAX_ORDER, PatternSequence, decode_pattern, encode_pattern

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PairDistribution:
    """
    Probability table p_ij over pairs of successive ordinal patterns

    Features:
    - Row marginal p_i = Σ_j p_ij
    - Transition probabilities p_j|i = p_ij / p_i with 0/0 := 0
    """
    order: int
    p_pair: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise InvalidInputError(f"order must be between 1 and {MAX_ORDER}, got {self.order}")
        k = factorial(self.order + 1)
        table = np.array(self.p_pair, dtype=float)
        if table.size != k * k:
            raise InvalidInputError(
                f"pair table for order {self.order} needs {k * k} cells, got {table.size}"
            )
        table = table.reshape(k, k)
        if not np.all(np.isfinite(table)) or table.min() < 0:
            raise InvalidInputError("pair probabilities must be finite and nonnegative")
        total = float(table.sum())
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            raise InvalidInputError(f"pair distribution is not normalized (sum {total!r})")
        table.setflags(write=False)
        object.__setattr__(self, "p_pair", table)

    @property
    def n_patterns(self) -> int:
        return self.p_pair.shape[0]

    def marginal(self) -> np.ndarray:
        return self.p_pair.sum(axis=1)

    def conditional(self) -> np.ndarray:
        """Transition matrix p_j|i, zero rows where p_i = 0"""
        marginal = self.marginal()
        out = np.zeros_like(self.p_pair)
        np.divide(self.p_pair, marginal[:, None], out=out, where=marginal[:, None] > 0)
        return out

    def to_dict(self) -> dict:
        return {"order": self.order, "p_pair": self.p_pair.tolist()}


def mix(p: PairDistribution, q: PairDistribution, weight: float) -> PairDistribution:
    """Cell-wise mixture weight * P + (1 - weight) * Q"""
    if p.order != q.order:
        raise InvalidInputError(f"cannot mix distributions of orders {p.order} and {q.order}")
    if not 0.0 <= weight <= 1.0:
        raise InvalidInputError(f"mixture weight must lie in [0, 1], got {weight}")
    if weight == 1.0:
        return p
    if weight == 0.0:
        return q
    return PairDistribution(p.order, weight * p.p_pair + (1.0 - weight) * q.p_pair)


def estimate_pair_distribution(seq: PatternSequence) -> PairDistribution:
    """Relative frequencies of pattern pairs over a whole sequence"""
    if len(seq) < 2:
        raise InvalidInputError("estimating pair probabilities needs at least 2 patterns")
    counts = count_range(seq, seq.start_time, seq.end_time)
    return PairDistribution(seq.order, counts.n_pair / counts.total_pairs)


def estimate_pattern_distribution(seq: PatternSequence) -> np.ndarray:
    """Relative frequencies of single patterns, p_i = n_i / #patterns"""
    counts = np.bincount(seq.codes, minlength=seq.n_patterns)
    return counts / counts.sum()


def iid_pattern_distribution(order: int) -> np.ndarray:
    """Pattern distribution of i.i.d. continuous data (all patterns equally likely)"""
    if not 1 <= order <= MAX_ORDER:
        raise InvalidInputError(f"order must be between 1 and {MAX_ORDER}, got {order}")
    k = factorial(order + 1)
    return np.full(k, 1.0 / k)


@lru_cache(maxsize=None)
def _projection_index(order_high: int) -> np.ndarray:
    """For each order-(d+1) code, the flat (i, j) cell of its order-d pair"""
    k_low = factorial(order_high)
    cells = []
    for code in range(factorial(order_high + 1)):
        perm = decode_pattern(code, order_high)
        # a strictly ordered window realizing the permutation
        window = np.empty(order_high + 1)
        for rank, index in enumerate(perm):
            window[index] = order_high - rank
        first = encode_pattern(window[:-1]).code
        second = encode_pattern(window[1:]).code
        cells.append(first * k_low + second)
    index = np.array(cells, dtype=np.int64)
    index.setflags(write=False)
    return index


def _order_of_table(size: int) -> Optional[int]:
    for order in range(1, MAX_ORDER + 1):
        if factorial(order + 1) == size:
            return order
    return None


def project_pairs(dist_high, order_high: Optional[int] = None) -> PairDistribution:
    """
    Pair distribution of order d from a pattern distribution of order d+1

    An order-(d+1) pattern at time t fixes the two order-d patterns at t-1
    and t, so each pair probability is a sum of order-(d+1) probabilities.
    """
    table = np.asarray(dist_high, dtype=float).ravel()
    inferred = _order_of_table(table.size)
    if inferred is None or inferred < 2:
        raise InvalidInputError(
            f"a table of {table.size} probabilities is not a pattern distribution of order >= 2"
        )
    if order_high is not None and order_high != inferred:
        raise InvalidInputError(
            f"table of {table.size} probabilities does not match order {order_high}"
        )
    if not np.all(np.isfinite(table)) or table.min() < 0:
        raise InvalidInputError("pattern probabilities must be finite and nonnegative")
    total = float(table.sum())
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise InvalidInputError(f"pattern distribution is not normalized (sum {total!r})")

    order = inferred - 1
    k = factorial(order + 1)
    pairs = np.bincount(_projection_index(inferred), weights=table, minlength=k * k)
    logger.debug("Projected %d order-%d probabilities onto %d pairs", table.size, inferred, k * k)
    return PairDistribution(order, pairs / pairs.sum())


def iid_pair_distribution(order: int) -> PairDistribution:
    """Pair distribution of i.i.d. continuous data, by enumeration"""
    return project_pairs(iid_pattern_distribution(order + 1))
