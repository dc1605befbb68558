"""Pattern and pattern-pair occurrence counts over ranges of a sequence"""

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from ..errors import InvalidInputError
from .patterns import PatternSequence


@dataclass(frozen=True)
class PairCounts:
    """
    Counts n_i and n_{i,j} over pairs l in [t_start, t_end - 1]

    n_single[i] = #{l : pi(l) = i}, n_pair[i, j] = #{l : pi(l) = i, pi(l+1) = j}.
    Row sums of n_pair equal n_single by construction.
    """
    order: int
    n_single: np.ndarray = field(repr=False)
    n_pair: np.ndarray = field(repr=False)
    total_pairs: int = 0

    def __post_init__(self):
        k = factorial(self.order + 1)
        single = np.asarray(self.n_single, dtype=np.int64).reshape(k)
        pair = np.asarray(self.n_pair, dtype=np.int64).reshape(k, k)
        if single.min(initial=0) < 0 or pair.min(initial=0) < 0:
            raise InvalidInputError("counts must be nonnegative")
        if not np.array_equal(pair.sum(axis=1), single):
            raise InvalidInputError("pair counts do not sum to single counts")
        if int(single.sum()) != self.total_pairs:
            raise InvalidInputError("single counts do not sum to total_pairs")
        single.setflags(write=False)
        pair.setflags(write=False)
        object.__setattr__(self, "n_single", single)
        object.__setattr__(self, "n_pair", pair)

    def __add__(self, other: "PairCounts") -> "PairCounts":
        if not isinstance(other, PairCounts):
            return NotImplemented
        if other.order != self.order:
            raise InvalidInputError("cannot merge counts of different orders")
        return PairCounts(
            order=self.order,
            n_single=self.n_single + other.n_single,
            n_pair=self.n_pair + other.n_pair,
            total_pairs=self.total_pairs + other.total_pairs,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairCounts):
            return NotImplemented
        return (
            self.order == other.order
            and self.total_pairs == other.total_pairs
            and np.array_equal(self.n_single, other.n_single)
            and np.array_equal(self.n_pair, other.n_pair)
        )

    @classmethod
    def from_pairs(cls, first: np.ndarray, second: np.ndarray, order: int) -> "PairCounts":
        """Count aligned (pi(l), pi(l+1)) code arrays"""
        k = factorial(order + 1)
        pair = np.bincount(first * k + second, minlength=k * k).reshape(k, k)
        return cls(
            order=order,
            n_single=pair.sum(axis=1),
            n_pair=pair,
            total_pairs=int(first.size),
        )


def count_range(seq: PatternSequence, t_start: int, t_end: int) -> PairCounts:
    """Counts of patterns and pattern pairs at l = t_start, ..., t_end - 1"""
    if not seq.start_time <= t_start < t_end <= seq.end_time:
        raise InvalidInputError(
            f"count range [{t_start}, {t_end}] must satisfy "
            f"{seq.start_time} <= t_start < t_end <= {seq.end_time}"
        )
    lo = t_start - seq.start_time
    hi = t_end - seq.start_time
    return PairCounts.from_pairs(seq.codes[lo:hi], seq.codes[lo + 1:hi + 1], seq.order)
