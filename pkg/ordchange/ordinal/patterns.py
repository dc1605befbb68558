"""Ordinal pattern encoding and pattern-sequence extraction

Patterns of order d describe the order relations among d+1 successive values.
A window (x_0, ..., x_d) has the permutation (r_0, ..., r_d) with
x_{r_0} >= ... >= x_{r_d}, equal values ordered by decreasing index.

Codes are the lexicographic rank of the reversed permutation (r_d, ..., r_0),
so the monotone increasing window is code 0 for every order, and for d = 1
"up" is 0 and "down" is 1. The assignment for d >= 2 is one valid choice
among many; any consumer that needs interoperable codes must map them.

Ties are resolved exactly (no epsilon); dither the input beforehand if that
is not what you want.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence, Tuple

import numpy as np

from ..errors import InvalidInputError

MAX_ORDER = 5


def n_patterns(order: int) -> int:
    """Number of distinct ordinal patterns of an order, (d+1)!"""
    _check_order(order)
    return factorial(order + 1)


def _check_order(order: int) -> None:
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise InvalidInputError(f"order must be an integer, got {order!r}")
    if order < 1 or order > MAX_ORDER:
        raise InvalidInputError(f"order must be between 1 and {MAX_ORDER}, got {order}")


@dataclass(frozen=True)
class OrdinalPattern:
    """A single ordinal pattern of a given order"""
    order: int
    code: int

    def __post_init__(self):
        _check_order(self.order)
        if not 0 <= self.code < factorial(self.order + 1):
            raise InvalidInputError(
                f"code {self.code} out of range for order {self.order}"
            )

    @property
    def permutation(self) -> Tuple[int, ...]:
        """The permutation (r_0, ..., r_d)"""
        return decode_pattern(self.code, self.order)


def _lehmer_rank(perm: Sequence[int]) -> int:
    n = len(perm)
    rank = 0
    for k in range(n):
        smaller_after = sum(1 for m in range(k + 1, n) if perm[m] < perm[k])
        rank += smaller_after * factorial(n - 1 - k)
    return rank


def _lehmer_unrank(rank: int, n: int) -> Tuple[int, ...]:
    remaining = list(range(n))
    perm = []
    for k in range(n):
        base = factorial(n - 1 - k)
        digit, rank = divmod(rank, base)
        perm.append(remaining.pop(digit))
    return tuple(perm)


def permutation_of(window: Sequence[float]) -> Tuple[int, ...]:
    """Permutation (r_0, ..., r_d) of a window, by sorting"""
    return tuple(sorted(range(len(window)), key=lambda i: (-window[i], -i)))


def encode_pattern(window: Sequence[float]) -> OrdinalPattern:
    """Encode one window of d+1 values as an ordinal pattern of order d"""
    values = np.asarray(window, dtype=float)
    if values.ndim != 1 or values.size < 2:
        raise InvalidInputError("window must be a vector of at least 2 values")
    if not np.all(np.isfinite(values)):
        raise InvalidInputError("window contains non-finite values")

    order = values.size - 1
    _check_order(order)
    perm = permutation_of(values.tolist())
    return OrdinalPattern(order=order, code=_lehmer_rank(perm[::-1]))


def decode_pattern(code: int, order: int) -> Tuple[int, ...]:
    """Permutation (r_0, ..., r_d) of a pattern code"""
    _check_order(order)
    if not 0 <= code < factorial(order + 1):
        raise InvalidInputError(f"code {code} out of range for order {order}")
    return _lehmer_unrank(int(code), order + 1)[::-1]


@lru_cache(maxsize=None)
def _pattern_table(order: int) -> np.ndarray:
    table = np.array(
        [decode_pattern(code, order) for code in range(factorial(order + 1))],
        dtype=np.int64,
    )
    table.setflags(write=False)
    return table


def pattern_table(order: int) -> np.ndarray:
    """All permutations of an order, one row per code"""
    _check_order(order)
    return _pattern_table(int(order))


@dataclass(frozen=True)
class PatternSequence:
    """
    Sequence of ordinal patterns pi(t) for t = start_time .. end_time

    A sequence extracted from x(0..L) starts at d and ends at L; L is called
    its length although it holds L - d + 1 codes.
    """
    order: int
    start_time: int
    codes: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_order(self.order)
        codes = np.ascontiguousarray(self.codes, dtype=np.int64)
        if codes.ndim != 1 or codes.size == 0:
            raise InvalidInputError("pattern sequence must hold at least one code")
        if self.start_time < 0:
            raise InvalidInputError("start_time must be nonnegative")
        if codes.min() < 0 or codes.max() >= factorial(self.order + 1):
            raise InvalidInputError(f"codes out of range for order {self.order}")
        codes.setflags(write=False)
        object.__setattr__(self, "codes", codes)

    @property
    def end_time(self) -> int:
        return self.start_time + self.codes.size - 1

    @property
    def length(self) -> int:
        """L in the sequence-of-length-L convention"""
        return self.end_time

    @property
    def n_patterns(self) -> int:
        return factorial(self.order + 1)

    def __len__(self) -> int:
        return int(self.codes.size)

    def code_at(self, t: int) -> int:
        if not self.start_time <= t <= self.end_time:
            raise InvalidInputError(f"time {t} outside [{self.start_time}, {self.end_time}]")
        return int(self.codes[t - self.start_time])

    def window(self, t_start: int, t_end: int) -> np.ndarray:
        """Codes pi(t_start .. t_end) inclusive"""
        if not self.start_time <= t_start <= t_end <= self.end_time:
            raise InvalidInputError(
                f"range [{t_start}, {t_end}] outside [{self.start_time}, {self.end_time}]"
            )
        return self.codes[t_start - self.start_time:t_end - self.start_time + 1]

    def sub_sequence(self, t_start: int, t_end: int) -> "PatternSequence":
        """Sub-sequence over [t_start, t_end] keeping absolute times"""
        return PatternSequence(self.order, t_start, self.window(t_start, t_end))

    def with_codes(self, codes: np.ndarray) -> "PatternSequence":
        """Same order and start time, different codes (bootstrap surrogates)"""
        return PatternSequence(self.order, self.start_time, codes)


def _validate_series(x, order: int) -> np.ndarray:
    _check_order(order)
    values = np.asarray(x, dtype=float)
    if values.ndim != 1:
        raise InvalidInputError("time series must be one-dimensional")
    if values.size < order + 1:
        raise InvalidInputError(
            f"time series of {values.size} values is shorter than one window of order {order}"
        )
    if not np.all(np.isfinite(values)):
        raise InvalidInputError("time series contains non-finite values")
    return values


@lru_cache(maxsize=None)
def _factorial_weights(order: int) -> np.ndarray:
    # weight for ascending position rho is (d - rho)!
    return np.array([factorial(order - rho) for rho in range(order + 1)], dtype=np.int64)


def extract_sequence(x, order: int) -> PatternSequence:
    """
    Extract the pattern sequence pi(d), ..., pi(L) of a series x(0..L)

    Each code is sum_i inv_i * (d - rho_i)! where rho_i is the ascending rank
    of x_i in its window (ties by index) and inv_i counts earlier window
    entries strictly greater than x_i. This needs only pairwise comparisons,
    done column-wise over all windows at once.
    """
    values = _validate_series(x, order)
    n = values.size - order
    cols = [values[i:i + n] for i in range(order + 1)]
    weights = _factorial_weights(order)

    codes = np.zeros(n, dtype=np.int64)
    for i in range(order + 1):
        rho = np.zeros(n, dtype=np.int64)
        inv = np.zeros(n, dtype=np.int64)
        for j in range(order + 1):
            if j < i:
                rho += cols[j] <= cols[i]
                inv += cols[j] > cols[i]
            elif j > i:
                rho += cols[j] < cols[i]
        codes += inv * weights[rho]

    return PatternSequence(order=order, start_time=order, codes=codes)


def extract_sequence_naive(x, order: int) -> PatternSequence:
    """Reference extraction: sort every window independently"""
    values = _validate_series(x, order)
    codes = [
        encode_pattern(values[t - order:t + 1]).code
        for t in range(order, values.size)
    ]
    return PatternSequence(order=order, start_time=order, codes=np.array(codes, dtype=np.int64))
