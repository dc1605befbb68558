"""
Brodsky-Darkhovsky statistics (a generalized Kolmogorov-Smirnov test)

A vector x(1..L) is split at t and the mean before is compared to the mean
after, weighted by (t (L - t) / L^2)^delta. BD^exp looks for changes in the
mean of x itself, BD^corr for changes in the mean of y(t) = x(t) x(t+1).
"""

import numpy as np

from ..errors import InvalidInputError
from .profile import StatProfile


def _as_vector(x) -> np.ndarray:
    values = np.asarray(x, dtype=float)
    if values.ndim != 1:
        raise InvalidInputError("series must be one-dimensional")
    if not np.all(np.isfinite(values)):
        raise InvalidInputError("series contains non-finite values")
    return values


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta <= 1.0:
        raise InvalidInputError(f"delta must lie in [0, 1], got {delta}")


def bd_exp(x, t: int, delta: float = 0.0) -> float:
    """BD^exp of x(1..L) at split t, 1 <= t < L"""
    _check_delta(delta)
    values = _as_vector(x)
    length = values.size
    if not 1 <= t < length:
        raise InvalidInputError(f"split time {t} outside 1 <= t < {length}")
    weight = (t * (length - t) / length ** 2) ** delta
    return weight * abs(values[:t].mean() - values[t:].mean())


def correlation_series(x) -> np.ndarray:
    """y(t) = x(t) x(t+1), one value shorter than x"""
    values = _as_vector(x)
    return values[:-1] * values[1:]


def bd_corr(x, t: int, delta: float = 0.0) -> float:
    """BD^exp applied to the lag-one products of x"""
    return bd_exp(correlation_series(x), t, delta)


def bd_exp_profile(x, delta: float = 0.0, time_offset: int = 0,
                   statistic: str = "bd_exp") -> StatProfile:
    """BD^exp for every split 1 <= t < L; reported times are t + time_offset"""
    _check_delta(delta)
    values = _as_vector(x)
    length = values.size
    if length < 2:
        return StatProfile.empty(statistic)

    t = np.arange(1, length, dtype=np.int64)
    cumulative = np.cumsum(values)
    left = cumulative[t - 1] / t
    right = (cumulative[-1] - cumulative[t - 1]) / (length - t)
    weight = (t * (length - t) / float(length) ** 2) ** delta
    return StatProfile(statistic, t + time_offset, weight * np.abs(left - right))


def bd_corr_profile(x, delta: float = 0.0, time_offset: int = 0) -> StatProfile:
    """BD^corr for every split of the product series"""
    return bd_exp_profile(correlation_series(x), delta, time_offset, statistic="bd_corr")
