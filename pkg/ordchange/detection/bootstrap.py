"""Block bootstrap thresholds for change-point statistics"""

import logging
from concurrent.futures import ThreadPoolExecutor
from math import floor
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..errors import ConfigError

logger = logging.getLogger(__name__)

# slack for floor(5 / alpha) when alpha is not exactly representable
_FLOOR_SLACK = 1e-9


def n_bootstrap(alpha: float, override: Optional[int] = None) -> int:
    """Number of bootstrap replicates, floor(5 / alpha) unless overridden"""
    check_alpha(alpha)
    if override is not None:
        if override < 1:
            raise ConfigError(f"n_boot_override must be positive, got {override}")
        return int(override)
    return max(1, int(floor(5.0 / alpha + _FLOOR_SLACK)))


def threshold_rank(alpha: float, n_boot: int) -> int:
    """1-based rank of the threshold among replicate maxima sorted decreasingly"""
    rank = int(floor(alpha * n_boot + _FLOOR_SLACK))
    return min(max(rank, 1), n_boot)


def check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise ConfigError(f"alpha must lie strictly between 0 and 1, got {alpha}")


def block_shuffle(values: np.ndarray, block_length: int, rng: np.random.Generator) -> np.ndarray:
    """
    Cut values into consecutive blocks of block_length and permute the blocks

    A final shorter block is kept and permuted like the others.
    """
    values = np.asarray(values)
    n = values.size
    if block_length < 1:
        raise ValueError("block_length must be positive")
    full = n // block_length
    remainder = n - full * block_length
    n_blocks = full + (1 if remainder else 0)
    order = rng.permutation(n_blocks)
    offsets = np.arange(block_length)

    if not remainder:
        return values[(order[:, None] * block_length + offsets).ravel()]

    position = int(np.flatnonzero(order == full)[0])
    before = order[:position]
    after = order[position + 1:]
    index = np.concatenate((
        (before[:, None] * block_length + offsets).ravel(),
        np.arange(full * block_length, n),
        (after[:, None] * block_length + offsets).ravel(),
    ))
    return values[index]


def replicate_rng(master_seed: int, segment: Tuple[int, int], replicate: int) -> np.random.Generator:
    """Independent stream for one replicate, derived by counter from the master seed"""
    seed_seq = np.random.SeedSequence(
        entropy=int(master_seed),
        spawn_key=(int(segment[0]), int(segment[1]), int(replicate)),
    )
    return np.random.default_rng(seed_seq)


def bootstrap_maxima(
    surrogate_maximum: Callable[[np.random.Generator], float],
    n_boot: int,
    master_seed: int,
    segment: Tuple[int, int],
    threads: int = 1,
) -> np.ndarray:
    """
    Maximum statistic value of each surrogate, in replicate order

    surrogate_maximum builds one surrogate from the generator it is given and
    returns its profile maximum. Replicates may run on a thread pool; the
    result does not depend on the number of threads.
    """
    def run(replicate: int) -> float:
        return surrogate_maximum(replicate_rng(master_seed, segment, replicate))

    if threads <= 1 or n_boot == 1:
        maxima = [run(j) for j in range(n_boot)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            maxima = list(executor.map(run, range(n_boot)))
    return np.array(maxima, dtype=float)


def threshold_decision(statistic: float, maxima: Sequence[float], alpha: float) -> Tuple[float, int, bool]:
    """
    Threshold h and decision for an observed statistic maximum

    h is the k-th largest replicate maximum with k = floor(alpha * N_boot)
    clamped to [1, N_boot]; a change is detected iff statistic >= h.
    """
    ordered = np.sort(np.asarray(maxima, dtype=float))[::-1]
    if ordered.size == 0:
        raise ValueError("no bootstrap maxima to threshold against")
    rank = threshold_rank(alpha, ordered.size)
    threshold = float(ordered[rank - 1])
    return threshold, rank, bool(statistic >= threshold)
