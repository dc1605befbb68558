"""Monte-Carlo pattern and pair distributions of single-segment processes"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np
import pandas as pd

from ..entropy.distributions import (
    PairDistribution,
    estimate_pair_distribution,
    estimate_pattern_distribution,
)
from ..errors import ConfigError
from ..ordinal.patterns import extract_sequence
from ..processes.generators import ProcessKind, ProcessSpec, gen_ar, gen_nl
from .delta import delta_max

logger = logging.getLogger(__name__)

RECOMMENDED_MC_LENGTH = 10 ** 6


def _single_segment_series(spec: ProcessSpec, length: int, seed) -> np.ndarray:
    if spec.n_segments != 1:
        raise ConfigError(f"Monte-Carlo estimation needs a single-segment spec, got {spec.n_segments}")
    if length < 2:
        raise ConfigError("Monte-Carlo length must be at least 2")
    if length < RECOMMENDED_MC_LENGTH:
        logger.debug("Monte-Carlo length %d is below the recommended %d", length, RECOMMENDED_MC_LENGTH)
    spec = ProcessSpec(spec.kind, spec.segment_params, (), length)
    if spec.kind is ProcessKind.AR:
        return gen_ar(spec, seed)
    return gen_nl(spec, seed)


def mc_pair_distribution(spec: ProcessSpec, order: int, length: int, seed) -> PairDistribution:
    """Pair distribution of order d estimated from one long realization"""
    values = _single_segment_series(spec, length, seed)
    return estimate_pair_distribution(extract_sequence(values, order))


def mc_pattern_distribution(spec: ProcessSpec, order: int, length: int, seed) -> np.ndarray:
    """Pattern distribution of order d estimated from one long realization"""
    values = _single_segment_series(spec, length, seed)
    return estimate_pattern_distribution(extract_sequence(values, order))


def delta_table(order: int, phis: Sequence[float], length: int, seed: int,
                gamma: float = 0.5, threads: int = 1) -> pd.DataFrame:
    """
    100 * Delta at theta = gamma for every pair of AR coefficients

    Rows are the coefficient after the change, columns the one before. Each
    coefficient's pair distribution is estimated once from its own seed stream.
    """
    seeds = np.random.SeedSequence(seed).spawn(len(phis))

    def estimate(index: int) -> PairDistribution:
        spec = ProcessSpec.ar([phis[index]], [], length)
        return mc_pair_distribution(spec, order, length, seeds[index])

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        dists = list(executor.map(estimate, range(len(phis))))

    values = [
        [100.0 * delta_max(dists[col], dists[row], gamma) if row != col else 0.0
         for col in range(len(phis))]
        for row in range(len(phis))
    ]
    labels = [f"{phi:.2f}" for phi in phis]
    table = pd.DataFrame(values, index=labels, columns=labels)
    table.index.name = "phi_after"
    table.columns.name = "phi_before"
    return table
