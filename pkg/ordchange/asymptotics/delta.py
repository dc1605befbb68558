"""
Asymptotic value of CEofOP for two glued stationary processes

A sequence made of a fraction gamma of pattern pairs from P followed by
1 - gamma from Q, split at fraction theta, has (1/L) CEofOP -> Delta(theta).
The maximum over theta sits at theta = gamma.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..entropy.conditional import entropy_h
from ..entropy.distributions import PairDistribution, mix
from ..errors import InvalidInputError

DELTA_SCHEMA = "ordchange.delta/1"


@dataclass(frozen=True)
class DeltaQuery:
    """Arguments of Delta^d_{gamma, theta}(P, Q)"""
    gamma: float
    theta: float
    p: PairDistribution
    q: PairDistribution

    def __post_init__(self):
        if self.p.order != self.q.order:
            raise InvalidInputError(
                f"P and Q must have the same order, got {self.p.order} and {self.q.order}"
            )
        for name in ("gamma", "theta"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise InvalidInputError(f"{name} must lie strictly between 0 and 1, got {value}")

    @property
    def order(self) -> int:
        return self.p.order


def _split_before_change(gamma: float, theta: float, p: PairDistribution, q: PairDistribution) -> float:
    # theta <= gamma: the left part is pure P
    right = mix(p, q, (gamma - theta) / (1.0 - theta))
    return entropy_h(mix(p, q, gamma)) - theta * entropy_h(p) - (1.0 - theta) * entropy_h(right)


def _split_after_change(gamma: float, theta: float, p: PairDistribution, q: PairDistribution) -> float:
    # theta >= gamma: the right part is pure Q
    left = mix(p, q, gamma / theta)
    return entropy_h(mix(p, q, gamma)) - theta * entropy_h(left) - (1.0 - theta) * entropy_h(q)


def delta(query: DeltaQuery) -> float:
    """Delta^d_{gamma, theta}(P, Q), both branches of the split"""
    if query.theta < query.gamma:
        return _split_before_change(query.gamma, query.theta, query.p, query.q)
    return _split_after_change(query.gamma, query.theta, query.p, query.q)


def delta_max(p: PairDistribution, q: PairDistribution, gamma: float) -> float:
    """Delta at theta = gamma, the maximum over theta"""
    DeltaQuery(gamma, gamma, p, q)  # validation only
    return entropy_h(mix(p, q, gamma)) - gamma * entropy_h(p) - (1.0 - gamma) * entropy_h(q)


def default_theta_grid(points: int = 99) -> np.ndarray:
    """theta = 1/(n+1), ..., n/(n+1)"""
    return np.arange(1, points + 1) / (points + 1.0)


def delta_grid(p: PairDistribution, q: PairDistribution, gamma: float,
               thetas: Optional[Sequence[float]] = None) -> np.ndarray:
    """Delta for each theta of a grid"""
    thetas = default_theta_grid() if thetas is None else thetas
    return np.array([delta(DeltaQuery(gamma, float(theta), p, q)) for theta in thetas])
