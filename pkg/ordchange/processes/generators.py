"""Piecewise stationary autoregressive and noisy logistic processes"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.signal import lfilter

from ..errors import ConfigError

logger = logging.getLogger(__name__)

SIMULATION_SCHEMA = "ordchange.simulation/1"
NORMAL_METHOD = "numpy.random.Generator(PCG64).standard_normal"

LOGISTIC_R_RANGE = (3.57, 4.0)


class ProcessKind(Enum):
    """Families of piecewise stationary test processes"""
    AR = "AR"
    NL = "NL"


@dataclass(frozen=True)
class ProcessSpec:
    """
    A piecewise stationary process on t = 0 .. L

    Features:
    - AR segments carry (phi,), NL segments carry (r, sigma)
    - Segment k covers t*_{k-1}+1 .. t*_k, the first starting at 0 and
      the last ending at L
    """
    kind: ProcessKind
    segment_params: Tuple[Tuple[float, ...], ...]
    change_points: Tuple[int, ...]
    length: int

    def __post_init__(self):
        kind = self.kind
        if isinstance(kind, str):
            try:
                kind = ProcessKind(kind.upper())
            except ValueError:
                raise ConfigError(f"unknown process kind {self.kind!r}") from None
            object.__setattr__(self, "kind", kind)
        params = tuple(tuple(float(v) for v in p) for p in self.segment_params)
        change_points = tuple(int(t) for t in self.change_points)
        object.__setattr__(self, "segment_params", params)
        object.__setattr__(self, "change_points", change_points)
        self._validate()

    def _validate(self) -> None:
        errors = []
        if self.length < 1:
            errors.append(f"length: must be positive, got {self.length}")
        if len(self.segment_params) != len(self.change_points) + 1:
            errors.append(
                f"segment_params: {len(self.change_points)} change-points need "
                f"{len(self.change_points) + 1} segments, got {len(self.segment_params)}"
            )
        points = (0,) + self.change_points + (self.length,)
        if any(b <= a for a, b in zip(points, points[1:])):
            errors.append("change_points: must be strictly increasing inside (0, length)")

        for k, params in enumerate(self.segment_params):
            if self.kind is ProcessKind.AR:
                if len(params) != 1:
                    errors.append(f"segment_params.{k}: AR segments take one coefficient")
                elif not 0.0 <= params[0] < 1.0:
                    errors.append(f"segment_params.{k}: phi must lie in [0, 1), got {params[0]}")
            else:
                if len(params) != 2:
                    errors.append(f"segment_params.{k}: NL segments take (r, sigma)")
                    continue
                r, sigma = params
                if not LOGISTIC_R_RANGE[0] <= r <= LOGISTIC_R_RANGE[1]:
                    errors.append(f"segment_params.{k}: r must lie in [3.57, 4], got {r}")
                if sigma < 0:
                    errors.append(f"segment_params.{k}: sigma must be nonnegative, got {sigma}")
        if errors:
            raise ConfigError("invalid process spec", errors)

    @classmethod
    def ar(cls, phis: Sequence[float], change_points: Sequence[int], length: int) -> "ProcessSpec":
        return cls(ProcessKind.AR, tuple((phi,) for phi in phis), tuple(change_points), length)

    @classmethod
    def nl(cls, rs: Sequence[float], sigmas: Sequence[float], change_points: Sequence[int],
           length: int) -> "ProcessSpec":
        if len(rs) != len(sigmas):
            raise ConfigError("rs and sigmas must have one entry per segment")
        return cls(ProcessKind.NL, tuple(zip(rs, sigmas)), tuple(change_points), length)

    @property
    def n_segments(self) -> int:
        return len(self.segment_params)

    def segment_bounds(self) -> List[Tuple[int, int]]:
        """Inclusive (first, last) time of each segment"""
        starts = [0] + [t + 1 for t in self.change_points]
        ends = list(self.change_points) + [self.length]
        return list(zip(starts, ends))

    def with_change_points(self, change_points: Sequence[int]) -> "ProcessSpec":
        return ProcessSpec(self.kind, self.segment_params, tuple(change_points), self.length)

    def to_dict(self) -> Dict[str, Any]:
        if self.kind is ProcessKind.AR:
            segments = [{"phi": p[0]} for p in self.segment_params]
        else:
            segments = [{"r": p[0], "sigma": p[1]} for p in self.segment_params]
        return {
            "kind": self.kind.value,
            "segments": segments,
            "change_points": list(self.change_points),
            "length": self.length,
        }


@dataclass
class SimulatedSeries:
    """One realization x(0..L) of a process spec"""
    values: np.ndarray = field(repr=False)
    spec: ProcessSpec
    seed: Optional[int] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SIMULATION_SCHEMA,
            "spec": self.spec.to_dict(),
            "seed": self.seed,
            "metadata": dict(self.metadata),
            "values": self.values.tolist(),
        }


def _require_kind(spec: ProcessSpec, kind: ProcessKind) -> None:
    if spec.kind is not kind:
        raise ConfigError(f"expected a {kind.value} process spec, got {spec.kind.value}")


def gen_ar(spec: ProcessSpec, seed=None, innovations: Optional[np.ndarray] = None,
           burn_in: int = 0) -> np.ndarray:
    """
    AR(t) = phi_k AR(t-1) + eps(t) with AR(0) = eps(0)

    With burn_in > 0 the first segment's recursion runs that many extra steps
    before t = 0 and the burn-in values are dropped. innovations, when given,
    replaces the normal draws and must hold L + 1 + burn_in values.
    """
    _require_kind(spec, ProcessKind.AR)
    if burn_in < 0:
        raise ConfigError("burn_in must be nonnegative")
    n = spec.length + 1 + burn_in
    if innovations is None:
        eps = np.random.default_rng(seed).standard_normal(n)
    else:
        eps = np.asarray(innovations, dtype=float)
        if eps.shape != (n,):
            raise ConfigError(f"innovations must hold {n} values, got {eps.size}")

    previous = 0.0
    if burn_in:
        phi = spec.segment_params[0][0]
        warm = lfilter([1.0], [1.0, -phi], eps[:burn_in])
        previous = float(warm[-1])
        eps = eps[burn_in:]

    out = np.empty(spec.length + 1)
    for (first, last), (phi,) in zip(spec.segment_bounds(), spec.segment_params):
        segment, _ = lfilter([1.0], [1.0, -phi], eps[first:last + 1], zi=[phi * previous])
        out[first:last + 1] = segment
        previous = float(segment[-1])
    return out


def gen_nl(spec: ProcessSpec, seed=None, x0: Optional[float] = None,
           noise: Optional[np.ndarray] = None, return_latent: bool = False):
    """
    NL(t) = NL0(t) + sigma_k eps(t) with NL0(t) = r_k NL0(t-1) (1 - NL0(t-1))

    NL0(0) is uniform on [0, 1] unless x0 is given. The latent orbit runs on
    across change-points; only r and sigma switch.
    """
    _require_kind(spec, ProcessKind.NL)
    rng = np.random.default_rng(seed)
    if x0 is None:
        x0 = float(rng.uniform())
    elif not 0.0 <= x0 <= 1.0:
        raise ConfigError(f"x0 must lie in [0, 1], got {x0}")
    n = spec.length + 1
    if noise is None:
        eps = rng.standard_normal(n)
    else:
        eps = np.asarray(noise, dtype=float)
        if eps.shape != (n,):
            raise ConfigError(f"noise must hold {n} values, got {eps.size}")

    latent = np.empty(n)
    sigma_t = np.empty(n)
    state = x0
    latent[0] = state
    for (first, last), (r, sigma) in zip(spec.segment_bounds(), spec.segment_params):
        sigma_t[first:last + 1] = sigma
        for t in range(max(first, 1), last + 1):
            state = r * state * (1.0 - state)
            latent[t] = state

    observed = latent + sigma_t * eps
    if return_latent:
        return observed, latent
    return observed


def simulate(spec: ProcessSpec, seed=None, burn_in: int = 0) -> SimulatedSeries:
    """Generate one realization and record how it was produced"""
    if spec.kind is ProcessKind.AR:
        values = gen_ar(spec, seed, burn_in=burn_in)
    else:
        if burn_in:
            raise ConfigError("burn_in applies to AR processes only")
        values = gen_nl(spec, seed)
    logger.debug("Simulated %s process of length %d", spec.kind.value, spec.length)
    return SimulatedSeries(
        values=values,
        spec=spec,
        seed=int(seed) if isinstance(seed, (int, np.integer)) else None,
        metadata={"normal_method": NORMAL_METHOD, "burn_in": burn_in},
    )
