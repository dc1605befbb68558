"""Declarative config and request models for ordchange"""
from typing import Any, List, Literal, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..asymptotics.montecarlo import mc_pair_distribution
from ..bench.plans import BenchMode, BenchmarkPlan
from ..config import DETECTION_CONFIG
from ..detection.engine import MAX_SEED, DetectionConfig, StatisticKind
from ..entropy.distributions import (
    PairDistribution,
    estimate_pair_distribution,
    iid_pair_distribution,
    project_pairs,
)
from ..errors import ConfigError
from ..ordinal.patterns import MAX_ORDER, extract_sequence
from ..processes.generators import ProcessKind, ProcessSpec

StatisticName = Literal["ceofop", "bd_exp", "bd_corr"]

ModelT = TypeVar("ModelT", bound=BaseModel)


def parse_config(model: Type[ModelT], data: Any, source: str = "config") -> ModelT:
    """Validate a decoded JSON document, raising ConfigError with field paths"""
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise ConfigError.from_validation_error(exc, source) from exc


def _statistic_name(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return StatisticKind(value).value
        except ValueError:
            return value
    return value


class SegmentModel(BaseModel):
    """Parameters of one stationary segment: phi for AR, r and sigma for NL"""
    model_config = ConfigDict(extra="forbid")

    phi: Optional[float] = None
    r: Optional[float] = None
    sigma: Optional[float] = None


class ProcessSpecModel(BaseModel):
    """Piecewise stationary process, the same layout ProcessSpec.to_dict writes"""
    model_config = ConfigDict(extra="forbid")

    kind: Literal["AR", "NL"]
    segments: List[SegmentModel] = Field(..., min_length=1)
    change_points: List[int] = Field(default_factory=list)
    length: int = Field(..., gt=0)

    @field_validator("kind", mode="before")
    @classmethod
    def upper_kind(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value

    @model_validator(mode="after")
    def check_segments(self) -> "ProcessSpecModel":
        for k, segment in enumerate(self.segments):
            if self.kind == "AR" and (segment.phi is None or segment.r is not None or segment.sigma is not None):
                raise ValueError(f"segments.{k}: AR segments take phi only")
            if self.kind == "NL" and (segment.r is None or segment.sigma is None or segment.phi is not None):
                raise ValueError(f"segments.{k}: NL segments take r and sigma")
        return self

    def to_spec(self) -> ProcessSpec:
        if self.kind == "AR":
            params = tuple((s.phi,) for s in self.segments)
        else:
            params = tuple((s.r, s.sigma) for s in self.segments)
        return ProcessSpec(ProcessKind(self.kind), params, tuple(self.change_points), self.length)


class DetectionConfigModel(BaseModel):
    """Detection settings as read from a config file"""
    model_config = ConfigDict(extra="forbid")

    order: int = Field(DETECTION_CONFIG["order"], ge=1, le=MAX_ORDER)
    alpha: float = Field(DETECTION_CONFIG["alpha"], gt=0.0, lt=1.0)
    t_min: Optional[int] = Field(None, ge=1)
    n_boot_override: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = Field(None, ge=0, lt=MAX_SEED)
    threads: int = Field(1, ge=1)
    statistic: StatisticName = "ceofop"
    delta: float = Field(0.0, ge=0.0, le=1.0)

    @field_validator("statistic", mode="before")
    @classmethod
    def normalize_statistic(cls, value: Any) -> Any:
        return _statistic_name(value)

    def to_config(self, seed: Optional[int] = None) -> DetectionConfig:
        seed = self.seed if seed is None else seed
        return DetectionConfig(
            order=self.order,
            alpha=self.alpha,
            t_min=self.t_min,
            n_boot_override=self.n_boot_override,
            master_seed=0 if seed is None else seed,
            threads=self.threads,
            statistic=StatisticKind(self.statistic),
            delta=self.delta,
        )


class BenchmarkPlanModel(BaseModel):
    """A custom benchmark plan"""
    model_config = ConfigDict(extra="forbid")

    name: str = Field(..., min_length=1)
    description: str = ""
    mode: Literal["single", "multi", "sweep"]
    kind: Literal["AR", "NL"]
    segments: List[SegmentModel] = Field(..., min_length=2)
    centers: List[float] = Field(..., min_length=1)
    length_windows: List[int] = Field(..., min_length=1)
    statistics: List[StatisticName] = Field(default_factory=lambda: ["ceofop", "bd_exp", "bd_corr"])
    window: Optional[int] = Field(None, ge=1)
    order: int = Field(3, ge=1, le=MAX_ORDER)
    alpha: float = Field(0.05, gt=0.0, lt=0.5)
    delta: float = Field(0.0, ge=0.0, le=1.0)
    max_error: Optional[int] = Field(None, ge=0)
    trials: Optional[int] = Field(None, ge=1)

    @field_validator("kind", mode="before")
    @classmethod
    def upper_kind(cls, value: Any) -> Any:
        return value.upper() if isinstance(value, str) else value

    @field_validator("statistics", mode="before")
    @classmethod
    def normalize_statistics(cls, value: Any) -> Any:
        if isinstance(value, list):
            return [_statistic_name(v) for v in value]
        return value

    def to_plan(self) -> BenchmarkPlan:
        if self.kind == "AR":
            params = tuple((s.phi,) for s in self.segments)
        else:
            params = tuple((s.r, s.sigma) for s in self.segments)
        plan = BenchmarkPlan(
            name=self.name,
            description=self.description,
            mode=BenchMode(self.mode),
            kind=ProcessKind(self.kind),
            segment_params=params,
            centers=tuple(self.centers),
            length_windows=tuple(self.length_windows),
            statistics=tuple(StatisticKind(s) for s in self.statistics),
            window=self.window,
            order=self.order,
            alpha=self.alpha,
            delta=self.delta,
            max_error=self.max_error,
            default_trials=self.trials,
        )
        # segment parameters are checked once, on a spec at the smallest length
        length = min(plan.lengths)
        plan.spec(plan.center_times(length), length)
        return plan


class PairSourceModel(BaseModel):
    """
    Where a pair distribution comes from

    Exactly one of:
    - iid: the i.i.d. distribution by enumeration
    - table: an explicit (d+1)! x (d+1)! probability table
    - patterns: an order-(d+1) pattern distribution, projected onto pairs
    - process: a single-segment process estimated by Monte Carlo over its length
    - values: a series whose empirical pair frequencies are used
    """
    model_config = ConfigDict(extra="forbid")

    iid: bool = False
    table: Optional[List[List[float]]] = None
    patterns: Optional[List[float]] = None
    process: Optional[ProcessSpecModel] = None
    values: Optional[List[float]] = None

    @model_validator(mode="after")
    def exactly_one(self) -> "PairSourceModel":
        given = [self.iid, self.table is not None, self.patterns is not None,
                 self.process is not None, self.values is not None]
        if sum(given) != 1:
            raise ValueError("give exactly one of iid, table, patterns, process, values")
        if self.process is not None and len(self.process.segments) != 1:
            raise ValueError("process: Monte-Carlo sources must have a single segment")
        return self

    def resolve(self, order: int, seed: Optional[int] = None) -> PairDistribution:
        if self.iid:
            return iid_pair_distribution(order)
        if self.table is not None:
            return PairDistribution(order, self.table)
        if self.patterns is not None:
            return project_pairs(self.patterns, order + 1)
        if self.values is not None:
            return estimate_pair_distribution(extract_sequence(self.values, order))
        return mc_pair_distribution(self.process.to_spec(), order, self.process.length, seed)


class DetectRequest(BaseModel):
    """Request to detect change-points in a series"""
    values: List[float] = Field(..., min_length=1)
    order: int = Field(DETECTION_CONFIG["order"], ge=1, le=MAX_ORDER)
    alpha: float = Field(DETECTION_CONFIG["alpha"], gt=0.0, lt=1.0)
    seed: int = Field(0, ge=0, lt=MAX_SEED)
    multi: bool = True
    statistic: StatisticName = "ceofop"
    delta: float = Field(0.0, ge=0.0, le=1.0)

    @field_validator("statistic", mode="before")
    @classmethod
    def normalize_statistic(cls, value: Any) -> Any:
        return _statistic_name(value)


class ProfileRequest(BaseModel):
    """Request for a full statistic profile"""
    values: List[float] = Field(..., min_length=1)
    order: int = Field(DETECTION_CONFIG["order"], ge=1, le=MAX_ORDER)
    stat: StatisticName = "ceofop"
    delta: float = Field(0.0, ge=0.0, le=1.0)

    @field_validator("stat", mode="before")
    @classmethod
    def normalize_stat(cls, value: Any) -> Any:
        return _statistic_name(value)


class SimulateRequest(BaseModel):
    """Request to simulate one realization of a process"""
    spec: ProcessSpecModel
    seed: int = Field(..., ge=0, lt=MAX_SEED)
    burn_in: int = Field(0, ge=0)


class DeltaRequest(BaseModel):
    """Request for the asymptotic Delta grid of two pair distributions"""
    p: PairSourceModel
    q: PairSourceModel
    order: int = Field(2, ge=1, le=MAX_ORDER)
    gamma: float = Field(0.5, gt=0.0, lt=1.0)
    thetas: Optional[List[float]] = None
    seed: int = Field(0, ge=0, lt=MAX_SEED)

    @field_validator("thetas")
    @classmethod
    def check_thetas(cls, value: Optional[List[float]]) -> Optional[List[float]]:
        if value is not None and any(not 0.0 < t < 1.0 for t in value):
            raise ValueError("thetas must lie strictly between 0 and 1")
        return value

