"""Statistic profiles S(t) over candidate change-point times"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from ..errors import InvalidInputError


@dataclass(frozen=True)
class StatProfile:
    """
    Values of a change-point statistic at consecutive candidate times

    Features:
    - Strictly increasing integer times
    - Argmax with ties broken toward the smallest time
    - Empty profile when no time is admissible (not an error)
    """
    statistic: str
    t_values: np.ndarray = field(repr=False)
    s_values: np.ndarray = field(repr=False)
    argmax_t: Optional[int] = None
    max_value: Optional[float] = None

    def __post_init__(self):
        t = np.ascontiguousarray(self.t_values, dtype=np.int64)
        s = np.ascontiguousarray(self.s_values, dtype=float)
        if t.ndim != 1 or s.shape != t.shape:
            raise InvalidInputError("profile times and values must be vectors of equal length")
        if t.size > 1 and np.any(np.diff(t) <= 0):
            raise InvalidInputError("profile times must be strictly increasing")
        t.setflags(write=False)
        s.setflags(write=False)
        object.__setattr__(self, "t_values", t)
        object.__setattr__(self, "s_values", s)
        if t.size:
            best = int(np.argmax(s))
            object.__setattr__(self, "argmax_t", int(t[best]))
            object.__setattr__(self, "max_value", float(s[best]))
        else:
            object.__setattr__(self, "argmax_t", None)
            object.__setattr__(self, "max_value", None)

    @classmethod
    def empty(cls, statistic: str) -> "StatProfile":
        return cls(statistic, np.empty(0, dtype=np.int64), np.empty(0))

    @property
    def is_empty(self) -> bool:
        return self.t_values.size == 0

    def __len__(self) -> int:
        return int(self.t_values.size)

    def value_at(self, t: int) -> float:
        index = int(np.searchsorted(self.t_values, t))
        if index >= self.t_values.size or self.t_values[index] != t:
            raise InvalidInputError(f"time {t} is not in the profile")
        return float(self.s_values[index])

    def restrict(self, t_lo: int, t_hi: int) -> "StatProfile":
        """Sub-profile over t_lo <= t <= t_hi"""
        mask = (self.t_values >= t_lo) & (self.t_values <= t_hi)
        return StatProfile(self.statistic, self.t_values[mask], self.s_values[mask])

    def to_dict(self, include_values: bool = False) -> Dict[str, Any]:
        data = {
            "statistic": self.statistic,
            "t_first": int(self.t_values[0]) if self.t_values.size else None,
            "t_last": int(self.t_values[-1]) if self.t_values.size else None,
            "argmax_t": self.argmax_t,
            "max_value": self.max_value,
        }
        if include_values:
            data["t"] = self.t_values.tolist()
            data["s"] = self.s_values.tolist()
        return data
