"""Random placement of change-points around fixed centers"""

from typing import List, Optional, Sequence

import numpy as np

from ..errors import ConfigError


def random_change_points(centers: Sequence[float], half_width: int, rng: np.random.Generator,
                         length: Optional[int] = None) -> List[int]:
    """Each change-point uniform on {center_k - W, ..., center_k + W}"""
    if half_width < 0:
        raise ConfigError(f"half-width must be nonnegative, got {half_width}")
    points = [int(round(c)) for c in centers]
    errors = []
    for k, center in enumerate(points):
        if center - half_width <= 0:
            errors.append(f"centers.{k}: window starts at or before 0")
        if length is not None and center + half_width >= length:
            errors.append(f"centers.{k}: window reaches the series end {length}")
        if k and points[k - 1] + half_width >= center - half_width:
            errors.append(f"centers.{k}: window overlaps the previous one")
    if errors:
        raise ConfigError("invalid change-point windows", errors)
    return [int(rng.integers(c - half_width, c + half_width + 1)) for c in points]
