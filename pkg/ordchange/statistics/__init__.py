"""Change-point statistics: CEofOP, likelihood ratio and Brodsky-Darkhovsky"""

from .profile import StatProfile
from .ceofop import (
    admissible_range,
    ceofop_at,
    ceofop_count_form,
    ceofop_profile,
    example_toy_series,
    validate_split_time,
)
from .likelihood import lr_statistic
from .brodsky_darkhovsky import (
    bd_corr,
    bd_corr_profile,
    bd_exp,
    bd_exp_profile,
    correlation_series,
)

__all__ = [
    "StatProfile",
    "admissible_range",
    "bd_corr",
    "bd_corr_profile",
    "bd_exp",
    "bd_exp_profile",
    "ceofop_at",
    "ceofop_count_form",
    "ceofop_profile",
    "correlation_series",
    "example_toy_series",
    "lr_statistic",
    "validate_split_time",
]
