"""File I/O helpers for the command line and the service"""

from .series_io import (
    PROFILE_SCHEMA,
    profile_frame,
    read_json,
    read_series,
    write_json,
    write_profile,
    write_series,
    write_table,
)

__all__ = [
    "PROFILE_SCHEMA",
    "profile_frame",
    "read_json",
    "read_series",
    "write_json",
    "write_profile",
    "write_series",
    "write_table",
]
