"""Reading series files and writing reports, profiles and tables"""

import json
import logging
import sys
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..errors import SeriesFileError
from ..statistics.profile import StatProfile

logger = logging.getLogger(__name__)

PROFILE_SCHEMA = "ordchange.profile/1"

Column = Union[int, str, None]


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _raw_table(path: str) -> pd.DataFrame:
    try:
        return pd.read_csv(path, header=None, dtype=str, keep_default_na=False,
                           skip_blank_lines=False, skipinitialspace=True)
    except FileNotFoundError:
        raise SeriesFileError("no such file", path) from None
    except pd.errors.EmptyDataError:
        raise SeriesFileError("file is empty", path) from None
    except pd.errors.ParserError as exc:
        raise SeriesFileError(f"malformed CSV: {exc}", path) from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise SeriesFileError(str(exc), path) from exc


def read_series(path: str, column: Column = None, header: Optional[bool] = None) -> np.ndarray:
    """
    Numeric series from a text file

    The file holds one value per line or CSV rows; column selects a CSV
    column by 0-based index or by header name. header=None detects a header
    from the first line; blank lines are skipped. Errors cite the 1-based
    line number of the offending value.
    """
    table = _raw_table(path)
    rows = [[cell.strip() if isinstance(cell, str) else "" for cell in row]
            for row in table.itertuples(index=False, name=None)]
    first = next((i for i, row in enumerate(rows) if any(row)), None)
    if first is None:
        raise SeriesFileError("file holds no values", path)

    if isinstance(column, str) and not column.isdigit():
        names = rows[first]
        if column not in names:
            raise SeriesFileError(f"no column named {column!r}", path, first + 1)
        index = names.index(column)
        header = True
    else:
        index = 0 if column is None else int(column)
        if index >= len(rows[first]):
            raise SeriesFileError(f"no column {index}", path, first + 1)
        if header is None:
            header = not _is_number(rows[first][index])

    values = []
    start = first + 1 if header else first
    for line_index in range(start, len(rows)):
        row = rows[line_index]
        if not any(row):
            continue
        cell = row[index] if index < len(row) else ""
        try:
            value = float(cell)
        except ValueError:
            raise SeriesFileError(f"not a number: {cell!r}", path, line_index + 1) from None
        if not np.isfinite(value):
            raise SeriesFileError(f"not a finite number: {cell!r}", path, line_index + 1)
        values.append(value)
    if not values:
        raise SeriesFileError("file holds no values", path)
    logger.debug("Read %d values from %s", len(values), path)
    return np.array(values, dtype=float)


def read_json(path: str) -> Any:
    """Decoded JSON document, I/O and syntax errors as SeriesFileError"""
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise SeriesFileError("no such file", path) from None
    except json.JSONDecodeError as exc:
        raise SeriesFileError(f"invalid JSON: {exc.msg}", path, exc.lineno) from exc
    except OSError as exc:
        raise SeriesFileError(str(exc), path) from exc


def _open_out(path: Optional[str]):
    if path is None or path == "-":
        return None
    try:
        return open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise SeriesFileError(str(exc), path) from exc


def write_json(data: Dict[str, Any], path: Optional[str] = None) -> None:
    """JSON with sorted keys; stdout when path is None or '-'"""
    text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    handle = _open_out(path)
    if handle is None:
        sys.stdout.write(text)
        return
    with handle:
        handle.write(text)


def _write_frame(frame: pd.DataFrame, path: Optional[str]) -> None:
    handle = _open_out(path)
    if handle is None:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
        return
    with handle:
        frame.to_csv(handle, index=False, lineterminator="\n")


def profile_frame(profile: StatProfile) -> pd.DataFrame:
    return pd.DataFrame({
        "schema": PROFILE_SCHEMA,
        "statistic": profile.statistic,
        "t": profile.t_values.astype(np.int64),
        "s": profile.s_values.astype(float),
    }, columns=["schema", "statistic", "t", "s"])


def write_profile(profile: StatProfile, path: Optional[str] = None) -> None:
    """CSV of (t, S(t)) for external plotting"""
    _write_frame(profile_frame(profile), path)


def write_table(frame: pd.DataFrame, schema: str, path: Optional[str] = None) -> None:
    """CSV with a leading schema column"""
    frame = frame.copy()
    frame.insert(0, "schema", schema)
    _write_frame(frame, path)


def write_series(values: Sequence[float], path: str) -> None:
    """One value per line, readable by read_series"""
    frame = pd.DataFrame({"x": np.asarray(values, dtype=float)})
    handle = _open_out(path)
    if handle is None:
        frame.to_csv(sys.stdout, index=False, header=False, lineterminator="\n")
        return
    with handle:
        frame.to_csv(handle, index=False, header=False, lineterminator="\n")
