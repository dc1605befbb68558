"""Exception types raised across ordchange"""

from typing import List, Optional


class OrdchangeError(Exception):
    """Base class for all ordchange errors"""


class InvalidInputError(OrdchangeError, ValueError):
    """Input data or arguments violate an operation's preconditions"""


class SeriesTooShortError(InvalidInputError):
    """Series is below the 2(d+1)!(d+1) length bound required for detection"""

    def __init__(self, length: int, order: int, minimum: int):
        self.length = length
        self.order = order
        self.minimum = minimum
        super().__init__(
            f"series of length {length} is too short for order {order}: "
            f"detection needs more than 2(d+1)!(d+1) = {minimum - 1} values"
        )


class ConfigError(OrdchangeError, ValueError):
    """Invalid configuration, process spec or benchmark plan"""

    def __init__(self, message: str, field_errors: Optional[List[str]] = None):
        self.field_errors = field_errors or []
        if self.field_errors:
            message = message + "\n" + "\n".join(f"  {e}" for e in self.field_errors)
        super().__init__(message)

    @classmethod
    def from_validation_error(cls, exc, source: str = "config") -> "ConfigError":
        """Build from a pydantic ValidationError, keeping field paths"""
        field_errors = []
        for err in exc.errors():
            path = ".".join(str(p) for p in err.get("loc", ())) or "<root>"
            field_errors.append(f"{path}: {err.get('msg', 'invalid value')}")
        return cls(f"invalid {source}", field_errors)


class SeriesFileError(OrdchangeError, OSError):
    """A series file could not be read or parsed"""

    def __init__(self, message: str, path: Optional[str] = None, line_number: Optional[int] = None):
        self.path = path
        self.line_number = line_number
        location = ""
        if path is not None:
            location = f"{path}"
            if line_number is not None:
                location += f":{line_number}"
            location += ": "
        super().__init__(location + message)
