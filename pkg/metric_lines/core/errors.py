"""Exception hierarchy shared by every layer."""

from __future__ import annotations

from typing import Any, Optional


class MetricLinesError(Exception):
    pass


class InputError(MetricLinesError, ValueError):
    pass


class DisconnectedError(InputError):
    pass


class SequenceError(InputError):
    pass


class NotDistanceHereditaryError(InputError):
    pass


class MetricError(InputError):
    """Metric axioms violated; ``violations`` holds every failed check."""

    def __init__(self, message: str, violations: Optional[list[Any]] = None) -> None:
        super().__init__(message)
        self.violations: list[Any] = list(violations or [])


class FormatError(MetricLinesError):
    """Text input that could not be parsed, with 1-based position."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.message = message
        self.line = line
        self.column = column
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")

    def __reduce__(self) -> tuple[Any, ...]:
        # worker processes send errors back pickled
        return (type(self), (self.message, self.line, self.column))
