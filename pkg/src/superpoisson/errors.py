"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SuperPoissonError(Exception):
    """Base class for all library errors."""


class InputError(SuperPoissonError, ValueError):
    """Malformed or out-of-range input (bad index, wrong size, missing variable, ...)."""


class GradingError(InputError):
    """A structure constant connects degrees that do not add up mod 2."""

    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(
            f"grading violation at (i, j, k) = ({i}, {j}, {k}): "
            f"deg(e_{k}) != deg(e_{i}) + deg(e_{j}) mod 2"
        )


class NonHomogeneousError(InputError):
    """An operation defined only on homogeneous elements received a mixed one."""


class ParseError(InputError):
    """Algebra file could not be parsed; ``location`` names the offending field."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
