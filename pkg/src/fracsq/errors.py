"""Exception types. Each carries the name of the module that raised it so the
CLI can tag its messages."""


class FracsqError(Exception):
    module = "fracsq"

    def __str__(self) -> str:
        return f"[{self.module}] {super().__str__()}"


class PatternError(FracsqError, ValueError):
    module = "core_model"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DigitSetError(FracsqError, ValueError):
    module = "core_model"


class CoordinateOverflowError(FracsqError, OverflowError):
    module = "core_model"


class ResourceLimitError(FracsqError):
    """A computation would materialize more cells than the configured budget."""

    module = "grid_oracle"

    def __init__(self, required: int, limit: int, what: str = "cells", module: str | None = None):
        self.required = required
        self.limit = limit
        if module is not None:
            self.module = module
        super().__init__(
            f"{what} budget exceeded: need {required}, limit is {limit} "
            f"(set FRACSQ_CELL_LIMIT to raise it)"
        )


class InternalConsistencyError(FracsqError, AssertionError):
    """Two independent routes disagreed. Always a bug."""

    module = "component_graphs"
