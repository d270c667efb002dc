"""Exceptions shared across the package and mapped to CLI exit codes."""


class JsonLineError(ValueError):
    """A JSONL file could not be parsed; carries the offending line number."""

    def __init__(self, path: str, line_number: int, reason: str):
        self.path = path
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"{path}:{line_number}: {reason}")


class SchemaMismatchError(ValueError):
    """Inputs disagree on schema, shape, or document identity."""


class TrainingDiverged(RuntimeError):
    """Loss became non-finite during optimization."""
