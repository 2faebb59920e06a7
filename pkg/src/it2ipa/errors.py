"""Shared error type for problems located in an input file."""

from __future__ import annotations


class InputFileError(ValueError):
    """A parse or validation failure tied to a file (and optionally a row)."""

    def __init__(self, file: str, cause: str, row: int | None = None):
        self.file = str(file)
        self.row = row
        self.cause = cause
        where = f"{self.file}:{row}" if row is not None else self.file
        super().__init__(f"{where}: {cause}")
