"""Exception types shared across the package.

Two failure modes are kept strictly apart: bad user input (``ValueError``
subclasses, CLI exit code 1) and violations of identities that are supposed
to hold for every 3-braid (``ConsistencyError``, CLI exit code 2).  The
latter can only mean an implementation bug, never a property of the input.
"""


class WordSyntaxError(ValueError):
    """Malformed braid-word text; carries the offending token and position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PolySyntaxError(ValueError):
    """Malformed polynomial text; carries the offending term index."""

    def __init__(self, message: str, term_index: int):
        super().__init__(f"{message} (term {term_index})")
        self.term_index = term_index


class TableFormatError(ValueError):
    """Malformed reference-table file; carries the line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class CapExceededError(ValueError):
    """An enumeration would exceed the configured band cap.

    Deliberately distinct from a negative answer: callers must treat this
    as "inconclusive", never as "not realizable".
    """


class ConsistencyError(Exception):
    """An internal identity failed; indicates a bug, not bad input."""
