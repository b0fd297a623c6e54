"""Exception hierarchy shared across the library."""


class PathwordError(Exception):
    """Base class for all domain errors raised by this package."""


class AlphabetError(PathwordError):
    """Invalid alphabet definition (duplicates, mixed token lengths, too small)."""


class DiagramError(PathwordError):
    """Structurally invalid grid (ragged rows, bad cell index, too small)."""


class CoverageError(DiagramError):
    """Grid content does not contain every alphabet letter."""

    def __init__(self, missing: list[str]):
        self.missing = list(missing)
        super().__init__(f"grid is missing letters: {', '.join(self.missing)}")


class SchemaError(PathwordError):
    """A serialized document does not match its documented format."""


class PathError(PathwordError):
    """Invalid path (out of bounds, repeated cell, empty, wrong dims)."""


class AnalysisError(PathwordError):
    """Arguments outside the domain of a counting or strength formula."""


class BudgetError(AnalysisError):
    """Exhaustive enumeration would exceed the configured budget."""


class StoreError(PathwordError):
    """Persistent store failure or misconfiguration."""


class DuplicateEnrollmentError(PathwordError):
    """(user, label) already enrolled."""


class UnknownEnrollmentError(PathwordError):
    """No enrollment exists for (user, label)."""
