"""Shared error types for precondition and internal-consistency failures."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated precondition."""


class StructureAssertionError(RuntimeError):
    """A structural fact that is guaranteed on admitted inputs failed to hold.

    Raising this signals an implementation bug or a precondition the caller
    skipped, never a mathematical event.
    """


class SearchExhaustedError(StructureAssertionError):
    """A search that is guaranteed to succeed on admitted inputs found nothing."""
