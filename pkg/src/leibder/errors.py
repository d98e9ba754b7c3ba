"""Shared exception types."""


class InputError(ValueError):
    """Raised when an operation receives structurally invalid input.

    Maps to exit code 2 in the command-line driver, as opposed to
    checked-failure verdicts (exit 1) which are ordinary return values.
    """
