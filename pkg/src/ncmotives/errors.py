"""Exception hierarchy shared by all modules.

The CLI maps these onto distinct exit statuses, so raising the right
class is part of the contract, not just diagnostics.
"""


class NCMotivesError(Exception):
    """Base class for all package errors."""


class ParseInputError(NCMotivesError):
    """An input description file does not parse or is malformed."""

    exit_status = 1


class InvariantError(NCMotivesError):
    """Constructor-level invariant violated (bad user data or internal bug)."""

    exit_status = 2


class CapExceededError(NCMotivesError):
    """A configured size cap (memory guard, enumeration cap) was exceeded."""

    exit_status = 3

    def __init__(self, message, needed=None, cap=None):
        super().__init__(message)
        self.needed = needed
        self.cap = cap


class UncertifiedError(NCMotivesError):
    """A result was requested whose soundness certificate is unavailable.

    We refuse rather than emit an uncertified number; the message names
    the missing certificate.
    """

    exit_status = 4
