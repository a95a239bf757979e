"""Exception hierarchy shared across the toolkit."""


class ZsmagicError(Exception):
    """Base class for all toolkit errors."""


class GroupSpecError(ZsmagicError, ValueError):
    """Malformed group spec string or factor list."""


class ArityError(ZsmagicError, ValueError):
    """Element does not match the group it is used with."""


class ParameterError(ZsmagicError, ValueError):
    """An operation precondition is violated."""


class DivisibilityError(ParameterError):
    """A required divisibility condition fails."""


class NonexistenceError(ZsmagicError):
    """The requested object provably does not exist for this group."""


class ImpossibilityError(NonexistenceError):
    """The request is impossible regardless of the group involved."""
