"""Exception hierarchy shared by the whole package."""


class CoalgLabError(Exception):
    """Base class for library errors."""


class InputError(CoalgLabError, ValueError):
    """Malformed or unsupported input (CLI exit code 2)."""


class BudgetExceeded(CoalgLabError):
    """An enumeration would exceed its configured budget."""


class NotPointedError(InputError):
    """The operation needs a pointed coalgebra."""


class UndecidedError(CoalgLabError):
    """The exact procedure cannot settle the question over this field."""
