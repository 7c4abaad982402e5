"""Exception hierarchy; each class carries the CLI exit status it maps to."""


class SeidsError(Exception):
    exit_code = 1
    code = "error"


class InputError(SeidsError, ValueError):
    """Malformed polynomial text, problem file, or out-of-range argument."""

    exit_code = 2
    code = "input-error"


class GenericityError(SeidsError):
    """Two independent generic draws disagreed, or retries were exhausted."""

    exit_code = 3
    code = "genericity-failure"


class BudgetExceeded(SeidsError):
    """A standard-basis computation hit its S-pair budget."""

    exit_code = 4
    code = "budget-exceeded"


class NotMPrimary(SeidsError, ValueError):
    exit_code = 2
    code = "not-m-primary"


class ComputationError(SeidsError):
    """An internal consistency check failed (e.g. a negative pair multiplicity)."""

    exit_code = 1
    code = "computation-error"
