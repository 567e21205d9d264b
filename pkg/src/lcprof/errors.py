"""Exception hierarchy.

Everything raised on bad input derives from :class:`LcprofError` so callers
(and the CLI) can catch one type.  :class:`BudgetExceeded` is kept apart
because the CLI maps it to its own exit status.
"""


class LcprofError(ValueError):
    """Base class for invalid input to any lcprof routine."""


class NotPrime(LcprofError):
    pass


class BadModulus(LcprofError):
    pass


class MissingModulus(LcprofError):
    pass


class DivisionByZero(LcprofError, ZeroDivisionError):
    pass


class LengthMismatch(LcprofError):
    pass


class TokenOutOfRange(LcprofError):
    pass


class MalformedToken(LcprofError):
    pass


class BlockLengthMismatch(LcprofError):
    pass


class BudgetOutOfRange(LcprofError):
    """Error budget k outside ``[0, N]``."""


class AllZeroSequence(LcprofError):
    """The sequence has linear complexity 0, so it has no first jump point."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would enumerate more patterns than allowed."""

    def __init__(self, patterns: int, budget: int):
        super().__init__(f"search needs {patterns} error patterns, budget is {budget}")
        self.patterns = patterns
        self.budget = budget
