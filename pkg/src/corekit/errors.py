"""Exception types raised across corekit."""


class CorekitError(ValueError):
    pass


class NonPositivePart(CorekitError):
    pass


class NotDistinctOdd(CorekitError):
    pass


class NotSelfConjugate(CorekitError):
    pass


class BoxOutOfDiagram(CorekitError):
    pass


class InvalidModulus(CorekitError):
    pass


class NonNegativeArgument(CorekitError):
    pass


class PreconditionViolated(CorekitError):
    pass


class NonIntegralResult(ArithmeticError):
    """A class-number combination that should be an integer was not.

    Seeing this means a bug in the Hurwitz backend, not bad input.
    """
