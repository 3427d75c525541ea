"""Domain errors raised by the toolkit.

Everything derives from MonoidError, which itself subclasses ValueError so
callers that don't care about the distinctions can catch the usual thing.
"""


class MonoidError(ValueError):
    """Base class for all domain errors in this package."""


class EmptyGeneratorsError(MonoidError):
    """No generators were supplied."""


class NonPositiveGeneratorError(MonoidError):
    """A generator was zero or negative."""


class GcdNotOneError(MonoidError):
    """Generators share a common factor, so the Frobenius number is undefined."""


class NotCoprimeError(MonoidError):
    """The two-generator Frobenius formula needs coprime inputs."""


class GeneratorTooSmallError(MonoidError):
    """The two-generator Frobenius formula needs both generators >= 2."""


class NotAMemberError(MonoidError):
    """The element does not belong to the monoid."""


class NegativeElementError(MonoidError):
    """Negative elements have no factorizations."""


class ZeroElementError(MonoidError):
    """The invariant is only defined for nonzero elements."""


class SingleGeneratorError(MonoidError):
    """The quantity needs at least two minimal generators."""


class WitnessNotFoundError(MonoidError):
    """No witness pair exists inside the search bound."""


class ExceptionalElementError(MonoidError):
    """The closed form excludes this element; use the generic computation."""


class BelowFormulaRangeError(MonoidError):
    """The closed form only applies above its stated threshold."""
