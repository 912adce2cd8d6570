"""Exception types raised by the library and mapped to CLI exit codes."""


class FrameMismatch(ValueError):
    """Objects defined on different frames were combined."""


class ConditioningImpossible(ValueError):
    """The conditioning event has (numerically) zero upper probability."""


class ResolutionTooHigh(ValueError):
    """A brute-force grid would exceed the enumeration budget."""


class ModelError(ValueError):
    """Base class for problems in a model document."""


class MalformedDocument(ModelError):
    """The document is not valid JSON or does not follow the schema."""


class InvalidModel(ModelError):
    """The document parses but violates a numeric invariant."""


class UnknownOutcome(ModelError):
    """A label does not belong to the frame."""
