"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a structural precondition (bad table, bad literal, bad shape)."""


class ShapeError(ValidationError):
    """Matrix or tensor dimensions do not line up."""


class DegreeOverflowError(ValidationError):
    """An exact operation would leave the representable degree window.

    Raised instead of silently truncating; the enveloping-algebra machinery in
    :mod:`rackyd.envelope` truncates by design and says so, everything else
    treats overflow as an error.
    """


class ConsistencyError(RuntimeError):
    """An invariant that is guaranteed mathematically failed to hold.

    Seeing this exception means the library itself has a bug (or the inputs
    were mutated behind its back), not that the input data is merely invalid.
    """
