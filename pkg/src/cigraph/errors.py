"""Exception types shared across the recognition pipelines."""


class ContractViolation(ValueError):
    """A documented precondition of an operation was not met by the caller."""


class CertificateConstructionFailure(RuntimeError):
    """A constructed witness poset failed its final validation.

    Raised instead of returning a bad certificate; indicates an internal
    bug or a violated precondition, never a property of the input.
    """
