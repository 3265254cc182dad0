"""Shared exception types."""


class ContractError(ValueError):
    """A caller violated an operation's preconditions."""


class DegeneracyError(RuntimeError):
    """A computation hit an affine degeneracy that general position excludes.

    Carries the offending labels when they are known.
    """

    def __init__(self, message, labels=None):
        super().__init__(message)
        self.labels = tuple(labels) if labels is not None else None


class SamplingError(RuntimeError):
    """Random sampling exhausted its attempt budget."""
