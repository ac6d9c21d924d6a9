"""Exception hierarchy.

Every error carries a short ``code`` used by the CLI in its diagnostics.
"""


class QMSetsError(ValueError):
    code = "domain-error"


class DomainError(QMSetsError):
    """Operands live in different universes, have the wrong shape, etc."""


class InvalidBasisError(DomainError):
    code = "invalid-basis"


class NotABasisError(InvalidBasisError):
    code = "not-a-basis"


class InvalidDynamicsError(DomainError):
    code = "invalid-dynamics"


class EmptyEventError(DomainError):
    code = "empty-event"


class DegenerateError(DomainError):
    code = "degenerate"


class NormalizationError(DomainError):
    code = "normalization"


class CapacityError(QMSetsError):
    code = "capacity"


class ValidationError(QMSetsError):
    """Bad input document. ``pointer`` is a JSON pointer to the offending node."""

    code = "validation"

    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer
