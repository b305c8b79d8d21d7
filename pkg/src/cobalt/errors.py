"""Shared exception types.

Every error the library raises deliberately is a subclass of CobaltError,
so callers (in particular the CLI) can distinguish "your input was bad"
from genuine bugs.
"""


class CobaltError(Exception):
    """Base class for all deliberate errors."""


class InputError(CobaltError):
    """Bad user input: malformed expressions, out-of-range arguments."""


# -- presentations and expressions -------------------------------------------

class ExpressionSyntaxError(InputError):
    """Raised by the relation/expression parser; carries a position."""

    def __init__(self, message, position, text=None):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at column {position + 1})")


class UnknownIdentifier(ExpressionSyntaxError):
    pass


class InhomogeneousRelation(InputError):
    """A relation mixes Adams degrees; carries the offending term."""

    def __init__(self, message, term=None):
        self.term = term
        super().__init__(message)


class BoundExceeded(InputError):
    """A size argument is above the configured maximum."""


# -- series -------------------------------------------------------------------

class NonUnitConstantTerm(CobaltError):
    pass


class NonzeroConstantInner(CobaltError):
    pass


class BadLeadingCoefficient(CobaltError):
    pass


class NotQAlgebra(CobaltError):
    """An operation needed denominators over an integral base."""


# -- Schur / Grassmannian ------------------------------------------------------

class PartitionOutOfBox(InputError):
    pass


class IllFormed(CobaltError):
    """A claimed ring map does not send relations into the target ideal."""


# -- formal group laws ---------------------------------------------------------

class MissingBeta(InputError):
    pass


class TruncationTooSmall(InputError):
    pass


class AxiomsFail(CobaltError):
    pass


# -- windows / misc -------------------------------------------------------------

class WindowEmpty(InputError):
    pass


class DegreeMismatch(InputError):
    pass
