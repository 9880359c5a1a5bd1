"""Exception hierarchy shared by every nilprod module."""


class NilprodError(Exception):
    """Base class for all library errors."""


class DomainMismatch(NilprodError):
    """A matrix does not define a homomorphism between the given modules."""


class NotSubspace(NilprodError):
    pass


class NotIdeal(NilprodError):
    pass


class NotCentral(NilprodError):
    pass


class NotInvolution(NilprodError):
    pass


class BadCharacteristic(NilprodError):
    pass


class OperadMismatch(NilprodError):
    pass


class GroupMismatch(NilprodError):
    pass


class UnknownGenerator(NilprodError):
    pass


class WrongVariety(NilprodError):
    pass


class VarietyMismatch(NilprodError):
    pass


class AlgebraMismatch(NilprodError):
    pass


class RepAxiomFailure(NilprodError):
    pass


class ActionInvalid(NilprodError):
    pass


class InvalidAlgebra(NilprodError):
    """Raised when structure data fails a required identity."""
