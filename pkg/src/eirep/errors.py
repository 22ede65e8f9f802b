"""Exception hierarchy shared by all modules."""


class EirepError(Exception):
    pass


class InputError(EirepError, ValueError):
    """Malformed or out-of-contract arguments."""


class StructuralError(EirepError):
    """An object violates its own axioms (associativity, action laws, ...)."""


class PreconditionError(EirepError):
    """An operation's mathematical hypotheses do not hold."""


class ResourceError(EirepError):
    """A randomized search or enumeration exhausted its budget."""


class FieldNotSplittingError(EirepError):
    """A simple module has a non-scalar endomorphism ring over the current field."""

    def __init__(self, message, module=None):
        super().__init__(message)
        self.module = module


class ConsistencyError(EirepError):
    """Two independent routes produced contradictory answers."""
