"""Exception hierarchy shared by all chitorus modules."""


class ChiTorusError(Exception):
    """Base class for every library error."""


class InvalidSpec(ChiTorusError):
    """Cartan specification out of range for its series."""


class IndexOutOfRange(ChiTorusError):
    """Simple-reflection index outside 1..semisimple_rank."""


class GroupTooLarge(ChiTorusError):
    """Weyl group order exceeds the configured element limit."""


class FactorizationFailed(ChiTorusError):
    """Length polynomial does not factor into q-integers; group data corrupted."""


class InexactDivision(ChiTorusError):
    """An exact polynomial or coefficient division left a remainder."""


class FieldMismatch(ChiTorusError):
    """Operands live over different field descriptors."""


class ParityViolation(ChiTorusError):
    """Rank and signature have opposite parity."""


class NotInvolution(ChiTorusError):
    """Galois matrix does not square to the identity."""


class NonUniqueMaximizer(ChiTorusError):
    """More than one involution class attains the maximal compact rank."""


class InvariantViolation(ChiTorusError):
    """A certified invariant failed: the claim under verification is falsified."""
