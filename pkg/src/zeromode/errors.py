"""Exception hierarchy shared by every module in the package."""


class ZeroModeError(Exception):
    """Base class for all package errors."""


class NotSymmetric(ZeroModeError, ValueError):
    pass


class InvertedOscillator(ZeroModeError, ValueError):
    """A squared normal frequency is negative beyond tolerance.

    The Hamiltonian is unbounded from below, so no ground state (and no
    entropy) exists.
    """


class SingularBlock(ZeroModeError, ArithmeticError):
    pass


class ImaginaryMode(ZeroModeError, ValueError):
    """Coupling is strong enough that a normal frequency would be imaginary."""


class DomainError(ZeroModeError, ValueError):
    pass


class DegenerateMomentum(ZeroModeError, ValueError):
    """Centre-of-mass momentum is zero, so the plane-wave volume is undefined."""


class DegenerateCoupling(ZeroModeError, ValueError):
    pass


class QuadratureError(ZeroModeError, ArithmeticError):
    pass
