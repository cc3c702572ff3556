"""Exception types shared across the package.

Every mathematically meaningful failure gets its own class so callers can
distinguish "the input is malformed" from "the input is well formed but the
claimed structure is absent".  All of them derive from CotwistError.
"""


class CotwistError(Exception):
    """Base class for all package errors."""


class InputError(CotwistError):
    """Malformed or inconsistent input data (wrong shapes, bad JSON, bad flags)."""


class NoSolution(CotwistError):
    """An exact linear system is inconsistent."""


class NotNilpotent(CotwistError):
    """A matrix whose dim-th power is nonzero was asked for a nilpotency index."""


class NotInvertible(CotwistError):
    """A functional has no convolution inverse on its carrier."""


class NotAGroup(CotwistError):
    """A multiplication table violates a group axiom."""


class NotGrouplike(CotwistError):
    """A functional is not an algebra homomorphism to the base field."""


class NotCentral(CotwistError):
    """A functional does not commute with the dual algebra."""


class NotInvolutive(CotwistError):
    """A functional is not its own convolution inverse."""


class NotASubcoalgebra(CotwistError):
    """A set of basis indices is not closed under comultiplication."""


class NotSemisimpleSigns(CotwistError):
    """An operator expected to square to the identity does not."""


class InconsistentSigns(CotwistError):
    """A sign assignment on comodules violates the tensor product rule."""


class NotAntisymmetric(CotwistError):
    """A candidate classical r-matrix is not antisymmetric."""


class NotAbelian(CotwistError):
    """An operation restricted to abelian Lie algebras got a nonabelian one."""


class TruncationTooLow(CotwistError):
    """A truncated series still has a nonzero top coefficient and no bound
    guarantees that higher coefficients vanish."""


class BadCounit(CotwistError):
    """A series violates its counit normalization."""


class CheckFailed(CotwistError):
    """An internal postcondition that should hold for any valid input failed.

    Raised when an operation's output violates an identity the construction
    is supposed to guarantee; seeing this means the input data, despite
    passing its own validation, is not what it claims to be.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
