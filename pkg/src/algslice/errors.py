"""Exception hierarchy.

Every failure raised by the library derives from :class:`AlgsliceError`.
Errors split into two families: bad input (:class:`InputError`) and honest
failure of a bounded method (:class:`Inconclusive`).  The CLI maps the first
family to exit code 2 and the second to exit code 3.
"""


class AlgsliceError(Exception):
    pass


class InputError(AlgsliceError, ValueError):
    """The caller handed over something that violates a precondition."""


class Inconclusive(AlgsliceError):
    """A bounded search or certification gave up without refuting anything."""


# exactmat
class NonSquare(InputError):
    pass


class NotSymmetric(InputError):
    pass


class NotUnimodular(InputError):
    pass


class ZeroVector(InputError):
    pass


class SizeMismatch(InputError):
    pass


# seifert
class OddDimension(InputError):
    pass


class NotUnimodularIntersection(InputError):
    pass


class SingularAtOmega(InputError):
    pass


class UnsupportedOmega(Inconclusive):
    pass


# torus
class NotCoprime(InputError):
    pass


# qform
class NotSkew(InputError):
    pass


class NotPrimitive(InputError):
    pass


class OrientationMismatch(InputError):
    """The skew form has Pfaffian -1, so no determinant +1 symplectic basis exists."""


class NotFound(Inconclusive):
    """Every vector up to the searched sup-norm radius was checked; none is isotropic."""

    def __init__(self, message, radius=0, definite=False):
        super().__init__(message)
        self.radius = radius
        self.definite = definite


class BudgetExhausted(Inconclusive):
    """Time ran out partway through a radius."""

    def __init__(self, message, radius=0):
        super().__init__(message)
        self.radius = radius


# concordance
class DefiniteForm(Inconclusive):
    pass


class CertificateInvalid(InputError):
    pass


class RankMismatch(InputError):
    pass


# cli
class ParseError(InputError):
    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class DimensionMismatch(InputError):
    pass
