"""Exception types shared across the library.

Every exception raised on a documented error path derives from
:class:`TrigalError`, so callers (in particular the CLI) can catch library
failures without masking genuine bugs.
"""


class TrigalError(Exception):
    """Base class for all library errors."""


# -- finite fields ----------------------------------------------------------

class NotPrime(TrigalError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(TrigalError):
    """The supplied extension modulus is reducible over the prime field."""


class DegreeMismatch(TrigalError):
    """A degree constraint was violated (modulus degree, permutation degree)."""


class DivisionByZero(TrigalError):
    """Division or inversion by zero."""


class FieldMismatch(TrigalError):
    """Arithmetic attempted between elements of different fields."""


# -- univariate polynomials --------------------------------------------------

class ZeroPolynomial(TrigalError):
    """The zero polynomial is not a valid argument here."""


class ConstantPolynomial(TrigalError):
    """A nonconstant polynomial is required."""


# -- multivariate polynomials ------------------------------------------------

class ContextMismatch(TrigalError):
    """Operands live in different polynomial contexts."""


class NonMonicRelation(TrigalError):
    """A quotient-ring relation is not monic in its bound variable."""


class UnknownVariable(TrigalError):
    """A variable name is not part of the polynomial context."""


# -- Newton polygons ---------------------------------------------------------

class TooFewPoints(TrigalError):
    """A Newton polygon needs at least two points of finite valuation."""


# -- permutation groups ------------------------------------------------------

class DegreeTooLarge(TrigalError):
    """Permutation degree exceeds the supported cap."""


class UnknownName(TrigalError):
    """No built-in construction exists for the requested group name."""


class MissingDataFile(TrigalError):
    """The bundled generator data file could not be found."""


class BudgetExceeded(TrigalError):
    """Group order exceeds the streaming-enumeration budget."""


class BadK(TrigalError):
    """Fixed-point count out of range for a cycle-based lookup."""


# -- classification ----------------------------------------------------------

class InvalidShape(TrigalError):
    """A trinomial shape violates its invariants."""


class NotCoprime(TrigalError):
    """The exponents n and m are not relatively prime."""


class BadExponent(TrigalError):
    """The middle exponent m is outside 0 < m < n."""


class BadCharacteristic(TrigalError):
    """The characteristic is neither 0 nor a prime."""


class AmbiguousPGL(TrigalError):
    """More than one (q, d, s) parameter triple matches a projective shape."""


# -- sampling ----------------------------------------------------------------

class BadExponents(TrigalError):
    """Sectional exponents must be strictly increasing positive integers."""


class CharacteristicMismatch(TrigalError):
    """The sampling field's characteristic disagrees with the shape's."""


class EmptyStats(TrigalError):
    """No accepted specializations to base an identification on."""


# -- identity checks ---------------------------------------------------------

class BadParameters(TrigalError):
    """Parameters fail the preconditions of an identity check."""
