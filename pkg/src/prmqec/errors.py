"""Exception hierarchy shared by all prmqec modules."""


class PrmqecError(Exception):
    """Base class for all library errors."""


# --- field construction / arithmetic ---

class NonPrimeP(PrmqecError):
    """Field characteristic is not prime."""


class ReducibleModulus(PrmqecError):
    """Supplied modulus polynomial is not irreducible (or malformed)."""


class ZeroInverse(PrmqecError):
    """Multiplicative inverse of zero requested."""


class FieldMismatch(PrmqecError):
    """Operands belong to different fields."""


class InvalidSubfieldSize(PrmqecError):
    """q0 is not p^j with j dividing the extension degree."""


class NotASubfield(PrmqecError):
    """Source field does not embed into the target field."""


class DegreeTooSmall(PrmqecError):
    """Rootless polynomial of degree < 2 cannot be guaranteed."""


class DegreeOutOfRange(PrmqecError):
    """Degree parameter outside the range a construction supports."""


# --- linear algebra / codes ---

class ShapeMismatch(PrmqecError):
    """Incompatible matrix/vector shapes or lengths."""


class NoSolution(PrmqecError):
    """Linear system is inconsistent."""


class NotAQuadraticExtension(PrmqecError):
    """Hermitian operation on a field without a square-root subfield."""


class NotFullWeight(PrmqecError):
    """Scaling vector has a zero coordinate."""


class EmptyCode(PrmqecError):
    """Operation undefined on the zero code."""


class BudgetExceeded(PrmqecError):
    """Enumeration budget too small for the requested computation."""


class IndexOutOfRange(PrmqecError):
    """Point or coordinate index out of range."""


# --- hull engineering / quantum constructions ---

class TargetOutOfRange(PrmqecError):
    """Requested hull dimension outside [0, dim C]."""


class BinaryFieldUnsupported(PrmqecError):
    """Hull lowering requires q > 2."""


class SweepExhausted(PrmqecError):
    """No single-coordinate rescaling lowers the hull dimension."""


class VectorNotOrthogonal(PrmqecError):
    """Claimed dual vector fails the orthogonality check."""


class ContainmentFailed(PrmqecError):
    """A containment guaranteed by theory failed computationally (bug sentinel)."""


class PreconditionViolated(PrmqecError):
    """Construction preconditions not met."""
