"""Exception hierarchy shared across the package.

``InputError`` subclasses signal malformed user input (bad JSON, bad
expression text); ``DomainError`` subclasses signal a violated mathematical
precondition on otherwise well-formed data.  The CLI maps the two families
to distinct exit codes.
"""


class SegreGeomError(Exception):
    """Base class for all package errors."""


class InputError(SegreGeomError):
    """Malformed input document or expression."""


class DomainError(SegreGeomError):
    """Violated precondition of a mathematical operation."""


class BackendMismatch(DomainError):
    """Operands from different arithmetic backends in one expression."""


class NegativeTolerance(DomainError):
    """Tolerance arguments must be nonnegative."""


class LengthMismatch(DomainError):
    """Amplitude vector length does not match 2**m."""


class ZeroFactor(DomainError):
    """A projective-line factor must have at least one nonzero component."""


class SlotOutOfRange(DomainError):
    """Qubit slot outside 1..m."""


class TooFewQubits(DomainError):
    """Operation requires at least two qubits."""


class ZeroState(DomainError):
    """The all-zero amplitude vector is not a projective point."""


class WrongQubitCount(DomainError):
    """Operation is defined for a fixed qubit count only."""


class IndexOutOfRange(DomainError):
    """Row-pair column index outside 1..N or not strictly increasing."""


class NotUnimodular(DomainError):
    """Matrix determinant is not 1."""


class DimensionMismatch(DomainError):
    """Square matrices of equal dimension required."""


class ExpressionParseError(InputError):
    """Unparseable quantum-plane expression."""


class DocumentParseError(InputError):
    """Unparseable or ill-formed JSON document."""
