"""Exception hierarchy for chordcert.

Errors fall into three families that the CLI maps to exit codes:
parse errors (2), domain errors (1) and internal errors (1). Internal
errors signal that an identity the mathematics guarantees did not hold
on a concrete instance.
"""

from typing import Any, Optional, Sequence


class ChordCertError(Exception):
    """Base class for all chordcert errors."""


class ParseError(ChordCertError, ValueError):
    """Malformed field, curve, point or element text."""


class DomainError(ChordCertError, ValueError):
    """A caller violated a documented precondition."""


class MixedFields(DomainError):
    """Operands belong to different fields."""


class DivisionByZero(DomainError, ZeroDivisionError):
    """Division by (or inversion of) the zero element."""


class NotPrime(DomainError):
    """The requested characteristic is not a prime."""


class ReducibleModulus(DomainError):
    """An extension modulus has a nontrivial factor over F_p."""

    def __init__(self, message: str, factor: Sequence[int], cofactor: Sequence[int]):
        super().__init__(message)
        self.factor = list(factor)
        self.cofactor = list(cofactor)


class InfiniteField(DomainError):
    """Enumeration requested over an infinite field."""


class CoincidentPoints(DomainError):
    """A chord was requested through a single point."""


class SingularCurve(DomainError):
    """The Weierstrass coefficients define a curve with zero discriminant."""

    def __init__(self, message: str, discriminant: Any):
        super().__init__(message)
        self.discriminant = discriminant


class PointNotOnCurve(DomainError):
    """A point does not satisfy the curve equation."""


class CrossCurveOperation(DomainError):
    """Points of different curves were combined."""


class PointAtInfinity(DomainError):
    """An operation excluding O received O."""


class PreconditionViolated(DomainError):
    """Any other documented precondition failed."""


class InternalError(ChordCertError):
    """A condition the theory rules out occurred."""


class SingularPoint(InternalError):
    """All three partial derivatives vanish at a curve point."""


class LineOnCurve(InternalError):
    """The curve equation vanishes identically on a line."""


class TangencyViolation(InternalError):
    """The chord/tangent dichotomy failed on an instance."""


class CertificationError(InternalError):
    """Base class for proof-replay failures.

    ``partial`` holds the certificate node built so far (if any) and
    ``matrix_dump`` a rendering of the matrix H for linear-algebra failures.
    """

    def __init__(self, message: str, partial: Any = None, matrix_dump: Optional[str] = None):
        super().__init__(message)
        self.partial = partial
        self.matrix_dump = matrix_dump


class ChainCheckFailed(CertificationError):
    """An identity in an obvious-case argument did not hold."""


class TripleCoincidence(CertificationError):
    """Three of the relevant points coincide; the I/J rule does not apply."""


class RankDeficient(CertificationError):
    """rank(H) < 8 + |J|."""


class KernelDimUnexpected(CertificationError):
    """The kernel of H is not two-dimensional."""


class SpanFailure(CertificationError):
    """c_F2 is not a combination of c_E and c_F1, or they are dependent."""


class WitnessExtractionFailed(CertificationError):
    """No proportionality factor could be extracted for a doubled point."""


class UnmatchedPattern(CertificationError):
    """A coincidence pattern outside the six reducible ones occurred."""


class DepthExceeded(CertificationError):
    """Reduction recursion went deeper than the configured cap."""


class ReductionContradiction(CertificationError):
    """A configuration the reduction lemmas show impossible occurred."""


class AxiomFailure(InternalError):
    """A group axiom failed; ``witness`` holds the offending points."""

    def __init__(self, message: str, witness: Sequence[Any]):
        super().__init__(message)
        self.witness = list(witness)


class CertificateFailure(InternalError):
    """A certificate disagreed with direct computation or did not verify."""

    def __init__(self, message: str, certificate_json: Optional[str] = None):
        super().__init__(message)
        self.certificate_json = certificate_json
