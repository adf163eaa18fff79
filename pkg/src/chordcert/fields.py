"""Exact arithmetic over F_p, F_{p^k} and Q.

A :class:`FieldHandle` identifies a field; :class:`FieldElement` carries a
value together with its handle so operands from different fields are never
combined silently.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from chordcert.errors import (
    DivisionByZero,
    InfiniteField,
    MixedFields,
    NotPrime,
    ParseError,
    ReducibleModulus,
)

logger = logging.getLogger(__name__)

MAX_PRIME = 2**31
MAX_EXTENSION_DEGREE = 4

_FIELD_SPEC_RE = re.compile(r"^p=(\d+)(?:,k=(\d+),mod=([-\d,]+))?$")
_INT_RE = re.compile(r"^[+-]?\d+$")
_FRACTION_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class FieldKind(str, Enum):
    """Supported field families."""
    PRIME = "prime"
    EXTENSION = "extension"
    RATIONAL = "rational"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _poly_divmod(num: List[int], den: List[int], p: int) -> Tuple[List[int], List[int]]:
    """Divide polynomials over F_p; coefficient lists are low degree first."""
    num = [c % p for c in num]
    inv_lead = pow(den[-1], -1, p)
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        factor = num[shift + len(den) - 1] * inv_lead % p
        quot[shift] = factor
        if factor:
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
    rem = num[: len(den) - 1] or [0]
    return quot, rem


def _find_factor(modulus: Tuple[int, ...], p: int) -> Optional[Tuple[List[int], List[int]]]:
    """Search monic divisors of degree 1..k//2; return (factor, cofactor) or None."""
    k = len(modulus) - 1
    for degree in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=degree):
            candidate = list(tail) + [1]
            quot, rem = _poly_divmod(list(modulus), candidate, p)
            if all(c == 0 for c in rem):
                return candidate, quot
    return None


@dataclass(frozen=True)
class FieldHandle:
    """A concrete field.

    ``modulus`` lists the coefficients of the monic defining polynomial,
    lowest degree first; it is empty for prime fields and Q.
    """
    kind: FieldKind
    p: int = 0
    modulus: Tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1 if self.kind is FieldKind.EXTENSION else 1

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is not FieldKind.RATIONAL else 0

    @property
    def size(self) -> Optional[int]:
        """Number of elements, or None for Q."""
        if self.kind is FieldKind.RATIONAL:
            return None
        return self.p**self.degree

    @property
    def is_finite(self) -> bool:
        return self.kind is not FieldKind.RATIONAL

    def zero(self) -> "FieldElement":
        return self.from_int(0)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        if self.kind is FieldKind.PRIME:
            return FieldElement(self, n % self.p)
        if self.kind is FieldKind.EXTENSION:
            return FieldElement(self, (n % self.p,) + (0,) * (self.degree - 1))
        return FieldElement(self, Fraction(n))

    def from_coeffs(self, coeffs: Tuple[int, ...]) -> "FieldElement":
        """Build an extension element from low-to-high coefficients of u."""
        if self.kind is not FieldKind.EXTENSION:
            raise MixedFields(f"{self} has no polynomial representation")
        padded = tuple(c % self.p for c in coeffs) + (0,) * (self.degree - len(coeffs))
        if len(padded) != self.degree:
            raise ParseError(f"Too many coefficients for {self}: {list(coeffs)}")
        return FieldElement(self, padded)

    def from_fraction(self, value: Union[int, Fraction]) -> "FieldElement":
        value = Fraction(value)
        if self.kind is FieldKind.RATIONAL:
            return FieldElement(self, value)
        return self.from_int(value.numerator) / self.from_int(value.denominator)

    def generator(self) -> "FieldElement":
        """The class of u in F_p[u]/(m)."""
        return self.from_coeffs((0, 1))

    def elements(self) -> List["FieldElement"]:
        """All elements ordered by the integer sum(c_i * p^i)."""
        return list(enumerate_field(self))

    def parse_element(self, text: str) -> "FieldElement":
        return parse_element(self, text)

    def format_element(self, element: "FieldElement", sep: str = ",") -> str:
        return format_element(element, sep)

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "Q"
        if self.kind is FieldKind.PRIME:
            return f"p={self.p}"
        mod = ",".join(str(c) for c in self.modulus)
        return f"p={self.p},k={self.degree},mod={mod}"


Value = Union[int, Tuple[int, ...], Fraction]


class FieldElement:
    """An element of a :class:`FieldHandle`. Immutable and hashable."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldHandle, value: Value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"Cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        if self.field.kind is FieldKind.EXTENSION:
            return not any(self.value)
        return self.value == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            if isinstance(other, Fraction) and self.field.kind is not FieldKind.RATIONAL:
                try:
                    return self == self.field.from_fraction(other)
                except DivisionByZero:
                    return False
            return self.value == self._coerce(other).value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        kind = self.field.kind
        if kind is FieldKind.PRIME:
            return FieldElement(self.field, (self.value + other.value) % self.field.p)
        if kind is FieldKind.EXTENSION:
            p = self.field.p
            summed = tuple((a + b) % p for a, b in zip(self.value, other.value))
            return FieldElement(self.field, summed)
        return FieldElement(self.field, self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        kind = self.field.kind
        if kind is FieldKind.PRIME:
            return FieldElement(self.field, -self.value % self.field.p)
        if kind is FieldKind.EXTENSION:
            return FieldElement(self.field, tuple(-a % self.field.p for a in self.value))
        return FieldElement(self.field, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        kind = self.field.kind
        if kind is FieldKind.PRIME:
            return FieldElement(self.field, self.value * other.value % self.field.p)
        if kind is FieldKind.EXTENSION:
            return FieldElement(self.field, self._ext_mul(self.value, other.value))
        return FieldElement(self.field, self.value * other.value)

    __rmul__ = __mul__

    def _ext_mul(self, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        p = self.field.p
        k = self.field.degree
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        mod = self.field.modulus
        # u^k = -(m_0 + ... + m_{k-1} u^{k-1}) since m is monic
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * mod[i]
            prod[top] = 0
        return tuple(c % p for c in prod[:k])

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero(f"Cannot invert zero in {self.field}")
        kind = self.field.kind
        if kind is FieldKind.PRIME:
            return FieldElement(self.field, pow(self.value, -1, self.field.p))
        if kind is FieldKind.EXTENSION:
            return self ** (self.field.size - 2)
        return FieldElement(self.field, 1 / self.value)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def power(self, exponent: int) -> "FieldElement":
        return self**exponent

    # -- rendering ----------------------------------------------------------

    def sort_key(self) -> int:
        """Integer index sum(c_i * p^i) used for enumeration order."""
        kind = self.field.kind
        if kind is FieldKind.PRIME:
            return self.value
        if kind is FieldKind.EXTENSION:
            return sum(c * self.field.p**i for i, c in enumerate(self.value))
        raise InfiniteField("Rational numbers have no enumeration index")

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.field}, {format_element(self)})"


# -- construction -------------------------------------------------------------


def build_prime_field(p: int) -> FieldHandle:
    if p > MAX_PRIME:
        raise NotPrime(f"{p} exceeds the supported bound 2^31")
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldHandle(FieldKind.PRIME, p)


def build_extension(p: int, modulus: Tuple[int, ...]) -> FieldHandle:
    """Build F_p[u]/(m) for a monic irreducible m given low degree first."""
    base = build_prime_field(p)
    modulus = tuple(c % p for c in modulus)
    if len(modulus) < 2 or modulus[-1] != 1:
        raise ParseError(f"Modulus must be monic of degree >= 1: {list(modulus)}")
    k = len(modulus) - 1
    if k == 1:
        return base
    if k > MAX_EXTENSION_DEGREE:
        raise ParseError(f"Extension degree {k} exceeds {MAX_EXTENSION_DEGREE}")
    found = _find_factor(modulus, p)
    if found is not None:
        factor, cofactor = found
        raise ReducibleModulus(
            f"Modulus {list(modulus)} is reducible over F_{p}", factor, cofactor
        )
    logger.debug(f"Built extension field of order {p**k}")
    return FieldHandle(FieldKind.EXTENSION, p, modulus)


RATIONALS = FieldHandle(FieldKind.RATIONAL)


def parse_field_spec(text: str) -> FieldHandle:
    """Parse ``p=5``, ``p=2,k=2,mod=1,1,1`` or ``Q``."""
    text = text.strip().replace(" ", "")
    if text in ("Q", "QQ"):
        return RATIONALS
    match = _FIELD_SPEC_RE.match(text)
    if not match:
        raise ParseError(f"Unrecognised field spec: {text!r}")
    p = int(match.group(1))
    if match.group(2) is None:
        return build_prime_field(p)
    k = int(match.group(2))
    try:
        modulus = tuple(int(c) for c in match.group(3).split(","))
    except ValueError:
        raise ParseError(f"Invalid modulus in field spec: {text!r}")
    if len(modulus) != k + 1:
        raise ParseError(f"Modulus needs {k + 1} coefficients, got {len(modulus)}")
    if modulus[-1] != 1:
        raise ParseError("Modulus must be monic")
    return build_extension(p, modulus)


def enumerate_field(field: FieldHandle) -> Iterator[FieldElement]:
    if field.kind is FieldKind.RATIONAL:
        raise InfiniteField("Cannot enumerate Q")
    if field.kind is FieldKind.PRIME:
        for n in range(field.p):
            yield FieldElement(field, n)
        return
    for n in range(field.size):
        coeffs = []
        for _ in range(field.degree):
            n, c = divmod(n, field.p)
            coeffs.append(c)
        yield FieldElement(field, tuple(coeffs))


# -- text form ----------------------------------------------------------------


def parse_element(field: FieldHandle, text: str) -> FieldElement:
    """Parse an element: an integer, ``a/b`` over Q, or ``c0,c1,..`` over F_{p^k}.

    Extension elements may use ``;`` in place of ``,`` so they can sit inside
    point and curve coordinates.
    """
    text = text.strip()
    if field.kind is FieldKind.EXTENSION:
        parts = [t for t in re.split(r"[;,]", text)]
        if not all(_INT_RE.match(t.strip()) for t in parts):
            raise ParseError(f"Invalid element of {field}: {text!r}")
        if len(parts) > field.degree:
            raise ParseError(f"Too many coefficients for {field}: {text!r}")
        return field.from_coeffs(tuple(int(t) for t in parts))
    if field.kind is FieldKind.RATIONAL:
        if not _FRACTION_RE.match(text):
            raise ParseError(f"Invalid rational number: {text!r}")
        num, _, den = text.partition("/")
        if den and int(den) == 0:
            raise DivisionByZero(f"Zero denominator in {text!r}")
        return FieldElement(field, Fraction(int(num), int(den) if den else 1))
    if not _INT_RE.match(text):
        raise ParseError(f"Invalid element of {field}: {text!r}")
    return field.from_int(int(text))


def format_element(element: FieldElement, sep: str = ",") -> str:
    """Render in element syntax; ``sep`` joins extension coefficients."""
    kind = element.field.kind
    if kind is FieldKind.EXTENSION:
        return sep.join(str(c) for c in element.value)
    return str(element.value)
