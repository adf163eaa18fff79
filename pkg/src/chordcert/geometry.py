"""Points, lines and cubic forms in the projective plane.

Cubic forms are stored as coefficient vectors in the fixed monomial order
``(X^3, Y^3, Z^3, X^2Y, XY^2, X^2Z, XZ^2, Y^2Z, YZ^2, XYZ)``; evaluating a
form at a point is the inner product with the monomial vector of the point.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from chordcert.errors import CoincidentPoints, MixedFields, ParseError, PreconditionViolated
from chordcert.fields import FieldElement, FieldHandle, FieldKind, format_element, parse_element

logger = logging.getLogger(__name__)

MONOMIALS: Tuple[str, ...] = (
    "X^3", "Y^3", "Z^3", "X^2Y", "XY^2", "X^2Z", "XZ^2", "Y^2Z", "YZ^2", "XYZ",
)
EXPONENTS: Tuple[Tuple[int, int, int], ...] = (
    (3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0),
    (2, 0, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2), (1, 1, 1),
)
MONOMIAL_INDEX: Dict[str, int] = {name: i for i, name in enumerate(MONOMIALS)}
_EXPONENT_INDEX: Dict[Tuple[int, int, int], int] = {e: i for i, e in enumerate(EXPONENTS)}

Triple = Tuple[FieldElement, FieldElement, FieldElement]


def _same_field(*elements: FieldElement) -> FieldHandle:
    field = elements[0].field
    for e in elements[1:]:
        if e.field != field:
            raise MixedFields(f"Cannot combine elements of {field} and {e.field}")
    return field


def _normalize(coords: Sequence[FieldElement]) -> Triple:
    """Scale so that the last nonzero coordinate is 1."""
    for c in reversed(coords):
        if not c.is_zero():
            inv = c.inverse()
            return tuple(x * inv for x in coords)  # type: ignore[return-value]
    raise PreconditionViolated("Coordinate vector (0,0,0) does not define a point or line")


@dataclass(frozen=True)
class ProjectivePoint:
    """A point [X:Y:Z], always stored with last nonzero coordinate 1."""
    coords: Triple

    @classmethod
    def from_coords(cls, x: FieldElement, y: FieldElement, z: FieldElement) -> "ProjectivePoint":
        _same_field(x, y, z)
        return cls(_normalize((x, y, z)))

    @classmethod
    def affine(cls, x: FieldElement, y: FieldElement) -> "ProjectivePoint":
        field = _same_field(x, y)
        return cls((x, y, field.one()))

    @classmethod
    def infinity(cls, field: FieldHandle) -> "ProjectivePoint":
        return cls((field.zero(), field.one(), field.zero()))

    @property
    def field(self) -> FieldHandle:
        return self.coords[0].field

    @property
    def x(self) -> FieldElement:
        return self.coords[0]

    @property
    def y(self) -> FieldElement:
        return self.coords[1]

    @property
    def z(self) -> FieldElement:
        return self.coords[2]

    def is_infinity(self) -> bool:
        return self.z.is_zero() and self.x.is_zero()

    def is_affine(self) -> bool:
        return not self.z.is_zero()

    def __str__(self) -> str:
        return format_point(self)


@dataclass(frozen=True, eq=False)
class Line:
    """The line A*X + B*Y + C*Z = 0.

    ``coeffs`` are kept as given so evaluation sees the caller's scaling;
    equality and hashing use the normalized vector.
    """
    coeffs: Triple

    def __post_init__(self):
        _same_field(*self.coeffs)
        if all(c.is_zero() for c in self.coeffs):
            raise PreconditionViolated("Line coefficients must not all vanish")

    @property
    def field(self) -> FieldHandle:
        return self.coeffs[0].field

    def canonical(self) -> "Line":
        return Line(_normalize(self.coeffs))

    def evaluate(self, point: ProjectivePoint) -> FieldElement:
        return eval_line(self, point)

    def contains(self, point: ProjectivePoint) -> bool:
        return eval_line(self, point).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return _normalize(self.coeffs) == _normalize(other.coeffs)

    def __hash__(self) -> int:
        return hash(_normalize(self.coeffs))

    def __str__(self) -> str:
        a, b, c = (format_element(x) for x in self.coeffs)
        return f"{a}*X + {b}*Y + {c}*Z"


def line_through(p: ProjectivePoint, q: ProjectivePoint) -> Line:
    """The chord through two distinct points (cross product of coordinates)."""
    _same_field(p.x, q.x)
    if p == q:
        raise CoincidentPoints(f"line_through needs distinct points, got {p} twice")
    (x1, y1, z1), (x2, y2, z2) = p.coords, q.coords
    cross = (y1 * z2 - z1 * y2, z1 * x2 - x1 * z2, x1 * y2 - y1 * x2)
    return Line(_normalize(cross))


def eval_line(line: Line, point: ProjectivePoint) -> FieldElement:
    a, b, c = line.coeffs
    x, y, z = point.coords
    return a * x + b * y + c * z


def monomial_vector(point: ProjectivePoint, which: str = "M") -> List[FieldElement]:
    """Evaluate M, M_X, M_Y or M_Z (the formal partials of M) at ``point``."""
    if which not in ("M", "M_X", "M_Y", "M_Z"):
        raise PreconditionViolated(f"Unknown monomial vector {which!r}")
    x, y, z = point.coords
    zero = point.field.zero()
    var = {"M": None, "M_X": 0, "M_Y": 1, "M_Z": 2}[which]
    vector = []
    for exps in EXPONENTS:
        exps = list(exps)
        factor = 1
        if var is not None:
            factor = exps[var]
            if factor == 0:
                vector.append(zero)
                continue
            exps[var] -= 1
        vector.append((x ** exps[0]) * (y ** exps[1]) * (z ** exps[2]) * factor)
    return vector


def dot(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


@dataclass(frozen=True)
class CubicForm:
    """Coefficient vector of a homogeneous cubic in the fixed monomial order."""
    c: Tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.c) != len(MONOMIALS):
            raise PreconditionViolated(f"A cubic form has 10 coefficients, got {len(self.c)}")
        _same_field(*self.c)

    @property
    def field(self) -> FieldHandle:
        return self.c[0].field

    def coefficient(self, name: str) -> FieldElement:
        """Look up a coefficient by monomial name, e.g. ``"Y^2Z"``."""
        key = name.replace("²", "^2").replace("³", "^3")
        if key not in MONOMIAL_INDEX:
            raise PreconditionViolated(f"Unknown monomial {name!r}")
        return self.c[MONOMIAL_INDEX[key]]

    def evaluate(self, point: ProjectivePoint) -> FieldElement:
        return eval_cubic(self, point)

    def derivative_values(self, point: ProjectivePoint) -> Triple:
        values = (dot(monomial_vector(point, w), self.c) for w in ("M_X", "M_Y", "M_Z"))
        return tuple(values)  # type: ignore[return-value]

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.c)


def eval_cubic(form: CubicForm, point: ProjectivePoint) -> FieldElement:
    return dot(monomial_vector(point, "M"), form.c)


def _linear_terms(line: Line) -> Dict[Tuple[int, int, int], FieldElement]:
    a, b, c = line.coeffs
    return {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}


def _multiply(
    f: Dict[Tuple[int, int, int], FieldElement], g: Dict[Tuple[int, int, int], FieldElement]
) -> Dict[Tuple[int, int, int], FieldElement]:
    out: Dict[Tuple[int, int, int], FieldElement] = {}
    for (e1, c1), (e2, c2) in itertools.product(f.items(), g.items()):
        key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
        term = c1 * c2
        out[key] = out[key] + term if key in out else term
    return out


def cubic_from_lines(l1: Line, l2: Line, l3: Line) -> CubicForm:
    """Expand the product of three linear forms."""
    field = _same_field(l1.coeffs[0], l2.coeffs[0], l3.coeffs[0])
    product = _multiply(_multiply(_linear_terms(l1), _linear_terms(l2)), _linear_terms(l3))
    c = [field.zero()] * len(MONOMIALS)
    for exps, coeff in product.items():
        c[_EXPONENT_INDEX[exps]] = coeff
    return CubicForm(tuple(c))


def lines_of_plane(field: FieldHandle) -> List[Line]:
    """All q^2+q+1 lines of the plane over a finite field, normalized."""
    elements = field.elements()
    zero, one = field.zero(), field.one()
    lines = [Line((a, b, one)) for a, b in itertools.product(elements, repeat=2)]
    lines.extend(Line((a, one, zero)) for a in elements)
    lines.append(Line((one, zero, zero)))
    return lines


def points_of_plane(field: FieldHandle) -> List[ProjectivePoint]:
    """All q^2+q+1 points of the plane over a finite field, normalized."""
    elements = field.elements()
    zero, one = field.zero(), field.one()
    points = [ProjectivePoint((x, y, one)) for x, y in itertools.product(elements, repeat=2)]
    points.extend(ProjectivePoint((x, one, zero)) for x in elements)
    points.append(ProjectivePoint((one, zero, zero)))
    return points


# -- text form ----------------------------------------------------------------

_AFFINE_RE = re.compile(r"^\((.*)\)$")
_PROJECTIVE_RE = re.compile(r"^\[(.*)\]$")


def split_elements(field: FieldHandle, body: str) -> List[str]:
    """Split a list of element literals; extension elements are joined by ';'."""
    if field.kind is FieldKind.EXTENSION:
        return body.split(";")
    return re.split(r"[,;]", body)


def parse_point(field: FieldHandle, text: str) -> ProjectivePoint:
    """Parse ``O``, ``(x,y)`` or ``[x:y:z]``.

    Inside an affine literal over an extension field the coordinates are
    separated by ``;`` and the coefficients of each by ``,``, e.g. ``(1,0;0,1)``.
    """
    text = text.strip().replace(" ", "")
    if text == "O":
        return ProjectivePoint.infinity(field)
    match = _AFFINE_RE.match(text)
    if match:
        parts = split_elements(field, match.group(1))
        if len(parts) != 2:
            raise ParseError(f"Affine point needs two coordinates: {text!r}")
        x, y = (parse_element(field, part) for part in parts)
        return ProjectivePoint.affine(x, y)
    match = _PROJECTIVE_RE.match(text)
    if match:
        parts = match.group(1).split(":")
        if len(parts) != 3:
            raise ParseError(f"Projective point needs three coordinates: {text!r}")
        x, y, z = (parse_element(field, part) for part in parts)
        if x.is_zero() and y.is_zero() and z.is_zero():
            raise ParseError("[0:0:0] is not a projective point")
        return ProjectivePoint.from_coords(x, y, z)
    raise ParseError(f"Unrecognised point syntax: {text!r}")


def format_point(point: ProjectivePoint) -> str:
    if point.is_infinity():
        return "O"
    if point.is_affine():
        sep = ";" if point.field.kind is FieldKind.EXTENSION else ","
        return f"({format_element(point.x)}{sep}{format_element(point.y)})"
    x, y, z = (format_element(c) for c in point.coords)
    return f"[{x}:{y}:{z}]"


def format_points(points: Iterable[ProjectivePoint]) -> str:
    return ", ".join(format_point(p) for p in points)
