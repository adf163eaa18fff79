"""Weierstrass curves and the chord-tangent operation.

The curve is the projective cubic

    X^3 + a2 X^2 Z + a4 X Z^2 + a6 Z^3 - Y^2 Z - a1 X Y Z - a3 Y Z^2 = 0

and ``P * Q`` is the third intersection of the line through P and Q with the
curve. It is computed by restricting the curve equation to the line, which
gives a binary cubic G(s, t), and dividing out the roots belonging to P and Q.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from chordcert.errors import (
    CrossCurveOperation,
    InfiniteField,
    LineOnCurve,
    MixedFields,
    ParseError,
    PointNotOnCurve,
    PreconditionViolated,
    SingularCurve,
    SingularPoint,
    TangencyViolation,
)
from chordcert.fields import FieldElement, FieldHandle, FieldKind, format_element, parse_element
from chordcert.geometry import (
    EXPONENTS,
    CubicForm,
    Line,
    ProjectivePoint,
    format_point,
    line_through,
    parse_point,
    Triple,
    split_elements,
)

logger = logging.getLogger(__name__)


# -- binary forms -------------------------------------------------------------


def divide_by_root(coeffs: Sequence[FieldElement], root: Tuple[FieldElement, FieldElement]):
    """Divide sum(f_i s^(n-i) t^i) by (t0*s - s0*t) for root (s0, t0).

    Returns the quotient coefficients, or None if (s0, t0) is not a root.
    """
    s0, t0 = root
    n = len(coeffs) - 1
    if n == 0:
        return None
    h: List[FieldElement] = [s0.field.zero()] * n
    if not t0.is_zero():
        h[0] = coeffs[0] / t0
        for i in range(1, n):
            h[i] = (coeffs[i] + s0 * h[i - 1]) / t0
        remainder = coeffs[n] + s0 * h[n - 1]
    else:
        h[n - 1] = -coeffs[n] / s0
        for i in range(n - 1, 0, -1):
            h[i - 1] = (t0 * h[i] - coeffs[i]) / s0
        remainder = coeffs[0] - t0 * h[0]
    return h if remainder.is_zero() else None


def _poly_mul(f: Sequence[FieldElement], g: Sequence[FieldElement]) -> List[FieldElement]:
    out = [f[0].field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def _same_parameter(u: Tuple[FieldElement, FieldElement],
                    v: Tuple[FieldElement, FieldElement]) -> bool:
    return (u[0] * v[1] - u[1] * v[0]).is_zero()


@dataclass(frozen=True)
class BinaryCubic:
    """The curve equation restricted to a line, as G(s,t) = g0 s^3 + g1 s^2 t + g2 s t^2 + g3 t^3.

    A point of the line is s*B1 + t*B2 for the basis points ``basis``.
    """
    coeffs: Tuple[FieldElement, FieldElement, FieldElement, FieldElement]
    line: Line
    basis: Tuple[ProjectivePoint, ProjectivePoint]
    free: Tuple[int, int]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def parameter_of(self, point: ProjectivePoint) -> Tuple[FieldElement, FieldElement]:
        if not self.line.contains(point):
            raise PreconditionViolated(f"{format_point(point)} is not on the line {self.line}")
        return point.coords[self.free[0]], point.coords[self.free[1]]

    def point_at(self, s: FieldElement, t: FieldElement) -> ProjectivePoint:
        b1, b2 = self.basis
        coords = [s * u + t * v for u, v in zip(b1.coords, b2.coords)]
        return ProjectivePoint.from_coords(*coords)

    def evaluate(self, s: FieldElement, t: FieldElement) -> FieldElement:
        g0, g1, g2, g3 = self.coeffs
        return g0 * s**3 + g1 * s**2 * t + g2 * s * t**2 + g3 * t**3


def root_multiplicity(form: BinaryCubic, point: ProjectivePoint) -> int:
    """Multiplicity of the root of ``form`` belonging to ``point``."""
    if form.is_zero():
        raise LineOnCurve(f"The curve contains the line {form.line}")
    root = form.parameter_of(point)
    coeffs: Optional[List[FieldElement]] = list(form.coeffs)
    multiplicity = 0
    while True:
        coeffs = divide_by_root(coeffs, root)
        if coeffs is None:
            return multiplicity
        multiplicity += 1


def _line_basis(line: Line) -> Tuple[Tuple[ProjectivePoint, ProjectivePoint], Tuple[int, int]]:
    coeffs = line.coeffs
    pivot = next(i for i, c in enumerate(coeffs) if not c.is_zero())
    f1, f2 = (i for i in range(3) if i != pivot)
    field = line.field
    basis = []
    for free, value in ((f1, (1, 0)), (f2, (0, 1))):
        coords = [field.zero()] * 3
        coords[f1] = field.from_int(value[0])
        coords[f2] = field.from_int(value[1])
        coords[pivot] = -coeffs[free] / coeffs[pivot]
        basis.append(ProjectivePoint.from_coords(*coords))
    return (basis[0], basis[1]), (f1, f2)


# -- curves -------------------------------------------------------------------


@dataclass(frozen=True)
class WeierstrassCurve:
    """A smooth Weierstrass cubic over ``field``; singular coefficients are rejected."""
    field: FieldHandle
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self):
        for a in self.coefficients:
            if a.field != self.field:
                raise MixedFields(f"Coefficient {a} is not in {self.field}")
        delta = self.discriminant()
        if delta.is_zero():
            raise SingularCurve(
                f"Curve {self.spec()} over {self.field} is singular (discriminant 0)", delta
            )

    @classmethod
    def from_ints(cls, field: FieldHandle, a1: int, a2: int, a3: int, a4: int,
                  a6: int) -> "WeierstrassCurve":
        return cls(field, *(field.from_int(a) for a in (a1, a2, a3, a4, a6)))

    @property
    def coefficients(self) -> Tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    # -- invariants ----------------------------------------------------------

    def b_invariants(self) -> Tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> FieldElement:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    # -- the equation --------------------------------------------------------

    def evaluate(self, point: ProjectivePoint) -> FieldElement:
        if point.field != self.field:
            raise MixedFields(f"Point {format_point(point)} is not over {self.field}")
        a1, a2, a3, a4, a6 = self.coefficients
        x, y, z = point.coords
        return (
            x**3 + a2 * x * x * z + a4 * x * z * z + a6 * z**3
            - y * y * z - a1 * x * y * z - a3 * y * z * z
        )

    def contains(self, point: ProjectivePoint) -> bool:
        return self.evaluate(point).is_zero()

    def cubic_form(self) -> CubicForm:
        """c_E in the monomial order X^3, Y^3, Z^3, X^2Y, XY^2, X^2Z, XZ^2, Y^2Z, YZ^2, XYZ."""
        f = self.field
        return CubicForm((
            f.one(), f.zero(), self.a6, f.zero(), f.zero(),
            self.a2, self.a4, -f.one(), -self.a3, -self.a1,
        ))

    def tangent_coeffs(self, point: ProjectivePoint) -> Triple:
        """The partial derivatives of the curve equation at ``point``."""
        a1, a2, a3, a4, a6 = self.coefficients
        x, y, z = point.coords
        tx = 3 * x * x + 2 * a2 * x * z + a4 * z * z - a1 * y * z
        ty = -2 * y * z - a1 * x * z - a3 * z * z
        tz = a2 * x * x + 2 * a4 * x * z + 3 * a6 * z * z - y * y - a1 * x * y - 2 * a3 * y * z
        if tx.is_zero() and ty.is_zero() and tz.is_zero():
            raise SingularPoint(f"All partial derivatives vanish at {format_point(point)}")
        return tx, ty, tz

    def tangent_line(self, point: ProjectivePoint) -> Line:
        return Line(self.tangent_coeffs(point))

    def restrict_to_line(self, line: Line) -> BinaryCubic:
        """Substitute s*B1 + t*B2 into the curve equation."""
        if line.field != self.field:
            raise MixedFields(f"Line {line} is not over {self.field}")
        basis, free = _line_basis(line)
        b1, b2 = basis
        linear = [[b1.coords[i], b2.coords[i]] for i in range(3)]
        g = [self.field.zero()] * 4
        for exps, c in zip(EXPONENTS, self.cubic_form().c):
            if c.is_zero():
                continue
            term = [c]
            for var, power in enumerate(exps):
                for _ in range(power):
                    term = _poly_mul(term, linear[var])
            g = [u + v for u, v in zip(g, term)]
        return BinaryCubic(tuple(g), line, basis, free)  # type: ignore[arg-type]

    # -- points --------------------------------------------------------------

    def infinity(self) -> "CurvePoint":
        return CurvePoint(ProjectivePoint.infinity(self.field), self)

    def point(self, x, y) -> "CurvePoint":
        """The affine point (x, y); ints are coerced into the field."""
        fx = x if isinstance(x, FieldElement) else self.field.from_int(x)
        fy = y if isinstance(y, FieldElement) else self.field.from_int(y)
        return CurvePoint(ProjectivePoint.affine(fx, fy), self)

    def points(self) -> List["CurvePoint"]:
        """O followed by the affine points, x outer and y inner in field order."""
        if not self.field.is_finite:
            raise InfiniteField("Cannot enumerate the points of a curve over Q")
        elements = self.field.elements()
        found = [self.infinity()]
        for x in elements:
            for y in elements:
                candidate = ProjectivePoint.affine(x, y)
                if self.contains(candidate):
                    found.append(CurvePoint(candidate, self))
        return found

    def _check(self, *points: "CurvePoint") -> None:
        for p in points:
            if p.curve != self:
                raise CrossCurveOperation(f"{p} belongs to {p.curve.spec()}, not {self.spec()}")

    def negate(self, p: "CurvePoint") -> "CurvePoint":
        """-[a:b:1] = [a : -a1*a - a3 - b : 1] and -O = O."""
        self._check(p)
        if p.is_infinity():
            return p
        x, y = p.point.x, p.point.y
        return CurvePoint(ProjectivePoint.affine(x, -self.a1 * x - self.a3 - y), self)

    def star(self, p: "CurvePoint", q: "CurvePoint") -> "CurvePoint":
        """The third intersection of the chord (or tangent) through P and Q."""
        self._check(p, q)
        if p != q:
            line = line_through(p.point, q.point)
            roots = (p.point, q.point)
        else:
            line = self.tangent_line(p.point)
            roots = (p.point, p.point)
        form = self.restrict_to_line(line)
        if form.is_zero():
            raise LineOnCurve(f"The curve contains the line {line}")
        coeffs: Optional[List[FieldElement]] = list(form.coeffs)
        for root_point in roots:
            coeffs = divide_by_root(coeffs, form.parameter_of(root_point))
            if coeffs is None:
                raise TangencyViolation(
                    f"{format_point(root_point)} is not a root of the restriction to {line} "
                    f"with the expected multiplicity"
                )
        h0, h1 = coeffs
        third = (-h1, h0)
        if _same_parameter(third, form.parameter_of(p.point)):
            return p
        if _same_parameter(third, form.parameter_of(q.point)):
            return q
        result = form.point_at(*third)
        if not self.contains(result):
            raise TangencyViolation(f"Residual point {format_point(result)} is not on the curve")
        return CurvePoint(result, self)

    def add(self, p: "CurvePoint", q: "CurvePoint") -> "CurvePoint":
        """P + Q = -(P * Q)."""
        return self.negate(self.star(p, q))

    def multiply(self, n: int, p: "CurvePoint") -> "CurvePoint":
        self._check(p)
        if n < 0:
            return self.multiply(-n, self.negate(p))
        result = self.infinity()
        addend = p
        while n:
            if n & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            n >>= 1
        return result

    def is_flex(self, p: "CurvePoint") -> bool:
        return self.star(p, p) == p

    # -- text form -----------------------------------------------------------

    def spec(self) -> str:
        sep = ";" if self.field.kind is FieldKind.EXTENSION else ","
        return sep.join(format_element(a) for a in self.coefficients)

    def __str__(self) -> str:
        return f"E[{self.spec()}] over {self.field}"


@dataclass(frozen=True)
class CurvePoint:
    """A point of ``curve``; construction checks the curve equation."""
    point: ProjectivePoint
    curve: WeierstrassCurve

    def __post_init__(self):
        if not self.curve.contains(self.point):
            raise PointNotOnCurve(
                f"{format_point(self.point)} is not on y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6 "
                f"with coefficients {self.curve.spec()} over {self.curve.field}"
            )

    def is_infinity(self) -> bool:
        return self.point.is_infinity()

    def __neg__(self) -> "CurvePoint":
        return self.curve.negate(self)

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.add(self, other)

    def star(self, other: "CurvePoint") -> "CurvePoint":
        return self.curve.star(self, other)

    def __str__(self) -> str:
        return format_point(self.point)

    def __repr__(self) -> str:
        return f"CurvePoint({format_point(self.point)})"


# -- module-level operations --------------------------------------------------


def eval_curve(curve: WeierstrassCurve, point: ProjectivePoint) -> FieldElement:
    return curve.evaluate(point)


def negate(curve: WeierstrassCurve, p: CurvePoint) -> CurvePoint:
    return curve.negate(p)


def star(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    return curve.star(p, q)


def add_points(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    return curve.add(p, q)


def enumerate_points(curve: WeierstrassCurve) -> List[CurvePoint]:
    return curve.points()


def parse_curve_spec(field: FieldHandle, text: str) -> WeierstrassCurve:
    """Parse ``a1,a2,a3,a4,a6``; over extension fields use ``;`` between coefficients."""
    parts = split_elements(field, text.strip().replace(" ", ""))
    if len(parts) != 5:
        raise ParseError(f"A curve spec needs five coefficients a1,a2,a3,a4,a6: {text!r}")
    return WeierstrassCurve(field, *(parse_element(field, part) for part in parts))


def parse_curve_point(curve: WeierstrassCurve, text: str) -> CurvePoint:
    return CurvePoint(parse_point(curve.field, text), curve)
