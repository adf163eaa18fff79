"""Tests for projective points, lines and cubic forms."""

import random

import pytest

from chordcert.errors import CoincidentPoints, ParseError
from chordcert.fields import RATIONALS, build_prime_field, parse_field_spec
from chordcert.geometry import (
    MONOMIALS,
    CubicForm,
    Line,
    ProjectivePoint,
    cubic_from_lines,
    eval_cubic,
    eval_line,
    format_point,
    line_through,
    lines_of_plane,
    monomial_vector,
    parse_point,
    points_of_plane,
)


def _pt(field, x, y, z):
    return ProjectivePoint.from_coords(field.from_int(x), field.from_int(y), field.from_int(z))


def _line(field, a, b, c):
    return Line((field.from_int(a), field.from_int(b), field.from_int(c)))


def _unit(field, *names):
    values = [field.zero()] * len(MONOMIALS)
    for name in names:
        values[MONOMIALS.index(name)] = field.one()
    return values


def test_points_are_normalized(f5):
    p = _pt(f5, 2, 4, 2)
    assert p == _pt(f5, 1, 2, 1)
    assert _pt(f5, 0, 3, 0) == ProjectivePoint.infinity(f5)
    assert p.is_affine()
    assert ProjectivePoint.infinity(f5).is_infinity()


def test_line_through(f5):
    """Chords are the cross product of the coordinate triples."""
    assert line_through(_pt(f5, 0, 1, 1), _pt(f5, 0, 1, 0)) == _line(f5, 1, 0, 0)
    assert line_through(_pt(f5, 0, 1, 1), _pt(f5, 2, 1, 1)) == _line(f5, 0, 1, -1)
    assert line_through(_pt(f5, 1, 0, 0), _pt(f5, 0, 1, 0)) == _line(f5, 0, 0, 1)
    with pytest.raises(CoincidentPoints):
        line_through(_pt(f5, 1, 1, 1), _pt(f5, 2, 2, 2))


def test_eval_line(f5):
    assert eval_line(_line(f5, 1, 0, 0), _pt(f5, 0, 1, 0)) == 0
    assert eval_line(_line(f5, 0, 1, -1), _pt(f5, 3, 1, 1)) == 0
    assert eval_line(_line(f5, 1, 3, 2), _pt(f5, 0, 4, 1)) == 4


def test_monomial_vectors(f5):
    o = ProjectivePoint.infinity(f5)
    assert monomial_vector(o, "M") == _unit(f5, "Y^3")
    assert monomial_vector(o, "M_Y") == [3 * x for x in _unit(f5, "Y^3")]
    assert monomial_vector(_pt(f5, 1, 1, 1), "M") == [f5.one()] * 10
    m_x = monomial_vector(_pt(f5, 2, 3, 1), "M_X")
    assert m_x[MONOMIALS.index("X^3")] == 3 * 4
    assert m_x[MONOMIALS.index("XYZ")] == 3
    assert m_x[MONOMIALS.index("Y^3")] == 0


@pytest.mark.parametrize("spec", ["p=2", "p=3", "p=2,k=2,mod=1,1,1", "p=5"])
def test_euler_relation(spec):
    """X*(M_X.c) + Y*(M_Y.c) + Z*(M_Z.c) = 3F(P) for random cubics at every point."""
    field = parse_field_spec(spec)
    rng = random.Random(spec)
    elements = field.elements()
    for _ in range(20):
        form = CubicForm(tuple(rng.choice(elements) for _ in MONOMIALS))
        for p in points_of_plane(field):
            fx, fy, fz = form.derivative_values(p)
            x, y, z = p.coords
            assert x * fx + y * fy + z * fz == 3 * eval_cubic(form, p)


def test_cubic_from_lines(f5):
    x, y, z = _line(f5, 1, 0, 0), _line(f5, 0, 1, 0), _line(f5, 0, 0, 1)
    assert list(cubic_from_lines(x, y, z).c) == _unit(f5, "XYZ")
    assert list(cubic_from_lines(x, x, x).c) == _unit(f5, "X^3")
    assert list(cubic_from_lines(x, x, _line(f5, 0, 1, 1)).c) == _unit(f5, "X^2Y", "X^2Z")


def test_eval_cubic(f5):
    x, y, z = _line(f5, 1, 0, 0), _line(f5, 0, 1, 0), _line(f5, 0, 0, 1)
    assert eval_cubic(cubic_from_lines(x, y, z), _pt(f5, 1, 1, 0)) == 0
    assert eval_cubic(cubic_from_lines(x, x, x), _pt(f5, 2, 0, 1)) == 3


def test_cubic_agrees_with_product_of_lines():
    """F(P) = l1(P) * l2(P) * l3(P) on every point of the plane over F_3."""
    f3 = build_prime_field(3)
    lines = lines_of_plane(f3)
    triples = [(lines[0], lines[5], lines[9]), (lines[2], lines[2], lines[12]),
               (lines[7], lines[11], lines[3])]
    for l1, l2, l3 in triples:
        form = cubic_from_lines(l1, l2, l3)
        for p in points_of_plane(f3):
            assert eval_cubic(form, p) == eval_line(l1, p) * eval_line(l2, p) * eval_line(l3, p)


def test_plane_sizes():
    f3 = build_prime_field(3)
    assert len(set(points_of_plane(f3))) == 13
    assert len(set(lines_of_plane(f3))) == 13


def test_parse_point(f5, f4):
    assert parse_point(f5, "O") == ProjectivePoint.infinity(f5)
    assert parse_point(f5, "(0,1)") == _pt(f5, 0, 1, 1)
    assert parse_point(f5, "[2:4:2]") == _pt(f5, 1, 2, 1)
    assert parse_point(RATIONALS, "(1/2, -3)").x == RATIONALS.from_fraction(1) / 2
    u = f4.generator()
    assert parse_point(f4, "(1,0;0,1)") == ProjectivePoint.affine(f4.one(), u)
    for bad in ("(1)", "(1,2,3)", "[0:0:0]", "1,2", "[1:2]"):
        with pytest.raises(ParseError):
            parse_point(f5, bad)


def test_format_point(f5, f4):
    assert format_point(ProjectivePoint.infinity(f5)) == "O"
    assert format_point(_pt(f5, 3, 4, 1)) == "(3,4)"
    assert format_point(_pt(f5, 1, 0, 0)) == "[1:0:0]"
    assert format_point(ProjectivePoint.affine(f4.one(), f4.generator())) == "(1,0;0,1)"
