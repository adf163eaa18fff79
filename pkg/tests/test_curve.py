"""Tests for Weierstrass curves and the chord-tangent operation."""

import itertools

import pytest

from chordcert.curve import (
    WeierstrassCurve,
    parse_curve_point,
    parse_curve_spec,
    root_multiplicity,
)
from chordcert.errors import (
    CrossCurveOperation,
    InfiniteField,
    ParseError,
    PointNotOnCurve,
    SingularCurve,
)
from chordcert.fields import RATIONALS, build_prime_field
from chordcert.geometry import Line, ProjectivePoint, line_through
from chordcert.harness import exhaustive_curves

E5_POINTS = ["O", "(0,1)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(3,4)", "(4,2)", "(4,3)"]


def _p(curve, text):
    return parse_curve_point(curve, text)


def _test_curves():
    curves = list(exhaustive_curves(build_prime_field(2)))
    f3 = build_prime_field(3)
    curves += [parse_curve_spec(f3, spec) for spec in ("0,0,0,1,1", "1,1,1,1,1", "0,1,0,0,2")]
    f5 = build_prime_field(5)
    curves += [parse_curve_spec(f5, spec) for spec in ("0,0,0,1,1", "0,0,0,4,0", "1,2,3,4,0")]
    return curves


def test_discriminant(e5, e2):
    assert e5.discriminant() == 4
    assert not e2.discriminant().is_zero()
    with pytest.raises(SingularCurve):
        WeierstrassCurve.from_ints(build_prime_field(5), 0, 0, 0, 0, 0)


def test_evaluate(e5, f5):
    assert e5.evaluate(ProjectivePoint.affine(f5.from_int(1), f5.from_int(1))) == 2
    assert e5.contains(ProjectivePoint.infinity(f5))


def test_points(e5, e2):
    assert [str(p) for p in e5.points()] == E5_POINTS
    assert [str(p) for p in e2.points()] == ["O", "(0,0)", "(0,1)"]
    with pytest.raises(InfiniteField):
        parse_curve_spec(RATIONALS, "0,0,1,-1,0").points()


def test_tangent(e5):
    f = e5.field
    at_g = e5.tangent_coeffs(_p(e5, "(0,1)").point)
    assert at_g == tuple(f.from_int(v) for v in (1, 3, 2))
    at_flex = e5.tangent_coeffs(_p(e5, "(2,1)").point)
    assert at_flex == tuple(f.from_int(v) for v in (3, 3, 1))
    assert e5.tangent_line(_p(e5, "(0,1)").point) == Line(at_g)


def test_negate(e5, f5):
    assert e5.negate(e5.infinity()) == e5.infinity()
    assert str(e5.negate(_p(e5, "(0,1)"))) == "(0,4)"
    curve = WeierstrassCurve.from_ints(f5, 0, -1, 1, 0, 0)
    assert str(curve.negate(curve.point(0, 0))) == "(0,4)"


def test_star_examples(e5):
    o = e5.infinity()
    assert e5.star(o, o) == o
    assert str(e5.star(_p(e5, "(0,1)"), _p(e5, "(2,1)"))) == "(3,1)"
    assert str(e5.star(_p(e5, "(0,1)"), _p(e5, "(0,1)"))) == "(4,3)"
    assert e5.is_flex(_p(e5, "(2,1)"))


def test_add_examples(e5):
    assert str(e5.add(_p(e5, "(0,1)"), _p(e5, "(2,1)"))) == "(3,4)"
    assert str(e5.add(_p(e5, "(0,1)"), _p(e5, "(0,1)"))) == "(4,2)"
    assert str(_p(e5, "(0,1)") + _p(e5, "(0,1)")) == "(4,2)"
    for p in e5.points():
        assert e5.add(p, e5.infinity()) == p


def test_multiply(e5):
    g = _p(e5, "(0,1)")
    assert e5.multiply(9, g) == e5.infinity()
    assert str(e5.multiply(3, g)) == "(2,1)"
    assert e5.multiply(-1, g) == e5.negate(g)


def test_star_identities_exhaustive():
    """Closure, commutativity, cancellation and compatibility with negation."""
    for curve in _test_curves():
        o = curve.infinity()
        points = curve.points()
        for p in points:
            assert curve.negate(p) == curve.star(p, o)
            assert curve.negate(curve.negate(p)) == p
            assert curve.star(p, curve.negate(p)) == o
        for p, q in itertools.product(points, repeat=2):
            pq = curve.star(p, q)
            assert curve.contains(pq.point)
            assert pq == curve.star(q, p)
            assert curve.star(pq, p) == q
            assert curve.negate(pq) == curve.star(curve.negate(p), curve.negate(q))


def test_negation_sum_and_product():
    """For affine P and -P: y + y' = -a1 x - a3 and y y' = -(x^3 + a2 x^2 + a4 x + a6)."""
    for curve in _test_curves():
        a1, a2, a3, a4, a6 = curve.coefficients
        for p in curve.points()[1:]:
            x, y = p.point.x, p.point.y
            y2 = curve.negate(p).point.y
            assert y + y2 == -a1 * x - a3
            assert y * y2 == -(x**3 + a2 * x * x + a4 * x + a6)


def test_double_root_witness():
    """Tangents meet the curve doubly at their contact point, as do chords returning P or Q."""
    for curve in _test_curves():
        points = curve.points()
        for p in points[1:]:
            form = curve.restrict_to_line(curve.tangent_line(p.point))
            assert root_multiplicity(form, p.point) >= 2
        for p, q in itertools.combinations(points, 2):
            r = curve.star(p, q)
            if r in (p, q):
                form = curve.restrict_to_line(line_through(p.point, q.point))
                assert root_multiplicity(form, r.point) >= 2


def test_never_tangent_at_both_points():
    """The chord through P != Q has a double root at P or at Q, never at both."""
    for curve in _test_curves():
        for p, q in itertools.combinations(curve.points(), 2):
            form = curve.restrict_to_line(line_through(p.point, q.point))
            at_p = root_multiplicity(form, p.point)
            at_q = root_multiplicity(form, q.point)
            assert not (at_p >= 2 and at_q >= 2)


def test_cross_curve_rejected(e5, e5_two_torsion):
    with pytest.raises(CrossCurveOperation):
        e5.star(_p(e5, "(0,1)"), _p(e5_two_torsion, "(0,0)"))


def test_parse_curve_and_points(e5, f5, f4):
    assert parse_curve_spec(f5, "0,0,0,1,1") == e5
    assert e5.spec() == "0,0,0,1,1"
    curve = parse_curve_spec(f4, "0;0;1;0;0")
    assert curve.spec() == "0,0;0,0;1,0;0,0;0,0"
    assert len(curve.points()) == 9
    with pytest.raises(ParseError):
        parse_curve_spec(f5, "0,0,1")
    with pytest.raises(PointNotOnCurve):
        _p(e5, "(1,1)")
    assert _p(e5, "[0:2:2]") == _p(e5, "(0,1)")
