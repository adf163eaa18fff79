"""Tests for the rank argument on triples without a threefold coincidence."""

import itertools
import random

import pytest

from chordcert.curve import parse_curve_point
from chordcert.documents import NodeBuilder
from chordcert.errors import (
    PointAtInfinity,
    PreconditionViolated,
    RankDeficient,
    SpanFailure,
    TripleCoincidence,
)
from chordcert.fields import build_prime_field
from chordcert.geometry import cubic_from_lines, lines_of_plane
from chordcert.harness import exhaustive_curves, sampled_curves
from chordcert.linalg import mat_vec, rank_kernel
from chordcert.linear_argument import (
    IndexSets,
    build_index_sets,
    build_matrix_h,
    certify_prop1,
    check_linear_relation,
    f1_lines,
    f2_lines,
    lemma4_witnesses,
    multiple_intersection,
)
from chordcert.ten_points import TenPoints


def _tp(curve, p, q, r):
    return TenPoints.build(curve, *(parse_curve_point(curve, t) for t in (p, q, r)))


def _check(cert, name):
    return next(c for c in cert.checks if c.name == name)


def test_index_sets_all_distinct(e5):
    tp = _tp(e5, "(0,1)", "(4,2)", "(3,4)")
    assert build_index_sets(tp) == IndexSets(I=tuple(range(1, 9)), J=())


def test_index_sets_follow_pairing_rule(e5):
    """P3 = P4 and P6 = P8 give I = {1,2,4,5,7,8} and J = {3,6}."""
    pts = {text: parse_curve_point(e5, text) for text in
           ("O", "(0,1)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(3,4)")}
    order = ["O", "(0,1)", "(0,4)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(2,4)", "(3,4)", "(3,4)"]
    tp = TenPoints(e5, tuple(pts[t] for t in order))
    idx = build_index_sets(tp)
    assert idx.I == (1, 2, 4, 5, 7, 8)
    assert idx.J == (3, 6)
    assert idx.partner_of(3) == 4
    assert idx.partner_of(6) == 8


def test_index_sets_reject_triple_coincidence(e5):
    # the flex (2,1) makes P2 = P6 = P7
    tp = _tp(e5, "(2,1)", "(2,1)", "(0,1)")
    with pytest.raises(TripleCoincidence):
        build_index_sets(tp)


def test_matrix_h_generic(e5):
    tp = _tp(e5, "(0,1)", "(4,2)", "(3,4)")
    h = build_matrix_h(tp, build_index_sets(tp))
    assert h.shape == (8, 10)
    r, kernel = rank_kernel(h.rows)
    assert r == 8
    assert len(kernel) == 2
    assert all(x.is_zero() for x in mat_vec(h.rows, list(e5.cubic_form().c)))


def test_matrix_h_with_doubled_points(e5_two_torsion):
    """P = (4,0) has order 2 and Q = R, so P2 = P3 and P4 = P6."""
    tp = _tp(e5_two_torsion, "(4,0)", "(2,1)", "(2,1)")
    idx = build_index_sets(tp)
    assert idx.J == (3, 6)
    h = build_matrix_h(tp, idx)
    assert h.shape == (10, 12)
    assert h.row_labels[2:4] == ["v[3,X]", "v[3,Y]"]
    for row in h.rows:
        extra = row[10:]
        if sum(1 for x in extra if not x.is_zero()) > 1:
            pytest.fail("a derivative row touches more than one tangent column")

    f1, f2 = f1_lines(tp), f2_lines(tp)
    w = lemma4_witnesses(tp, idx, f1, f2)
    assert len(w.w_E) == len(w.w_F1) == len(w.w_F2) == 2
    forms = (e5_two_torsion.cubic_form(), cubic_from_lines(*f1), cubic_from_lines(*f2))
    for form, extra in zip(forms, (w.w_E, w.w_F1, w.w_F2)):
        product = mat_vec(h.rows, list(form.c) + extra)
        assert all(x.is_zero() for x in product)


def test_prop1_generic_branch_one(e5):
    tp = _tp(e5, "(0,1)", "(4,2)", "(3,4)")
    cert = certify_prop1(tp)
    assert cert.path == "prop1"
    assert cert.case_or_lemma == "branch1"
    assert cert.verdict
    assert cert.all_checks_pass()
    assert _check(cert, "rank_H").witnesses["rank"] == "8"
    assert _check(cert, "kernel_dim").witnesses["kernel_dim"] == "2"
    assert set(_check(cert, "span").witnesses) == {"mu", "nu"}


def test_prop1_two_torsion(e5_two_torsion):
    tp = _tp(e5_two_torsion, "(4,0)", "(2,1)", "(2,1)")
    cert = certify_prop1(tp)
    assert cert.verdict
    assert _check(cert, "index_sets").witnesses["J"] == "[3, 6]"
    assert _check(cert, "rank_H").witnesses["rank"] == "10"
    assert _check(cert, "kernel_dim").witnesses["kernel_dim"] == "2"


def test_prop1_side_ten_swaps(e5):
    tp = _tp(e5, "(3,4)", "(4,2)", "(0,1)")
    cert = certify_prop1(tp, side=10)
    assert cert.swap_pr
    assert cert.triple == ["(3,4)", "(4,2)", "(0,1)"]
    assert cert.verdict


def test_tampered_matrix_is_rejected(e5):
    """Flipping one entry of H breaks the kernel argument and reports the matrix."""
    tp = _tp(e5, "(0,1)", "(4,2)", "(3,4)")
    idx = build_index_sets(tp)
    h = build_matrix_h(tp, idx)
    h.rows[0][0] = h.rows[0][0] + 1
    f1, f2 = f1_lines(tp), f2_lines(tp)
    builder = NodeBuilder(tp, "prop1", "prop1")
    with pytest.raises((RankDeficient, SpanFailure)) as exc_info:
        check_linear_relation(
            builder, h, list(e5.cubic_form().c),
            list(cubic_from_lines(*f1).c), list(cubic_from_lines(*f2).c),
        )
    assert "v[1]" in exc_info.value.matrix_dump


def test_multiple_intersection_cases(e5):
    p = parse_curve_point(e5, "(0,1)")
    tangent = e5.tangent_line(p.point)
    lines = lines_of_plane(e5.field)
    through = [l for l in lines if l.contains(p.point)]
    avoiding = [l for l in lines if not l.contains(p.point)]
    chord = next(l for l in through if l != tangent)

    mi = multiple_intersection(e5, (chord, through[0], avoiding[0]), p)
    assert mi.algebraic and mi.geometric
    assert mi.lam == 0

    mi = multiple_intersection(e5, (tangent, avoiding[0], avoiding[1]), p)
    assert mi.algebraic and mi.geometric

    mi = multiple_intersection(e5, (chord, avoiding[0], avoiding[1]), p)
    assert not mi.algebraic and not mi.geometric

    with pytest.raises(PointAtInfinity):
        multiple_intersection(e5, (chord, chord, chord), e5.infinity())
    with pytest.raises(PreconditionViolated):
        multiple_intersection(e5, (avoiding[0], chord, chord), p)


def _configurations(curve):
    lines = lines_of_plane(curve.field)
    for p in curve.points()[1:]:
        for l1 in lines:
            if l1.contains(p.point):
                for l2, l3 in itertools.product(lines, repeat=2):
                    yield (l1, l2, l3), p


def test_multiple_intersection_equivalence_small(e2):
    """Algebraic and geometric conditions agree on every configuration over F_2."""
    for lines, p in _configurations(e2):
        mi = multiple_intersection(e2, lines, p)
        assert mi.algebraic == mi.geometric


def test_multiple_intersection_equivalence_random_f5():
    f5 = build_prime_field(5)
    rng = random.Random(2024)
    curves = sampled_curves(f5, 10, seed=3)
    lines = lines_of_plane(f5)
    for _ in range(1000):
        curve = rng.choice(curves)
        affine = curve.points()[1:]
        if not affine:
            continue
        p = rng.choice(affine)
        l1 = rng.choice([l for l in lines if l.contains(p.point)])
        mi = multiple_intersection(curve, (l1, rng.choice(lines), rng.choice(lines)), p)
        assert mi.algebraic == mi.geometric


@pytest.mark.slow
def test_multiple_intersection_equivalence_exhaustive():
    """Every configuration on every smooth curve over F_2 and F_3."""
    for field in (build_prime_field(2), build_prime_field(3)):
        for curve in exhaustive_curves(field):
            for lines, p in _configurations(curve):
                mi = multiple_intersection(curve, lines, p)
                assert mi.algebraic == mi.geometric
