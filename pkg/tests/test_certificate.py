"""Tests for routing and certificate documents."""

import json

from chordcert.certificate import Certificate, canonical_json, certify, render_text
from chordcert.curve import parse_curve_point


def _certify(curve, p, q, r):
    return certify(curve, *(parse_curve_point(curve, t) for t in (p, q, r)))


def test_group_law_checks_come_first(e5):
    cert = _certify(e5, "(0,1)", "(4,2)", "(3,4)")
    assert [c.name for c in cert.checks[:2]] == ["group_law_lhs", "group_law_rhs"]
    assert cert.checks[0].witnesses["(P+Q)+R"] == "(4,3)"


def test_routes(e5):
    assert _certify(e5, "O", "(2,1)", "(0,1)").case_or_lemma == "case1"
    swapped = _certify(e5, "(0,1)", "(2,1)", "O")
    assert swapped.path == "obvious"
    assert swapped.swap_pr

    generic = _certify(e5, "(0,1)", "(4,2)", "(3,4)")
    assert generic.path == "prop1"
    assert generic.case_or_lemma == "branch1"

    flex = _certify(e5, "(2,1)", "(2,1)", "(0,1)")
    assert flex.paths() == ["reduction:lemma9", "reduction:lemma7"]


def test_exercised_patterns(e5):
    assert _certify(e5, "(0,1)", "(4,2)", "(3,4)").exercised_patterns() == []
    assert _certify(e5, "O", "(2,1)", "(0,1)").exercised_patterns() == []
    flex = _certify(e5, "(2,1)", "(2,1)", "(0,1)")
    assert {"A", "C"} <= set(flex.exercised_patterns())
    assert _certify(e5, "(2,1)", "(0,1)", "(4,2)").exercised_patterns() == ["B", "C"]
    # P and R trade places, so B and C show up as F and E
    mirror = _certify(e5, "(4,2)", "(0,1)", "(2,1)")
    assert mirror.swap_pr
    assert mirror.exercised_patterns() == ["E", "F"]


def test_two_torsion_triple_uses_rank_argument(e5_two_torsion):
    cert = _certify(e5_two_torsion, "(4,0)", "(2,1)", "(2,1)")
    assert cert.path == "prop1"
    assert cert.verdict


def test_canonical_json_is_stable(e5):
    cert = _certify(e5, "(2,1)", "(2,1)", "(0,1)")
    text = canonical_json(cert)
    data = json.loads(text)
    assert data["checks"][0]["pass"] is True
    assert "passed" not in data["checks"][0]
    assert list(data) == sorted(data)
    assert canonical_json(Certificate.model_validate(data)) == text
    assert text.endswith("}\n")


def test_render_text(e5):
    cert = _certify(e5, "(2,1)", "(2,1)", "(0,1)")
    lines = render_text(cert).splitlines()
    assert lines[0] == "✓ reduction lemma9: ((2,1), (2,1), (0,1))"
    assert any(line.startswith("  ✓ reduction lemma7") for line in lines)
    assert "  ✓ group_law_lhs: (P+Q)+R = (P*Q)*(-R)" in lines
