"""Certify associativity on a concrete triple.

The route is decided in order: one of the ten obvious coincidences, the rank
argument on the P9 side, the rank argument on the P10 side, and finally the
coincidence reductions. The resulting tree is compared with the direct
computation of both sides before it is returned.
"""

import logging

from chordcert.curve import CurvePoint, WeierstrassCurve
from chordcert.documents import (
    Certificate,
    Check,
    canonical_json,
    render_text,
)
from chordcert.errors import CertificateFailure, CertificationError
from chordcert.linear_argument import certify_prop1
from chordcert.obvious import certify_obvious
from chordcert.reduction import reduce_coincidence
from chordcert.ten_points import TenPoints, prop1_hypothesis

logger = logging.getLogger(__name__)

__all__ = [
    "Certificate",
    "Check",
    "build_ten_points",
    "canonical_json",
    "certify",
    "render_text",
    "route",
]


def build_ten_points(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint,
                     r: CurvePoint) -> TenPoints:
    return TenPoints.build(curve, p, q, r)


def route(tp: TenPoints) -> Certificate:
    cert = certify_obvious(tp)
    if cert is not None:
        return cert
    if prop1_hypothesis(tp, 9):
        logger.debug("Routing to the rank argument on the P9 side")
        return certify_prop1(tp, side=9)
    if prop1_hypothesis(tp, 10):
        logger.debug("Routing to the rank argument on the P10 side")
        return certify_prop1(tp, side=10)
    logger.debug("Routing to the coincidence reductions")
    return reduce_coincidence(tp)


def _group_law_checks(curve: WeierstrassCurve, tp: TenPoints) -> list:
    p, q, r = tp.triple()
    sum_left = curve.add(curve.add(p, q), r)
    sum_right = curve.add(p, curve.add(q, r))
    return [
        Check(
            name="group_law_lhs", claim="(P+Q)+R = (P*Q)*(-R)",
            witnesses={"(P+Q)+R": str(sum_left), "P9": str(tp[9])}, passed=sum_left == tp[9],
        ),
        Check(
            name="group_law_rhs", claim="P+(Q+R) = (R*Q)*(-P)",
            witnesses={"P+(Q+R)": str(sum_right), "P10": str(tp[10])}, passed=sum_right == tp[10],
        ),
    ]


def certify(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint, r: CurvePoint) -> Certificate:
    """Build and cross-check the certificate that (P*Q)*(-R) = (R*Q)*(-P).

    Certification errors propagate with the partial tree on ``exc.partial``.
    """
    tp = build_ten_points(curve, p, q, r)
    try:
        node = route(tp)
    except CertificationError as exc:
        logger.error(f"Certification of ({p}, {q}, {r}) on {curve} failed: {exc}")
        raise
    checks = _group_law_checks(curve, tp)
    cert = node.model_copy(update={"checks": checks + list(node.checks)})
    direct = tp[9] == tp[10]
    if cert.verdict != direct or not cert.all_checks_pass():
        raise CertificateFailure(
            f"Certificate verdict {cert.verdict} disagrees with direct comparison {direct} "
            f"for ({p}, {q}, {r}) on {curve}",
            canonical_json(cert),
        )
    logger.debug(f"Certified ({p}, {q}, {r}) via {' > '.join(cert.paths())}")
    return cert
