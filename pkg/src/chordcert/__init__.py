"""chordcert - exact chord-tangent arithmetic with associativity certificates."""

from chordcert._version import __version__
from chordcert.certificate import Certificate, Check, canonical_json, certify, render_text
from chordcert.curve import CurvePoint, WeierstrassCurve, parse_curve_point, parse_curve_spec
from chordcert.fields import RATIONALS, build_extension, build_prime_field, parse_field_spec
from chordcert.harness import run_sweep, verify_all_triples, verify_group_axioms

__all__ = [
    "RATIONALS",
    "Certificate",
    "Check",
    "CurvePoint",
    "WeierstrassCurve",
    "__version__",
    "build_extension",
    "build_prime_field",
    "canonical_json",
    "certify",
    "parse_curve_point",
    "parse_curve_spec",
    "parse_field_spec",
    "render_text",
    "run_sweep",
    "verify_all_triples",
    "verify_group_axioms",
]
