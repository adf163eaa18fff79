"""Reductions for triples where three of the ten points coincide.

When three points among P1..P8 together with P9, and also three together
with P10, coincide, the coincidence is one of six patterns::

    A: P2 = P6 = P7     B: P3 = P8 = P9     C: P3 = P8 = P10
    D: P4 = P6 = P8     E: P5 = P7 = P9     F: P5 = P7 = P10

D, E and F are A, C and B with P and R exchanged. Each lemma either closes
with a short identity chain or hands a related triple to a child node.
"""

import logging
from typing import Callable

from chordcert.documents import Certificate, NodeBuilder, check_depth
from chordcert.errors import ReductionContradiction, UnmatchedPattern
from chordcert.linear_argument import certify_prop1
from chordcert.obvious import certify_obvious
from chordcert.ten_points import PATTERNS, TenPoints, active_patterns, prop1_hypothesis

logger = logging.getLogger(__name__)

Replay = Callable[[TenPoints, bool, int], Certificate]


def _holds(tp: TenPoints, pattern: str) -> bool:
    return tp.equal(*PATTERNS[pattern])


def _pattern_check(builder: NodeBuilder, tp: TenPoints, pattern: str, expected: bool = True,
                   error=None) -> None:
    i, j, k = PATTERNS[pattern]
    claim = f"P{i} = P{j} = P{k}" if expected else f"not P{i} = P{j} = P{k}"
    witnesses = {f"P{n}": str(tp[n]) for n in (i, j, k)}
    builder.record(f"pattern_{pattern}" if expected else f"not_pattern_{pattern}", claim,
                   _holds(tp, pattern) == expected, witnesses, error)


def _derived(tp: TenPoints, depth: int, replay: Replay) -> Certificate:
    """Certificate for a triple built inside a lemma: obvious case first, else ``replay``."""
    check_depth(depth, "derived triple")
    found = certify_obvious(tp)
    if found is not None:
        return found
    return replay(tp, False, depth)


def lemma6(tp: TenPoints, swap: bool = False, depth: int = 1) -> Certificate:
    """P3 = P8 = P9 (or P5 = P7 = P10 after swapping P and R)."""
    check_depth(depth, "lemma6")
    t = tp.swapped() if swap else tp
    star, neg = t.curve.star, t.curve.negate
    b = NodeBuilder(t, "reduction", "lemma6", swap_pr=swap)
    with b.guard():
        _pattern_check(b, t, "B")
        if prop1_hypothesis(t, 10):
            b.record("P10_side", "no three of P1..P8, P10 coincide", True, {})
            b.attach(certify_prop1(t, side=10, depth=depth + 1))
        elif _holds(t, "C"):
            _pattern_check(b, t, "C")
            b.equal("P9_is_P8", "P9 = P8", ("P9", t[9]), ("P8", t[8]))
            b.equal("P8_is_P10", "P8 = P10", ("P8", t[8]), ("P10", t[10]))
        elif _holds(t, "A"):
            b.equal("A_forces_O", "R = (-P)*P = O", ("R", t.R), ("(-P)*P", star(t[3], t.P)),
                    error=ReductionContradiction)
            raise ReductionContradiction(f"Patterns B and A together force R = O for {t.triple()}")
        elif _holds(t, "F"):
            _pattern_check(b, t, "F")
            b.equal("lhs", "P9 = (-R)*(-R)", ("P9", t[9]), ("(-R)*(-R)", star(t[5], t[5])))
            b.equal("rhs", "-R = (R*Q)*(-P) = (-P)*(-P)",
                    ("-R", t[5]), ("(-P)*(-P)", star(t[3], t[3])))
            b.equal("cross", "(-P)*(-R) = -P", ("(-P)*(-R)", star(t[3], t[5])), ("-P", t[3]))
            b.equal("negatives", "-P = -R", ("-P", t[3]), ("-R", t[5]))
        else:
            raise UnmatchedPattern(
                f"Pattern B without a second pattern on the P10 side: {active_patterns(t)}"
            )
        return b.conclude()


def lemma7(tp: TenPoints, swap: bool = False, depth: int = 1) -> Certificate:
    """P3 = P8 = P10 while P5 = P7 = P9 does not hold."""
    check_depth(depth, "lemma7")
    t = tp.swapped() if swap else tp
    b = NodeBuilder(t, "reduction", "lemma7", swap_pr=swap)
    with b.guard():
        _pattern_check(b, t, "C")
        _pattern_check(b, t, "E", expected=False)
        if prop1_hypothesis(t, 9):
            b.record("P9_side", "no three of P1..P9 coincide", True, {})
            b.attach(certify_prop1(t, side=9, depth=depth + 1))
        elif _holds(t, "B"):
            _pattern_check(b, t, "B")
            b.equal("P9_is_P8", "P9 = P8", ("P9", t[9]), ("P8", t[8]))
        elif _holds(t, "A"):
            b.equal("A_forces_O", "R = (-P)*Q = (-P)*P = O", ("R", t.R),
                    ("(-P)*P", t.curve.star(t[3], t.P)), error=ReductionContradiction)
            raise ReductionContradiction(f"Patterns C and A together force R = O for {t.triple()}")
        else:
            raise UnmatchedPattern(
                f"Pattern C without a second pattern on the P9 side: {active_patterns(t)}"
            )
        return b.conclude()


def _primed(t: TenPoints) -> TenPoints:
    """The triple (-P, P*R, R)."""
    curve = t.curve
    return TenPoints.build(curve, curve.negate(t.P), curve.star(t.P, t.R), t.R)


def _close_from_primed(b: NodeBuilder, t: TenPoints, primed: TenPoints) -> None:
    star, neg = t.curve.star, t.curve.negate
    P, R = t.P, t.R
    pr = star(P, R)
    b.equal("primed_closed", "P'9 = P'10", ("P'9", primed[9]), ("P'10", primed[10]))
    b.equal("primed_value", "((-P)*(P*R))*(-R) = P", ("P'9", primed[9]), ("P", P))
    b.equal("cancel", "(-P)*(P*R) = P*(-R)",
            ("(-P)*(P*R)", star(neg(P), pr)), ("P*(-R)", star(P, neg(R))))
    b.equal("lhs", "P9 = (P*Q)*(-R) = P*(-R)", ("P9", t[9]), ("P*(-R)", star(P, neg(R))))
    b.equal("rhs", "P10 = (R*Q)*(-P) = (-P)*(P*R)",
            ("P10", t[10]), ("(-P)*(P*R)", star(neg(P), pr)))


def _primed_setup(b: NodeBuilder, t: TenPoints) -> TenPoints:
    primed = _primed(t)
    P = t.P
    b.equal("primed_P3", "P'3 = -P' = P", ("P'3", primed[3]), ("P", P))
    b.equal("primed_P8", "P'8 = R*(P*R) = P", ("P'8", primed[8]), ("P", P))
    b.equal("primed_P10", "P'10 = P*P = P", ("P'10", primed[10]), ("P", P))
    return primed


def lemma8(tp: TenPoints, swap: bool = False, depth: int = 1) -> Certificate:
    """P2 = P6 = P7 and P4 = P5: replay through P' = -P, Q' = P*R, R' = R."""
    check_depth(depth, "lemma8")
    t = tp.swapped() if swap else tp
    b = NodeBuilder(t, "reduction", "lemma8", swap_pr=swap)
    with b.guard():
        _pattern_check(b, t, "A")
        b.equal("two_torsion_R", "R = -R", ("P4", t[4]), ("P5", t[5]))
        primed = _primed_setup(b, t)
        _pattern_check(b, primed, "E", expected=False, error=ReductionContradiction)
        b.attach(_derived(primed, depth + 1, lemma7))
        _close_from_primed(b, t, primed)
        return b.conclude()


def lemma9(tp: TenPoints, swap: bool = False, depth: int = 1) -> Certificate:
    """P2 = P6 = P7 without P4 = P5."""
    check_depth(depth, "lemma9")
    t = tp.swapped() if swap else tp
    star, neg = t.curve.star, t.curve.negate
    P, R = t.P, t.R
    b = NodeBuilder(t, "reduction", "lemma9", swap_pr=swap)
    with b.guard():
        _pattern_check(b, t, "A")
        primed = _primed_setup(b, t)
        if not _holds(primed, "E"):
            _pattern_check(b, primed, "E", expected=False)
            b.attach(_derived(primed, depth + 1, lemma7))
            _close_from_primed(b, t, primed)
            return b.conclude()

        _pattern_check(b, primed, "E")
        pr = star(P, R)
        b.equal("primed_P7", "-R = (-P)*(P*R)", ("-R", neg(R)), ("P'7", star(neg(P), pr)))
        b.equal("negated_pair", "P*R = (-P)*(-R)", ("P*R", pr), ("(-P)*(-R)", star(neg(P), neg(R))))
        b.equal("self_negative", "P*R = -(P*R)", ("P*R", pr), ("-(P*R)", neg(pr)))
        doubled = TenPoints.build(t.curve, neg(P), neg(P), pr)
        b.equal("double_primed_P7", "P''7 = (-P)*(-P) = -P",
                ("P''7", doubled[7]), ("P''2", doubled[2]))
        b.equal("double_primed_P6", "P''6 = -P", ("P''6", doubled[6]), ("P''2", doubled[2]))
        b.equal("double_primed_P4", "P''4 = P''5", ("P''4", doubled[4]), ("P''5", doubled[5]))
        b.attach(_derived(doubled, depth + 1, lemma8))
        b.equal("double_primed_closed", "P''9 = P''10",
                ("P''9", doubled[9]), ("P''10", doubled[10]))
        b.equal("double_primed_P9", "P''9 = -R", ("P''9", doubled[9]), ("-R", neg(R)))
        b.equal("double_primed_P10", "P''10 = ((P*R)*(-P))*P",
                ("P''10", doubled[10]), ("((P*R)*(-P))*P", star(star(pr, neg(P)), P)))
        b.equal("lhs", "P9 = (P*Q)*(-R) = P*(-R)", ("P9", t[9]), ("P*(-R)", star(P, neg(R))))
        b.equal("cancel", "P*(-R) = (P*R)*(-P)",
                ("P*(-R)", star(P, neg(R))), ("(P*R)*(-P)", star(pr, neg(P))))
        b.equal("rhs", "P10 = (R*Q)*(-P) = (P*R)*(-P)",
                ("P10", t[10]), ("(P*R)*(-P)", star(pr, neg(P))))
        return b.conclude()


def lemma10(tp: TenPoints, swap: bool = False, depth: int = 1) -> Certificate:
    """P3 = P8 = P10 (or P5 = P7 = P9 after swapping): rule out E, then apply lemma 7."""
    check_depth(depth, "lemma10")
    t = tp.swapped() if swap else tp
    b = NodeBuilder(t, "reduction", "lemma10", swap_pr=swap)
    with b.guard():
        _pattern_check(b, t, "C")
        _pattern_check(b, t, "E", expected=False, error=ReductionContradiction)
        b.attach(lemma7(t, False, depth + 1))
        return b.conclude()


def reduce_coincidence(tp: TenPoints, depth: int = 1) -> Certificate:
    """Route a triple with a three-point coincidence to the lemma that settles it."""
    patterns = active_patterns(tp)
    logger.debug(f"Coincidence patterns {patterns} for {tp.triple()}")
    if "B" in patterns:
        return lemma6(tp, False, depth)
    if "F" in patterns:
        return lemma6(tp, True, depth)
    if "C" in patterns:
        return lemma10(tp, False, depth)
    if "E" in patterns:
        return lemma10(tp, True, depth)
    if "A" in patterns:
        replay = lemma8 if tp.equal(4, 5) else lemma9
        return replay(tp, False, depth)
    if "D" in patterns:
        replay = lemma8 if tp.equal(2, 3) else lemma9
        return replay(tp, True, depth)
    logger.error(f"No reduction pattern matches {tp.triple()}: {tp.labels()}")
    raise UnmatchedPattern(f"No coincidence pattern holds for {tp.triple()}")
