"""The ten coincidences under which P9 = P10 follows from short identity chains.

Each numbered cell (i, j) of :data:`TABLE` names a coincidence P_i = P_j and
the case whose chain settles it. Cells marked as swapped are the mirror image
of another cell under exchanging P and R; their chain runs on the swapped
ten points.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from chordcert.curve import CurvePoint
from chordcert.documents import Certificate, NodeBuilder
from chordcert.ten_points import TenPoints

logger = logging.getLogger(__name__)

# (i, j) -> (case, run on swapped points, trigger form)
TABLE: Dict[Tuple[int, int], Tuple[int, bool, str]] = {
    (1, 2): (1, False, "P=O"),
    (1, 3): (1, False, "-P=O"),
    (1, 4): (1, True, "P=O"),
    (1, 5): (1, True, "-P=O"),
    (1, 6): (2, False, "Q=O"),
    (1, 7): (4, False, "P*Q=O"),
    (1, 8): (4, True, "P*Q=O"),
    (1, 9): (7, False, ""),
    (1, 10): (7, True, ""),
    (2, 4): (3, False, "P=R"),
    (2, 5): (5, False, "P=-R"),
    (2, 8): (6, False, "P=R*Q"),
    (2, 9): (8, False, ""),
    (2, 10): (9, False, ""),
    (3, 4): (5, False, "-P=R"),
    (3, 5): (3, False, "-P=-R"),
    (3, 6): (4, False, "Q=-P"),
    (3, 7): (2, False, "P*Q=-P"),
    (4, 7): (6, False, "R=P*Q"),
    (4, 9): (9, True, ""),
    (4, 10): (8, True, ""),
    (5, 6): (4, True, "Q=-P"),
    (5, 8): (2, True, "P*Q=-P"),
    (6, 9): (10, False, ""),
    (6, 10): (10, True, ""),
    (7, 8): (3, False, "P*Q=R*Q"),
}


def triggered_cells(tp: TenPoints) -> List[Tuple[int, int]]:
    return [cell for cell in TABLE if tp[cell[0]] == tp[cell[1]]]


def classify_obvious(tp: TenPoints) -> Optional[Tuple[int, Tuple[int, int]]]:
    """The lowest-numbered case that fires, with the first cell triggering it."""
    cells = triggered_cells(tp)
    if not cells:
        return None
    cell = min(cells, key=lambda c: (TABLE[c][0], c))
    return TABLE[cell][0], cell


class _Chain:
    """Records the identities of one case on a (possibly swapped) orientation."""

    def __init__(self, builder: NodeBuilder, tp: TenPoints, swapped: bool):
        self.b = builder
        self.t = tp
        self.swapped = swapped
        self.star = tp.curve.star
        self.neg = tp.curve.negate

    def eq(self, step: str, claim: str, left: Tuple[str, CurvePoint],
           right: Tuple[str, CurvePoint]) -> None:
        prefix = "swap." if self.swapped else ""
        note = "[P<->R] " if self.swapped else ""
        self.b.equal(f"{prefix}{step}", f"{note}{claim}", left, right)

    def flipped(self) -> "_Chain":
        return _Chain(self.b, self.t.swapped(), not self.swapped)


def _case1(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    P, Q, R, O = t.P, t.Q, t.R, t[1]
    if via == "-P=O":
        c.eq("case1.derive", "P = -(-P) = -O = O", ("P", P), ("-O", neg(O)))
    c.eq("case1.trigger", "P = O", ("P", P), ("O", O))
    qr = star(neg(Q), neg(R))
    c.eq("case1.lhs", "LHS = (-Q)*(-R)", ("P9", t[9]), ("(-Q)*(-R)", qr))
    c.eq("case1.negation", "(-Q)*(-R) = -(Q*R)", ("(-Q)*(-R)", qr), ("-(Q*R)", neg(star(Q, R))))
    c.eq("case1.rhs", "RHS = (R*Q)*O = -(Q*R)", ("P10", t[10]), ("-(Q*R)", neg(star(Q, R))))


def _case2(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    P, Q, R, O = t.P, t.Q, t.R, t[1]
    if via == "P*Q=-P":
        c.eq("case2.premise", "P*Q = -P", ("P7", t[7]), ("P3", t[3]))
        c.eq("case2.derive", "Q = (P*Q)*P = (-P)*P = O", ("Q", Q), ("(-P)*P", star(neg(P), P)))
    c.eq("case2.trigger", "Q = O", ("Q", Q), ("O", O))
    c.eq("case2.lhs", "LHS = (P*O)*(-R) = (-P)*(-R)",
         ("P9", t[9]), ("(-P)*(-R)", star(neg(P), neg(R))))
    c.eq("case2.rhs", "RHS = (R*O)*(-P) = (-R)*(-P)",
         ("P10", t[10]), ("(-R)*(-P)", star(neg(R), neg(P))))


def _case3(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    P, Q, R = t.P, t.Q, t.R
    if via == "-P=-R":
        c.eq("case3.derive", "P = -(-P) = -(-R) = R", ("-(-P)", neg(t[3])), ("-(-R)", neg(t[5])))
    elif via == "P*Q=R*Q":
        c.eq("case3.premise", "P*Q = R*Q", ("P7", t[7]), ("P8", t[8]))
        c.eq("case3.derive", "P = (P*Q)*Q = (R*Q)*Q = R",
             ("(P*Q)*Q", star(t[7], Q)), ("(R*Q)*Q", star(t[8], Q)))
    c.eq("case3.trigger", "P = R", ("P", P), ("R", R))


def _case4(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    P, Q, R, O = t.P, t.Q, t.R, t[1]
    if via == "P*Q=O":
        c.eq("case4.premise", "P*Q = O", ("P7", t[7]), ("O", O))
        c.eq("case4.derive", "Q = (P*Q)*P = O*P = -P", ("Q", Q), ("O*P", star(O, P)))
    c.eq("case4.trigger", "Q = -P", ("Q", Q), ("-P", t[3]))
    c.eq("case4.lhs", "LHS = O*(-R) = R", ("P9", t[9]), ("R", R))
    c.eq("case4.rhs", "RHS = (R*Q)*Q = R", ("P10", t[10]), ("(R*Q)*Q", star(t[8], Q)))
    c.eq("case4.cancel", "(R*Q)*Q = R", ("(R*Q)*Q", star(t[8], Q)), ("R", R))


def _case5(c: _Chain, via: str) -> None:
    t, star = c.t, c.star
    P, Q, R = t.P, t.Q, t.R
    if via == "-P=R":
        c.eq("case5.derive", "P = -(-P) = -R", ("P", P), ("-R", t[5]))
    c.eq("case5.trigger", "P = -R", ("P", P), ("-R", t[5]))
    c.eq("case5.lhs", "LHS = (P*Q)*P = Q", ("P9", t[9]), ("(P*Q)*P", star(t[7], P)))
    c.eq("case5.rhs", "RHS = (R*Q)*R = Q", ("P10", t[10]), ("(R*Q)*R", star(t[8], R)))
    c.eq("case5.cancel", "(R*Q)*R = Q", ("(R*Q)*R", star(t[8], R)), ("Q", Q))


def _case6(c: _Chain, via: str) -> None:
    t = c.t
    P, Q, R, O = t.P, t.Q, t.R, t[1]
    if via == "P=R*Q":
        c.eq("case6.trigger", "P = R*Q", ("P", P), ("P8", t[8]))
        c.eq("case6.derive", "R = (R*Q)*Q = P*Q", ("R", R), ("P7", t[7]))
    else:
        c.eq("case6.trigger", "R = P*Q", ("R", R), ("P7", t[7]))
        c.eq("case6.derive", "P = (P*Q)*Q = R*Q", ("P", P), ("P8", t[8]))
    c.eq("case6.lhs", "LHS = R*(-R) = O", ("P9", t[9]), ("O", O))
    c.eq("case6.rhs", "RHS = P*(-P) = O", ("P10", t[10]), ("O", O))


def _case7(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    c.eq("case7.trigger", "O = (P*Q)*(-R)", ("P9", t[9]), ("O", t[1]))
    c.eq("case7.derive", "P*Q = O*(-R) = R", ("P7", t[7]), ("O*(-R)", star(t[1], neg(t.R))))
    _case6(c, "R=P*Q")


def _case8(c: _Chain, via: str) -> None:
    t, star = c.t, c.star
    c.eq("case8.trigger", "P = (P*Q)*(-R)", ("P", t.P), ("P9", t[9]))
    c.eq("case8.derive", "-R = (P*Q)*P = Q", ("-R", t[5]), ("(P*Q)*P", star(t[7], t.P)))
    _case4(c.flipped(), "Q=-P")


def _case9(c: _Chain, via: str) -> None:
    t, star, neg = c.t, c.star, c.neg
    c.eq("case9.trigger", "P = (R*Q)*(-P)", ("P", t.P), ("P10", t[10]))
    c.eq("case9.derive", "R*Q = P*(-P) = O", ("P8", t[8]), ("P*(-P)", star(t.P, neg(t.P))))
    _case4(c.flipped(), "P*Q=O")


def _case10(c: _Chain, via: str) -> None:
    t, star = c.t, c.star
    c.eq("case10.trigger", "Q = (P*Q)*(-R)", ("Q", t.Q), ("P9", t[9]))
    c.eq("case10.derive", "-R = (P*Q)*Q = P", ("-R", t[5]), ("(P*Q)*Q", star(t[7], t.Q)))
    _case5(c, "P=-R")


CHAINS: Dict[int, Callable[[_Chain, str], None]] = {
    1: _case1, 2: _case2, 3: _case3, 4: _case4, 5: _case5,
    6: _case6, 7: _case7, 8: _case8, 9: _case9, 10: _case10,
}


def replay_obvious(tp: TenPoints, case: int, cell: Tuple[int, int]) -> Certificate:
    """Replay the chain of ``case`` as triggered by ``cell``."""
    _, swap, via = TABLE[cell]
    oriented = tp.swapped() if swap else tp
    builder = NodeBuilder(oriented, "obvious", f"case{case}", swap_pr=swap)
    with builder.guard():
        builder.record(
            "trigger_cell",
            f"P{cell[0]} = P{cell[1]}",
            tp[cell[0]] == tp[cell[1]],
            {f"P{cell[0]}": str(tp[cell[0]]), f"P{cell[1]}": str(tp[cell[1]])},
        )
        CHAINS[case](_Chain(builder, oriented, False), via)
        return builder.conclude()


def certify_obvious(tp: TenPoints) -> Optional[Certificate]:
    """An obvious-case certificate, or None when no table cell fires."""
    found = classify_obvious(tp)
    if found is None:
        return None
    case, cell = found
    logger.debug(f"Obvious case {case} via P{cell[0]} = P{cell[1]}")
    return replay_obvious(tp, case, cell)
