"""The ten points attached to a triple (P, Q, R).

P1 = O, P2 = P, P3 = -P, P4 = R, P5 = -R, P6 = Q, P7 = P*Q, P8 = R*Q,
P9 = (P*Q)*(-R) and P10 = (R*Q)*(-P). Associativity of + on the triple is
the equality P9 = P10.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from chordcert.curve import CurvePoint, WeierstrassCurve

PATTERNS: Dict[str, Tuple[int, int, int]] = {
    "A": (2, 6, 7),
    "B": (3, 8, 9),
    "C": (3, 8, 10),
    "D": (4, 6, 8),
    "E": (5, 7, 9),
    "F": (5, 7, 10),
}

# Name of each pattern after P and R trade places.
MIRRORED: Dict[str, str] = {"A": "D", "B": "F", "C": "E", "D": "A", "E": "C", "F": "B"}


@dataclass(frozen=True)
class TenPoints:
    curve: WeierstrassCurve
    points: Tuple[CurvePoint, ...]

    @classmethod
    def build(cls, curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint,
              r: CurvePoint) -> "TenPoints":
        star = curve.star
        p7 = star(p, q)
        p8 = star(r, q)
        p9 = star(p7, curve.negate(r))
        p10 = star(p8, curve.negate(p))
        points = (curve.infinity(), p, curve.negate(p), r, curve.negate(r), q, p7, p8, p9, p10)
        return cls(curve, points)

    def __getitem__(self, index: int) -> CurvePoint:
        """1-based access, matching the point names P1..P10."""
        if not 1 <= index <= 10:
            raise IndexError(f"Point index {index} outside 1..10")
        return self.points[index - 1]

    @property
    def P(self) -> CurvePoint:
        return self.points[1]

    @property
    def Q(self) -> CurvePoint:
        return self.points[5]

    @property
    def R(self) -> CurvePoint:
        return self.points[3]

    def triple(self) -> Tuple[CurvePoint, CurvePoint, CurvePoint]:
        return self.P, self.Q, self.R

    def swapped(self) -> "TenPoints":
        """The ten points of (R, Q, P); P9 and P10 trade places."""
        order = (0, 3, 4, 1, 2, 5, 7, 6, 9, 8)
        return TenPoints(self.curve, tuple(self.points[i] for i in order))

    def equal(self, *indices: int) -> bool:
        first = self[indices[0]]
        return all(self[i] == first for i in indices[1:])

    def labels(self) -> Dict[str, str]:
        return {f"P{i}": str(self[i]) for i in range(1, 11)}


def lhs(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint, r: CurvePoint) -> CurvePoint:
    """(P*Q)*(-R), which equals (P+Q)+R."""
    return curve.star(curve.star(p, q), curve.negate(r))


def rhs(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint, r: CurvePoint) -> CurvePoint:
    """(R*Q)*(-P), which equals P+(Q+R)."""
    return curve.star(curve.star(r, q), curve.negate(p))


def coincidence_patterns(tp: TenPoints) -> Dict[str, bool]:
    """Which of the six triple coincidences hold."""
    return {name: tp.equal(*indices) for name, indices in PATTERNS.items()}


def active_patterns(tp: TenPoints) -> List[str]:
    return [name for name, holds in coincidence_patterns(tp).items() if holds]


def prop1_hypothesis(tp: TenPoints, side: int = 9) -> bool:
    """True when no three of P1..P8 together with P9 (or P10) coincide."""
    if side not in (9, 10):
        raise ValueError(f"side must be 9 or 10, got {side}")
    counts = Counter(tp[i] for i in list(range(1, 9)) + [side])
    return max(counts.values()) < 3
