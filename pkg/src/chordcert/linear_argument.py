"""Certification by linear algebra when no three of P1..P9 coincide.

Two auxiliary cubics are built from lines through the ten points::

    F1 = line(P, -P) * line(R, Q) * line(P*Q, -R)
    F2 = line(R, -R) * line(P, Q) * line(R*Q, -P)

Both vanish at P1..P8, and so does the curve equation E. The matrix H stacks
the monomial vector of every simple point and the two derivative rows of every
doubled point; its kernel is two dimensional, so the extended coefficient
vector of F2 is a combination of those of E and F1. Evaluating that relation
at P9 forces P9 onto line(R*Q, -P), which means P9 = P10.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from chordcert.curve import CurvePoint, WeierstrassCurve
from chordcert.documents import Certificate, NodeBuilder, check_depth
from chordcert.errors import (
    KernelDimUnexpected,
    PointAtInfinity,
    PreconditionViolated,
    RankDeficient,
    SpanFailure,
    TripleCoincidence,
    WitnessExtractionFailed,
)
from chordcert.fields import FieldElement
from chordcert.geometry import (
    MONOMIALS,
    CubicForm,
    Line,
    Triple,
    cubic_from_lines,
    dot,
    line_through,
    monomial_vector,
)
from chordcert.linalg import (
    Matrix,
    Vector,
    mat_vec,
    rank,
    rank_kernel,
    render,
    reversed_columns,
    solve,
)
from chordcert.ten_points import TenPoints, prop1_hypothesis

logger = logging.getLogger(__name__)

Lines = Tuple[Line, Line, Line]


@dataclass(frozen=True)
class IndexSets:
    """Partition of 1..8 into simple points (I) and doubled points (J).

    ``partner`` pairs each j in J with the index in I naming the same point.
    """
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    partner: Tuple[Tuple[int, int], ...] = ()

    def partner_of(self, j: int) -> int:
        return dict(self.partner)[j]


def _keep_and_drop(i: int, j: int) -> Tuple[int, int]:
    for preferred in ((2, 4), (3, 5)):
        if i in preferred:
            return i, j
        if j in preferred:
            return j, i
    if i == 6 and j in (7, 8):
        return j, i
    return i, j


def build_index_sets(tp: TenPoints) -> IndexSets:
    """Assign each of P1..P8 to I or J.

    Of two coinciding points, 2 or 4 stays in I, then 3 or 5; a pair inside
    6..8 sends 6 to J; any other pair keeps the smaller index in I.
    """
    if not prop1_hypothesis(tp, 9):
        raise TripleCoincidence("Three of P1..P9 coincide; the rank argument does not apply")
    groups: Dict[CurvePoint, List[int]] = {}
    for i in range(1, 9):
        groups.setdefault(tp[i], []).append(i)
    simple: List[int] = []
    doubled: List[int] = []
    partner: Dict[int, int] = {}
    for members in groups.values():
        if len(members) == 1:
            simple.append(members[0])
            continue
        keep, drop = _keep_and_drop(*members)
        simple.append(keep)
        doubled.append(drop)
        partner[drop] = keep
    idx = IndexSets(tuple(sorted(simple)), tuple(sorted(doubled)), tuple(sorted(partner.items())))
    logger.debug(f"Index sets I={list(idx.I)} J={list(idx.J)}")
    return idx


@dataclass
class MatrixH:
    rows: Matrix
    row_labels: List[str]
    column_labels: List[str]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.column_labels)

    def render(self) -> str:
        width = max(len(label) for label in self.row_labels)
        body = render(self.rows, self.column_labels).split("\n")
        header, lines = body[0], body[1:]
        out = [" " * (width + 1) + header]
        out.extend(f"{label.ljust(width)} {line}" for label, line in zip(self.row_labels, lines))
        return "\n".join(out)


def build_matrix_h(tp: TenPoints, idx: IndexSets) -> MatrixH:
    """Rows v[i] for i in I and v[j,X], v[j,Y] for j in J, in index order."""
    curve = tp.curve
    zero = curve.field.zero()
    rows: Matrix = []
    labels: List[str] = []
    for i in range(1, 9):
        point = tp[i].point
        if i in idx.I:
            rows.append(monomial_vector(point, "M") + [zero] * len(idx.J))
            labels.append(f"v[{i}]")
            continue
        tx, ty, _ = curve.tangent_coeffs(point)
        column = idx.J.index(i)
        for which, t in (("X", tx), ("Y", ty)):
            extra = [zero] * len(idx.J)
            extra[column] = -t
            rows.append(monomial_vector(point, f"M_{which}") + extra)
            labels.append(f"v[{i},{which}]")
    columns = list(MONOMIALS) + [f"P{j}" for j in idx.J]
    return MatrixH(rows, labels, columns)


def chord_or_tangent(curve: WeierstrassCurve, a: CurvePoint, b: CurvePoint) -> Line:
    if a == b:
        return curve.tangent_line(a.point)
    return line_through(a.point, b.point)


def f1_lines(tp: TenPoints) -> Lines:
    c = tp.curve
    return (
        chord_or_tangent(c, tp[2], tp[3]),
        chord_or_tangent(c, tp[4], tp[6]),
        chord_or_tangent(c, tp[7], tp[5]),
    )


def f2_lines(tp: TenPoints) -> Lines:
    c = tp.curve
    return (
        chord_or_tangent(c, tp[4], tp[5]),
        chord_or_tangent(c, tp[2], tp[6]),
        chord_or_tangent(c, tp[8], tp[3]),
    )


def through_first(lines: Sequence[Line], point: CurvePoint) -> Optional[Lines]:
    """Reorder ``lines`` so that the first one passing through ``point`` leads."""
    for k, line in enumerate(lines):
        if line.contains(point.point):
            rest = [m for n, m in enumerate(lines) if n != k]
            return line, rest[0], rest[1]
    return None


def proportionality(curve: WeierstrassCurve, point: CurvePoint,
                    form: CubicForm) -> Optional[FieldElement]:
    """The λ with (M_X·c, M_Y·c) = λ·(T_X, T_Y) at ``point``, or None if there is none."""
    tx, ty, _ = curve.tangent_coeffs(point.point)
    dx, dy, _ = form.derivative_values(point.point)
    if not tx.is_zero():
        lam = dx / tx
        return lam if dy == lam * ty else None
    if not ty.is_zero():
        return dy / ty if dx.is_zero() else None
    raise WitnessExtractionFailed(f"T_X and T_Y both vanish at {point}")


@dataclass(frozen=True)
class MultipleIntersection:
    algebraic: bool
    geometric: bool
    lam: Optional[FieldElement] = None


def multiple_intersection(curve: WeierstrassCurve, lines: Lines,
                          point: CurvePoint) -> MultipleIntersection:
    """Decide whether ``point`` is a multiple intersection of the curve with l1*l2*l3.

    ``algebraic`` is the proportionality of the derivative rows of the cubic
    to the tangent; ``geometric`` says l1 is the tangent at the point or one
    of l2, l3 passes through it. Both are reported so callers can compare.
    """
    if point.is_infinity():
        raise PointAtInfinity("Multiple intersections are only defined away from O")
    l1, l2, l3 = lines
    if not l1.contains(point.point):
        raise PreconditionViolated(f"The first line {l1} must pass through {point}")
    lam = proportionality(curve, point, cubic_from_lines(l1, l2, l3))
    geometric = (
        l1 == curve.tangent_line(point.point)
        or l2.contains(point.point)
        or l3.contains(point.point)
    )
    return MultipleIntersection(lam is not None, geometric, lam)


@dataclass
class Lemma4Witnesses:
    """Extra kernel coordinates making (c || w) annihilated by H."""
    w_E: Vector = field(default_factory=list)
    w_F1: Vector = field(default_factory=list)
    w_F2: Vector = field(default_factory=list)
    lambdas: Dict[int, Triple] = field(default_factory=dict)


def lemma4_witnesses(tp: TenPoints, idx: IndexSets, f1: Lines, f2: Lines) -> Lemma4Witnesses:
    curve = tp.curve
    witnesses = Lemma4Witnesses()
    for j in idx.J:
        point = tp[j]
        lam_e = proportionality(curve, point, curve.cubic_form())
        if lam_e is None:
            raise WitnessExtractionFailed(
                f"Curve derivatives at P{j} are not proportional to the tangent"
            )
        found: List[FieldElement] = []
        for name, lines in (("F1", f1), ("F2", f2)):
            ordered = through_first(lines, point)
            if ordered is None:
                raise WitnessExtractionFailed(f"No factor of {name} passes through P{j} = {point}")
            mi = multiple_intersection(curve, ordered, point)
            if not mi.algebraic or mi.lam is None:
                raise WitnessExtractionFailed(
                    f"P{j} = {point} is not a multiple intersection of E and {name}"
                )
            found.append(mi.lam)
        witnesses.w_E.append(lam_e)
        witnesses.w_F1.append(found[0])
        witnesses.w_F2.append(found[1])
        witnesses.lambdas[j] = (lam_e, found[0], found[1])
    return witnesses


def _vector_text(v: Sequence[FieldElement]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def check_linear_relation(builder: NodeBuilder, h: MatrixH, c_e: Vector, c_f1: Vector,
                          c_f2: Vector) -> Tuple[FieldElement, FieldElement]:
    """Record the kernel argument on ``h`` and return (μ, ν) with ĉ_F2 = μ·ĉ_E + ν·ĉ_F1."""
    n_rows, n_cols = h.shape
    dump = h.render()
    r, kernel = rank_kernel(h.rows)
    logger.debug(f"rank(H) = {r} for a {n_rows}x{n_cols} matrix")
    builder.record(
        "rank_H", f"rank(H) = {n_rows}", r == n_rows,
        {"rank": str(r), "rows": str(n_rows)}, RankDeficient, dump,
    )
    r_rev = rank(reversed_columns(h.rows))
    builder.record(
        "rank_H_reversed", "column-reversed elimination agrees", r_rev == r,
        {"rank": str(r), "rank_reversed": str(r_rev)}, RankDeficient, dump,
    )
    builder.record(
        "kernel_dim", "dim ker H = 2", len(kernel) == 2,
        {"kernel_dim": str(len(kernel))}, KernelDimUnexpected, dump,
    )
    for name, vec in (("E", c_e), ("F1", c_f1), ("F2", c_f2)):
        product = mat_vec(h.rows, vec)
        builder.record(
            f"kernel_{name}", f"H·ĉ_{name} = 0", all(x.is_zero() for x in product),
            {f"c_{name}": _vector_text(vec), "product": _vector_text(product)}, SpanFailure, dump,
        )
    xy2 = c_f1[MONOMIALS.index("XY^2")]
    logger.debug(f"c_F1[XY^2] = {xy2}")
    pair_rank = rank([c_e[:10], c_f1[:10]])
    builder.record(
        "independence", "c_E and c_F1 are linearly independent", pair_rank == 2,
        {"rank": str(pair_rank), "c_F1[XY^2]": str(xy2)}, SpanFailure, dump,
    )
    columns = [[a, b] for a, b in zip(c_e, c_f1)]
    solution = solve(columns, c_f2)
    builder.record(
        "span", "ĉ_F2 = μ·ĉ_E + ν·ĉ_F1", solution is not None,
        {"mu": str(solution[0]), "nu": str(solution[1])} if solution else {}, SpanFailure, dump,
    )
    assert solution is not None
    mu, nu = solution
    logger.debug(f"Span coefficients mu={mu} nu={nu}")
    return mu, nu


def certify_prop1(tp: TenPoints, side: int = 9, depth: int = 1) -> Certificate:
    """Run the rank argument on the P9 side, or on the P10 side by swapping P and R."""
    check_depth(depth, "prop1")
    swap = side == 10
    oriented = tp.swapped() if swap else tp
    builder = NodeBuilder(oriented, "prop1", "prop1", swap_pr=swap)
    curve = oriented.curve
    with builder.guard():
        builder.record(
            "hypothesis", "no three of P1..P9 coincide", prop1_hypothesis(oriented, 9),
            oriented.labels(), TripleCoincidence,
        )
        idx = build_index_sets(oriented)
        builder.record(
            "index_sets", "1, 2, 4 in I; I and J partition 1..8",
            {1, 2, 4} <= set(idx.I) and sorted(idx.I + idx.J) == list(range(1, 9)),
            {"I": str(list(idx.I)), "J": str(list(idx.J))},
        )
        h = build_matrix_h(oriented, idx)
        f1, f2 = f1_lines(oriented), f2_lines(oriented)
        form_e, form_f1, form_f2 = curve.cubic_form(), cubic_from_lines(*f1), cubic_from_lines(*f2)
        w = lemma4_witnesses(oriented, idx, f1, f2)
        c_e = list(form_e.c) + w.w_E
        c_f1 = list(form_f1.c) + w.w_F1
        c_f2 = list(form_f2.c) + w.w_F2
        mu, nu = check_linear_relation(builder, h, c_e, c_f1, c_f2)

        p9 = oriented[9]
        m9 = monomial_vector(p9.point, "M")
        f2_at_p9 = dot(m9, form_f2.c)
        evidence = {
            "E(P9)": str(dot(m9, form_e.c)), "F1(P9)": str(dot(m9, form_f1.c)),
            "F2(P9)": str(f2_at_p9), "mu": str(mu), "nu": str(nu),
        }
        builder.record(
            "F2_at_P9", "F2(P9) = μ·E(P9) + ν·F1(P9) = 0", f2_at_p9.is_zero(), evidence
        )

        matches = [i for i in range(1, 9) if oriented[i] == p9]
        if not matches:
            builder.case_or_lemma = "branch1"
            _branch_distinct(builder, oriented, f2)
        else:
            builder.case_or_lemma = "branch2"
            _branch_coincident(builder, oriented, matches[0], f1, f2, mu, nu)
        return builder.conclude()


def _branch_distinct(builder: NodeBuilder, tp: TenPoints, f2: Lines) -> None:
    p9 = tp[9]
    l_rr, l_pq, l_last = f2
    at = {"P9": str(p9)}
    builder.record("R|-R misses P9", "line(R, -R) does not pass through P9",
                   not l_rr.contains(p9.point), at)
    builder.record("P|Q misses P9", "line(P, Q) does not pass through P9",
                   not l_pq.contains(p9.point), at)
    builder.record("R*Q|-P through P9", "line(R*Q, -P) passes through P9",
                   l_last.contains(p9.point), at)
    builder.equal("third_point", "P9 = (R*Q)*(-P)",
                  ("P9", p9), ("(R*Q)*(-P)", tp.curve.star(tp[8], tp[3])))


def _branch_coincident(builder: NodeBuilder, tp: TenPoints, i: int, f1: Lines, f2: Lines,
                       mu: FieldElement, nu: FieldElement) -> None:
    curve = tp.curve
    p9 = tp[9]
    builder.equal("coincidence", f"P9 = P{i}", ("P9", p9), (f"P{i}", tp[i]))
    lam_e = proportionality(curve, p9, curve.cubic_form())
    builder.record("E_tangent_at_P9", "E is proportional to its tangent at P9", lam_e is not None,
                   {"lambda_E": str(lam_e)})
    ordered_f1 = through_first(f1, p9)
    builder.record("F1_through_P9", "a factor of F1 passes through P9",
                   ordered_f1 is not None, {"P9": str(p9)})
    assert ordered_f1 is not None and lam_e is not None
    mi1 = multiple_intersection(curve, ordered_f1, p9)
    builder.record(
        "F1_multiple", "P9 is a multiple intersection of E and F1", mi1.algebraic and mi1.geometric,
        {
            "algebraic": str(mi1.algebraic),
            "geometric": str(mi1.geometric),
            "lambda_F1": str(mi1.lam),
        },
    )
    assert mi1.lam is not None
    lam_f2 = mu * lam_e + nu * mi1.lam
    tx, ty, _ = curve.tangent_coeffs(p9.point)
    dx, dy, _ = cubic_from_lines(*f2).derivative_values(p9.point)
    builder.record(
        "F2_proportional", "(M_X·c_F2, M_Y·c_F2) = (μ·λ_E + ν·λ_F1)·(T_X, T_Y) at P9",
        dx == lam_f2 * tx and dy == lam_f2 * ty,
        {"lambda_F2": str(lam_f2), "M_X.c_F2": str(dx), "M_Y.c_F2": str(dy)},
    )
    ordered_f2 = through_first(f2, p9)
    builder.record("F2_through_P9", "a factor of F2 passes through P9",
                   ordered_f2 is not None, {"P9": str(p9)})
    assert ordered_f2 is not None
    mi2 = multiple_intersection(curve, ordered_f2, p9)
    builder.record(
        "F2_multiple", "P9 is a multiple intersection of E and F2", mi2.algebraic and mi2.geometric,
        {
            "algebraic": str(mi2.algebraic),
            "geometric": str(mi2.geometric),
            "lambda_F2": str(mi2.lam),
        },
    )
