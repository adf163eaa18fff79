"""Exact Gaussian elimination over a :class:`~chordcert.fields.FieldHandle`."""

import logging
from typing import List, Optional, Sequence, Tuple

from chordcert.errors import MixedFields, PreconditionViolated
from chordcert.fields import FieldElement, FieldHandle

logger = logging.getLogger(__name__)

Matrix = List[List[FieldElement]]
Vector = List[FieldElement]


def _field_of(rows: Sequence[Sequence[FieldElement]]) -> FieldHandle:
    field = None
    for row in rows:
        for entry in row:
            if field is None:
                field = entry.field
            elif entry.field != field:
                raise MixedFields(f"Matrix mixes entries of {field} and {entry.field}")
    if field is None:
        raise PreconditionViolated("Cannot infer the field of an empty matrix")
    return field


def row_echelon(m: Matrix) -> Tuple[Matrix, List[int], List[int]]:
    """Reduce a copy of ``m`` to reduced row echelon form.

    Pivots are the first nonzero entry found scanning columns left to right
    and rows top to bottom. Returns (rref, pivot columns, free columns).
    """
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    free: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        i_row = next((i for i in range(piv_r, n_rows) if not rows[i][piv_c].is_zero()), None)
        if i_row is None:
            free.append(piv_c)
            continue
        if i_row != piv_r:
            rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]
        inv = rows[piv_r][piv_c].inverse()
        rows[piv_r] = [x * inv for x in rows[piv_r]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = rows[r][piv_c]
            if fr.is_zero():
                continue
            rows[r] = [x - fr * y for x, y in zip(rows[r], rows[piv_r])]
        pivots.append(piv_c)
        piv_r += 1
    return rows, pivots, free


def rank_kernel(m: Matrix) -> Tuple[int, List[Vector]]:
    """Rank of ``m`` and a basis of its right kernel, one vector per free column."""
    if not m:
        raise PreconditionViolated("rank_kernel needs at least one row")
    field = _field_of(m)
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise PreconditionViolated("Matrix rows have different lengths")
    rref, pivots, free = row_echelon(m)
    kernel: List[Vector] = []
    for f in free:
        v = [field.zero()] * width
        v[f] = field.one()
        for r, p in enumerate(pivots):
            v[p] = -rref[r][f]
        kernel.append(v)
    return len(pivots), kernel


def rank(m: Matrix) -> int:
    return rank_kernel(m)[0]


def mat_vec(m: Matrix, v: Sequence[FieldElement]) -> Vector:
    out = []
    for row in m:
        total = row[0] * v[0]
        for a, b in zip(row[1:], v[1:]):
            total = total + a * b
        out.append(total)
    return out


def solve(a: Matrix, b: Sequence[FieldElement]) -> Optional[Vector]:
    """One solution x of a·x = b, or None when the system is inconsistent."""
    field = _field_of(a)
    augmented = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rref, pivots, _ = row_echelon(augmented)
    width = len(a[0])
    if width in pivots:
        return None
    x = [field.zero()] * width
    for r, p in enumerate(pivots):
        x[p] = rref[r][width]
    return x


def reversed_columns(m: Matrix) -> Matrix:
    return [list(reversed(row)) for row in m]


def render(m: Matrix, column_names: Optional[Sequence[str]] = None) -> str:
    """Plain-text dump of a matrix, used in error reports."""
    cells = [[str(x) for x in row] for row in m]
    header = list(column_names) if column_names else []
    width = max([len(c) for row in cells for c in row] + [len(h) for h in header] + [1])
    lines = []
    if header:
        lines.append(" ".join(h.rjust(width) for h in header))
    for row in cells:
        lines.append(" ".join(c.rjust(width) for c in row))
    return "\n".join(lines)
