"""Exact rational scalars and small dense linear algebra.

All verdicts in this package are computed over the rationals; no floating
point is used anywhere.  gmpy2.mpq is used when available (it is an order of
magnitude faster than fractions.Fraction), with a pure-stdlib fallback.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    QQ = Fraction

ZERO = QQ(0)
ONE = QQ(1)


def to_rational(value):
    """Coerce an int, Fraction, mpq or 'p/q' string to the working type."""
    if isinstance(value, str):
        return QQ(Fraction(value))
    return QQ(value)


def rational_str(value) -> str:
    """Serialize a rational: bare integer when possible, else 'p/q'."""
    f = Fraction(int(value.numerator), int(value.denominator))
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def rref(rows):
    """Reduced row echelon form.

    Takes a list of rows (lists of rationals) and returns (reduced_rows,
    pivot_columns).  Zero rows are dropped.  The input is not modified.
    """
    mat = [[QQ(x) for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols=None):
    """Basis of the right null space of the given row list.

    `ncols` must be supplied when `rows` may be empty.
    """
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for empty row list")
        return [[ONE if j == i else ZERO for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for i, p in enumerate(pivots):
            vec[p] = -red[i][f]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """One solution x of rows @ x = rhs, or None if inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = red[i][ncols]
    return x


def dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def mat_vec(rows, v):
    return [dot(row, v) for row in rows]


def in_row_span(rows, vec) -> bool:
    """Whether `vec` lies in the span of `rows`."""
    if all(x == 0 for x in vec):
        return True
    if not rows:
        return False
    return rank(rows) == rank(list(rows) + [list(vec)])


def span_equal(rows_a, rows_b) -> bool:
    ra = rank(rows_a)
    rb = rank(rows_b)
    return ra == rb == rank(list(rows_a) + list(rows_b))


class IncrementalRank:
    """Incremental Gaussian elimination for sparse integer rows.

    Rows are dicts {column: value}.  Tracks the rank of everything added so
    far; used where the row count is large but an early exit on a known rank
    bound is expected.
    """

    def __init__(self):
        self.pivot_rows = {}  # pivot column -> reduced row dict

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def add(self, row: dict) -> bool:
        """Reduce `row` against the current basis; return True if rank grew."""
        row = {c: QQ(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            pivot = self.pivot_rows.get(c)
            if pivot is None:
                inv = ONE / row[c]
                self.pivot_rows[c] = {k: v * inv for k, v in row.items()}
                return True
            factor = row[c]
            for k, v in pivot.items():
                new = row.get(k, ZERO) - factor * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
        return False
