"""Exact rational simplex, used for strict-cone feasibility checks.

The only LP shape needed here is: maximize a slack epsilon subject to
G z + epsilon <= 0 and epsilon <= 1, with z free.  Free variables are split
into nonnegative pairs, which keeps the origin feasible, so a single-phase
tableau simplex with Bland's rule suffices (and always terminates).
"""

from __future__ import annotations

from .rational import QQ, ZERO, ONE, dot, nullspace


def maximize(c, A, b):
    """max c·x subject to A x <= b, x >= 0, with b >= 0 entrywise.

    Returns (value, x).  The caller must ensure the objective is bounded
    (all uses here cap it by an explicit constraint row).
    """
    m = len(A)
    n = len(c)
    if any(bi < 0 for bi in b):
        raise ValueError("rhs must be nonnegative")
    # Tableau rows: [A | I | b]; objective row: [-c | 0 | 0].
    tableau = [
        [QQ(x) for x in row] + [ONE if j == i else ZERO for j in range(m)] + [QQ(b[i])]
        for i, row in enumerate(A)
    ]
    obj = [-QQ(x) for x in c] + [ZERO] * m + [ZERO]
    basis = [n + i for i in range(m)]
    total = n + m

    while True:
        # Bland: entering = lowest-index column with negative reduced cost.
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coeff = tableau[i][enter]
            if coeff > 0:
                ratio = tableau[i][total] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("objective unbounded; caller violated the cap")
        pivot = tableau[leave][enter]
        inv = ONE / pivot
        tableau[leave] = [x * inv for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter]:
                factor = tableau[i][enter]
                tableau[i] = [
                    x - factor * y for x, y in zip(tableau[i], tableau[leave])
                ]
        if obj[enter]:
            factor = obj[enter]
            obj = [x - factor * y for x, y in zip(obj, tableau[leave])]
        basis[leave] = enter

    x = [ZERO] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][total]
    return obj[total], x


def relative_interior_point(equalities, stricts, dim):
    """A point y with eq·y = 0 for all equalities and f·y < 0 for all stricts.

    Returns a list of rationals, or None when the open cone is empty.  With
    no strict rows the zero vector is returned (the relative interior of a
    linear subspace contains the origin).
    """
    basis = nullspace([list(r) for r in equalities], ncols=dim)
    if not basis:
        return None if stricts else [ZERO] * dim
    if not stricts:
        return [ZERO] * dim

    nu = len(basis)
    reduced = [[dot(f, col) for col in basis] for f in stricts]
    # Variables: z split into z+ and z-, then epsilon; maximize epsilon
    # subject to G z + epsilon <= 0 and epsilon <= 1.
    c = [ZERO] * (2 * nu) + [ONE]
    A = []
    b = []
    for row in reduced:
        A.append(list(row) + [-x for x in row] + [ONE])
        b.append(ZERO)
    A.append([ZERO] * (2 * nu) + [ONE])
    b.append(ONE)
    value, x = maximize(c, A, b)
    if value <= 0:
        return None
    z = [x[k] - x[nu + k] for k in range(nu)]
    point = [ZERO] * dim
    for k, col in enumerate(basis):
        if z[k]:
            point = [p + z[k] * v for p, v in zip(point, col)]
    return point
