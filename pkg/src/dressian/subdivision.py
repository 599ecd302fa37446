"""Regular subdivisions of matroid polytopes and their classification.

The maximal cells of the regular subdivision induced by heights w are the
tight sets at the vertices of the dual polyhedron
Q = {(x, c0) : x·e_B + c0 <= w_B for all bases B}, taken modulo its
lineality.  Vertices are enumerated by an exact pivoting walk (each edge
pivot crosses one interior wall of the subdivision), which works uniformly
for matroidal and non-matroidal height vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import NotMatroidal, NotValuated
from .matroid import Matroid, check_exchange
from .polytope import OctahedronFace, octahedra, polytope_dim
from .rational import QQ, ZERO, ONE, dot, in_row_span, nullspace, rank, rref
from .tropical import WeightVector, is_valuated


@dataclass(frozen=True)
class Subdivision:
    """Maximal cells of a regular subdivision, canonically sorted.

    Each cell is a tuple of basis tuples; every basis of the matroid occurs
    in at least one cell.
    """

    matroid: Matroid
    maximal_cells: tuple

    def __len__(self):
        return len(self.maximal_cells)


@dataclass(frozen=True)
class OctahedronLabel:
    face: OctahedronFace
    label: str  # Unsplit | Split12 | Split13 | Split23


@dataclass(frozen=True)
class Classification:
    kind: str  # Trivial | Split | ThreeSplit | Other
    hyperplane: tuple | None = None  # (normal ints, rhs int) for Split
    cell_count: int = 0


def _primitive(direction):
    """Scale a rational vector by a positive factor to primitive integers."""
    fracs = [Fraction(int(x.numerator), int(x.denominator)) for x in direction]
    denom = 1
    for f in fracs:
        denom = lcm(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


class _DualPolyhedron:
    """Pointed reduction of Q = {p : a_B · p <= w_B} with a_B = (e_B, 1)."""

    def __init__(self, w: WeightVector):
        m = w.matroid
        self.matroid = m
        self.rows_full = [
            [ONE if e in b else ZERO for e in range(1, m.n + 1)] + [ONE]
            for b in m.bases
        ]
        shift = min(w.as_list()) - 1
        self.rhs = [v - shift for v in w.as_list()]
        # Parametrize over the row space to strip the lineality of Q.
        span, _ = rref(self.rows_full)
        self.span = span
        self.r = len(span)
        self.G = [
            [dot(row, col) for col in span] for row in self.rows_full
        ]

    def tight_set(self, t):
        return tuple(
            i for i, row in enumerate(self.G) if dot(row, t) == self.rhs[i]
        )

    def _step(self, t, direction, tight):
        """Largest feasible step from t along direction; None if unbounded."""
        tight_set = set(tight)
        best = None
        for i, row in enumerate(self.G):
            if i in tight_set:
                continue
            speed = dot(row, direction)
            if speed > 0:
                ratio = (self.rhs[i] - dot(row, t)) / speed
                if best is None or ratio < best:
                    best = ratio
        return best

    def initial_vertex(self):
        t = [ZERO] * self.r
        while True:
            tight = self.tight_set(t)
            space = nullspace([self.G[i] for i in tight], ncols=self.r)
            if not space:
                return t
            d = space[0]
            step = self._step(t, d, tight)
            if step is None:
                d = [-x for x in d]
                step = self._step(t, d, tight)
            if step is None:
                raise AssertionError("dual polyhedron not pointed")
            t = [a + step * b for a, b in zip(t, d)]

    def edge_directions(self, tight):
        """Extreme rays of the feasible cone at a vertex with tight set T."""
        rows = [self.G[i] for i in tight]
        if len(tight) == self.r:
            # Simple vertex: rays are the negated columns of the inverse.
            inv = _invert(rows)
            return [[-inv[k][i] for k in range(self.r)] for i in range(self.r)]
        rays = {}
        for subset in combinations(range(len(tight)), self.r - 1):
            sub = [rows[i] for i in subset]
            space = nullspace(sub, ncols=self.r)
            if len(space) != 1:
                continue
            d = space[0]
            signs = [dot(row, d) for row in rows]
            if all(s <= 0 for s in signs):
                pass
            elif all(s >= 0 for s in signs):
                d = [-x for x in d]
            else:
                continue
            rays[_primitive(d)] = d
        return list(rays.values())

    def vertices(self):
        start = self.initial_vertex()
        seen = {tuple(start)}
        queue = [start]
        out = []
        while queue:
            t = queue.pop()
            tight = self.tight_set(t)
            out.append((t, tight))
            for d in self.edge_directions(tight):
                step = self._step(t, d, tight)
                if step is None:
                    continue
                neighbor = [a + step * b for a, b in zip(t, d)]
                key = tuple(neighbor)
                if key not in seen:
                    seen.add(key)
                    queue.append(neighbor)
        return out


def _invert(rows):
    n = len(rows)
    aug = [list(r) + [ONE if j == i else ZERO for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise AssertionError("singular tight matrix at a simple vertex")
    return [row[n:] for row in red]


def regular_subdivision(w: WeightVector) -> Subdivision:
    """Maximal cells of the regular subdivision of P_M with heights w.

    Accepts any weight vector; whether the result is matroidal is a
    separate verdict (see is_matroidal).
    """
    m = w.matroid
    dual = _DualPolyhedron(w)
    bases = m.bases
    cells = set()
    covered = set()
    for t, tight in dual.vertices():
        cell = tuple(bases[i] for i in tight)
        cells.add(cell)
        covered.update(tight)
    assert len(covered) == len(bases), "cells must cover every basis"
    return Subdivision(m, tuple(sorted(cells)))


def is_matroidal(s: Subdivision):
    """(True, None) or (False, offending cell): exchange axiom per cell."""
    for cell in s.maximal_cells:
        if check_exchange([frozenset(b) for b in cell]) is not None:
            return False, cell
    return True, None


def skeleton_labels(w: WeightVector):
    """Split state of every octahedral 3-face under a valuated w."""
    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    labels = []
    for face in octahedra(w.matroid):
        i, j, l, m_ = face.t
        s = face.s
        sums = [
            w[s + (i, j)] + w[s + (l, m_)],
            w[s + (i, l)] + w[s + (j, m_)],
            w[s + (i, m_)] + w[s + (j, l)],
        ]
        low = min(sums)
        minimizers = [k + 1 for k in range(3) if sums[k] == low]
        if len(minimizers) == 3:
            label = "Unsplit"
        else:
            label = f"Split{minimizers[0]}{minimizers[1]}"
        labels.append(OctahedronLabel(face, label))
    return labels


def _canonical_hyperplane(m: Matroid, normal, rhs):
    """Canonical integral form of a separating hyperplane.

    The normal is defined modulo vectors constant on all bases (always
    including all-ones) and up to sign.  Both orientations are shifted by a
    multiple of all-ones so the smallest coefficient is zero, scaled to
    primitive integers, and the lexicographically smaller coefficient
    vector wins.
    """
    candidates = []
    for sign in (1, -1):
        g = [sign * x for x in normal]
        c = sign * rhs
        low = min(g)
        g = [x - low for x in g]
        c = c - low * m.d
        prim = _primitive(list(g) + [c])
        candidates.append((prim[:-1], prim[-1]))
    return min(candidates)


def _split_hyperplane(m: Matroid, common):
    """Integral hyperplane through the bases of the common wall `common`."""
    rows = [
        [ONE if e in b else ZERO for e in range(1, m.n + 1)] + [-ONE]
        for b in common
    ]
    wall_space = nullspace(rows, ncols=m.n + 1)
    all_rows = [
        [ONE if e in b else ZERO for e in range(1, m.n + 1)] + [-ONE]
        for b in m.bases
    ]
    trivial = nullspace(all_rows, ncols=m.n + 1)
    for vec in wall_space:
        if not in_row_span(trivial, vec):
            return _canonical_hyperplane(m, vec[: m.n], vec[m.n])
    raise AssertionError("no separating hyperplane for the wall")


def classify_subdivision(s: Subdivision) -> Classification:
    """Trivial / Split(hyperplane) / ThreeSplit / Other for matroidal s."""
    ok, cell = is_matroidal(s)
    if not ok:
        raise NotMatroidal(f"cell {cell[:3]}... is not a matroid")
    m = s.matroid
    cells = [set(c) for c in s.maximal_cells]
    count = len(cells)
    if count == 1:
        return Classification("Trivial", cell_count=1)
    if count == 2:
        common = sorted(cells[0] & cells[1])
        return Classification(
            "Split", hyperplane=_split_hyperplane(m, common), cell_count=2
        )
    if count == 3:
        common = sorted(cells[0] & cells[1] & cells[2])
        if common:
            b0 = common[0]
            diffs = [
                [
                    (1 if e in b else 0) - (1 if e in b0 else 0)
                    for e in range(1, m.n + 1)
                ]
                for b in common[1:]
            ]
            if rank(diffs) == polytope_dim(m) - 2:
                return Classification("ThreeSplit", cell_count=3)
    return Classification("Other", cell_count=count)
