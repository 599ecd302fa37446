"""The local Dressian as a polyhedral fan, plus structure maps.

Cones are cut out by choosing, for every relation with three finite terms,
which pair of terms attains the minimum (or all three).  Relations with two
finite terms force equalities globally.  A depth-first search over state
assignments with exact-LP pruning enumerates all nonempty cones; maximal
ones are kept by witness containment.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotABasis, NotParallel, NotValuated
from .matroid import Matroid, connected_components, delete, direct_sum
from .polytope import octahedra
from .rational import QQ, ZERO, ONE, IncrementalRank, dot, rank
from .simplex import relative_interior_point
from .subdivision import Subdivision, regular_subdivision
from .tropical import (
    WeightVector,
    is_valuated,
    lineality_dim,
    relations,
)

STATES = ("AllEqual", "Min12", "Min13", "Min23")


@dataclass(frozen=True)
class Cone:
    """A relatively open cone of the local Dressian in basis coordinates."""

    states: tuple  # one state per three-finite relation, canonical order
    equalities: tuple  # rows over R^bases
    strict_inequalities: tuple  # rows f with f·w < 0 on the cone
    dim: int  # dimension modulo the all-ones vector
    witness: tuple  # relative-interior point


@dataclass(frozen=True)
class Fan:
    matroid: Matroid
    relation_keys: tuple  # (s, quad) per three-finite relation
    lineality_dim: int
    maximal_cones: tuple
    is_linear_space: bool
    complete: bool = True


@dataclass(frozen=True)
class ForcedSubspace:
    equations: tuple  # rows over R^bases
    dim: int  # solution dimension modulo all-ones
    equals_lineality: bool


def _basis_index(m: Matroid):
    return {b: i for i, b in enumerate(m.bases)}

def _term_row(index, nb, plus, minus):
    row = [ZERO] * nb
    for b in plus:
        row[index[b]] += ONE
    for b in minus:
        row[index[b]] -= ONE
    return row


def _relation_rows(m: Matroid):
    """Per relation: term-difference rows d12, d13, d23 over R^bases.

    Returns (forced, three_finite) where forced collects the equality rows
    of two-finite relations and three_finite maps each all-finite relation
    to its key and difference rows.
    """
    index = _basis_index(m)
    nb = len(m.bases)
    forced = []
    three = []
    for r in relations(m, skip_all_infinite=True):
        fin = [k for k in range(3) if r.finite[k]]
        if len(fin) == 2:
            a, b = fin
            forced.append(_term_row(index, nb, r.terms[a], r.terms[b]))
        elif len(fin) == 3:
            d12 = _term_row(index, nb, r.terms[0], r.terms[1])
            d13 = _term_row(index, nb, r.terms[0], r.terms[2])
            d23 = _term_row(index, nb, r.terms[1], r.terms[2])
            three.append(((r.s, r.quad), (d12, d13, d23)))
    return forced, three


def forced_equalities(m: Matroid) -> ForcedSubspace:
    """Solution space of the equalities forced by two-finite relations.

    A square face never subdivides, so both finite terms must be equal for
    every weight vector in the local Dressian.  The space always contains
    the lineality space; equals_lineality reports when nothing else is
    left, which certifies a linear local Dressian.
    """
    index = _basis_index(m)
    nb = len(m.bases)
    lin = lineality_dim(m) + 1  # back to honest dimension in R^bases
    # The rank can never exceed nb - lin, so stop once it is reached.
    tracker = IncrementalRank()
    for r in relations(m, skip_all_infinite=True):
        fin = [k for k in range(3) if r.finite[k]]
        if len(fin) != 2:
            continue
        a, b = fin
        row = {}
        for t in r.terms[a]:
            row[index[t]] = row.get(index[t], 0) + 1
        for t in r.terms[b]:
            row[index[t]] = row.get(index[t], 0) - 1
        tracker.add(row)
        if tracker.rank == nb - lin:
            break
    # Independent equations, as a reduced basis of the equation space.
    equations = tuple(
        tuple(rd.get(i, ZERO) for i in range(nb))
        for _, rd in sorted(tracker.pivot_rows.items())
    )
    solution_dim = nb - tracker.rank
    return ForcedSubspace(equations, solution_dim - 1, solution_dim == lin)


def _dfs_order(three):
    """Process relations that share coordinates with earlier ones first."""
    n = len(three)
    if n <= 1:
        return list(range(n))
    supports = [
        frozenset(
            i for row in rows for i, x in enumerate(row) if x
        )
        for _, rows in three
    ]
    order = [0]
    placed = {0}
    touched = set(supports[0])
    while len(order) < n:
        pick = None
        for k in range(n):
            if k in placed:
                continue
            if supports[k] & touched:
                pick = k
                break
        if pick is None:
            pick = next(k for k in range(n) if k not in placed)
        order.append(pick)
        placed.add(pick)
        touched |= supports[pick]
    return order


# state -> (indices into (d12, d13, d23) made equalities, strict rows builder)
def _state_rows(state, rows):
    d12, d13, d23 = rows
    if state == "AllEqual":
        return [d12, d13], []
    if state == "Min12":
        return [d12], [d13]  # t1 = t2 < t3
    if state == "Min13":
        return [d13], [d12]  # t1 = t3 < t2
    return [d23], [[-x for x in d12]]  # t2 = t3 < t1


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _search(m, budget, stop_on_split=False):
    """DFS over state assignments; returns (leaves, complete, witness).

    Leaves are (states, equalities, stricts, dim, witness).  When
    stop_on_split is set the search tries split states first and stops at
    the first feasible complete assignment with at least one split.
    """
    forced, three = _relation_rows(m)
    nb = len(m.bases)
    order = _dfs_order(three)
    leaves = []
    complete = True
    split_witness = None

    def recurse(pos, equalities, stricts, states):
        nonlocal complete, split_witness
        if split_witness is not None:
            return
        if pos == len(order):
            point = relative_interior_point(equalities, stricts, nb)
            if point is None:
                return
            sol_dim = nb - rank(list(equalities))
            leaf = (
                tuple(states[k] for k in range(len(three))),
                tuple(map(tuple, equalities[len(forced):])),
                tuple(map(tuple, stricts)),
                sol_dim - 1,
                tuple(point),
            )
            leaves.append(leaf)
            if stop_on_split and any(s != "AllEqual" for s in leaf[0]):
                split_witness = leaf
            return
        k = order[pos]
        _, rows = three[k]
        candidates = STATES if not stop_on_split else (
            "Min12", "Min13", "Min23", "AllEqual")
        for state in candidates:
            if not budget.spend():
                complete = False
                return
            eq, st = _state_rows(state, rows)
            new_eq = equalities + eq
            new_st = stricts + st
            if relative_interior_point(new_eq, new_st, nb) is None:
                continue
            states[k] = state
            recurse(pos + 1, new_eq, new_st, states)
            del states[k]
            if split_witness is not None:
                return

    recurse(0, list(forced), [], {})
    keys = tuple(key for key, _ in three)
    return keys, leaves, complete, split_witness


def enumerate_fan(m: Matroid, budget: int = 10 ** 6) -> Fan:
    """All inclusion-maximal cones of the local Dressian, modulo lineality.

    The output order is deterministic (sorted by state vector).  A budget
    overrun returns the cones found so far flagged incomplete.
    """
    keys, leaves, complete, _ = _search(m, _Budget(budget))
    lin = lineality_dim(m)
    maximal = []
    for a in leaves:
        dominated = False
        for b in leaves:
            if b is a or b[3] < a[3]:
                continue
            if all(dot(row, a[4]) == 0 for row in b[1]) and all(
                dot(row, a[4]) <= 0 for row in b[2]
            ) and b[0] != a[0]:
                dominated = True
                break
        if not dominated:
            maximal.append(a)
    maximal.sort(key=lambda leaf: leaf[0])
    cones = tuple(
        Cone(states=s, equalities=eq, strict_inequalities=st, dim=d, witness=w)
        for s, eq, st, d, w in maximal
    )
    linear = complete and len(cones) == 1 and cones[0].dim == lin
    return Fan(m, keys, lin, cones, linear, complete)


@dataclass(frozen=True)
class IndecomposabilityVerdict:
    verdict: str  # Indecomposable | Decomposable | Unknown
    witness: WeightVector | None = None
    subdivision: Subdivision | None = None
    reason: str = ""
    nodes_used: int = 0


def is_indecomposable(m: Matroid, budget: int = 10 ** 6) -> IndecomposabilityVerdict:
    """Decide whether P_M admits a nontrivial matroid subdivision.

    Fast paths: no octahedral faces, or forced equalities pinning the local
    Dressian to its lineality space.  Otherwise search for a valuated
    weight vector splitting some octahedron; such a vector exists iff the
    polytope is decomposable.
    """
    if not octahedra(m):
        return IndecomposabilityVerdict("Indecomposable", reason="no octahedral faces")
    forced = forced_equalities(m)
    if forced.equals_lineality:
        return IndecomposabilityVerdict(
            "Indecomposable", reason="forced equalities pin the fan to its lineality"
        )
    b = _Budget(budget)
    _, _, complete, leaf = _search(m, b, stop_on_split=True)
    if leaf is not None:
        w = WeightVector.from_list(m, list(leaf[4]))
        return IndecomposabilityVerdict(
            "Decomposable", witness=w, subdivision=regular_subdivision(w),
            reason="witness splits an octahedron", nodes_used=b.used,
        )
    if not complete:
        return IndecomposabilityVerdict(
            "Unknown", reason="budget exhausted", nodes_used=b.used
        )
    return IndecomposabilityVerdict(
        "Indecomposable", reason="every split state is infeasible", nodes_used=b.used
    )


def tensor_weights(w1: WeightVector, w2: WeightVector) -> WeightVector:
    """(w1 ⊗ w2)_{B1 ⊔ B2} = (w1)_{B1} + (w2)_{B2} on the direct sum."""
    for w in (w1, w2):
        ok, bad = is_valuated(w)
        if not ok:
            raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    m1, m2 = w1.matroid, w2.matroid
    m = direct_sum(m1, m2)
    values = {}
    for b in m.bases:
        b1 = tuple(e for e in b if e <= m1.n)
        b2 = tuple(e - m1.n for e in b if e > m1.n)
        values[b] = w1.values[b1] + w2.values[b2]
    return WeightVector(m, values)


def phi(w: WeightVector, m1: Matroid, m2: Matroid, b1, b2):
    """Split a weight vector on m1 ⊕ m2 into its two factor components.

    Inverse of tensor_weights modulo lineality; the choice of reference
    bases (b1, b2) only moves the result within the lineality space.
    """
    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    b1 = tuple(sorted(b1))
    b2 = tuple(sorted(b2))
    if not m1.is_basis(b1):
        raise NotABasis(f"{b1} is not a basis of the first summand")
    if not m2.is_basis(b2):
        raise NotABasis(f"{b2} is not a basis of the second summand")
    shift2 = tuple(e + m1.n for e in b2)
    v1 = {a: w.values[tuple(sorted(a + shift2))] for a in m1.bases}
    v2 = {
        a: w.values[tuple(sorted(b1 + tuple(e + m1.n for e in a)))]
        for a in m2.bases
    }
    return WeightVector(m1, v1), WeightVector(m2, v2)


def parallel_projection(w: WeightVector, e: int, e2: int) -> WeightVector:
    """Project a weight vector along a parallel pair (e, e2), dropping e2.

    After a lineality shift making w agree on one exchange pair, w is
    constant under swapping e for e2 in any basis; the projection keeps the
    coordinates of bases avoiding e2, relabelled to the deletion m \\ e2.
    """
    m = w.matroid
    if not (1 <= e <= m.n and 1 <= e2 <= m.n) or e == e2:
        raise NotParallel(f"need two distinct elements, got {e}, {e2}")
    if m.rank({e}) != 1 or m.rank({e2}) != 1 or m.rank({e, e2}) != 1:
        raise NotParallel(f"{e} and {e2} are not parallel in the matroid")
    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")

    def swap(b):
        return tuple(sorted(e2 if x == e else x for x in b))

    pair = next(b for b in m.bases if e in b and e2 not in b)
    gauge = w.values[pair] - w.values[swap(pair)]
    adjusted = {
        b: v + gauge if e2 in b else v for b, v in w.values.items()
    }
    for b in m.bases:
        if e in b and e2 not in b:
            assert adjusted[b] == adjusted[swap(b)], "parallel pair not interchangeable"

    target = delete(m, e2)

    def relabel(b):
        return tuple(sorted(x - 1 if x > e2 else x for x in b))

    values = {relabel(b): adjusted[b] for b in m.bases if e2 not in b}
    return WeightVector(target, values)
