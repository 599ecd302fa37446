"""Matroid construction, validation and the standard operations.

Matroids are stored as (ground-set size, rank, bases).  Elements are the
integers 1..n and bases are kept in canonical lexicographic order, so two
equal matroids compare equal bitwise.  Every constructor validates the basis
exchange axiom.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import (
    EmptyBases,
    EverythingRemoved,
    InvalidParameters,
    NoEdges,
    NotAMatroid,
    UnknownName,
    WrongCardinality,
)
from .rational import nullspace


def _mask(subset) -> int:
    m = 0
    for e in subset:
        m |= 1 << (e - 1)
    return m


class Matroid:
    """A matroid ([n], bases) of rank d, immutable after construction.

    Do not call the constructor directly; use :func:`from_bases` and the
    other factory functions, which validate the exchange axiom.
    """

    __slots__ = ("n", "d", "bases", "_basis_set", "_masks")

    def __init__(self, n: int, d: int, bases):
        self.n = n
        self.d = d
        self.bases = tuple(sorted(tuple(sorted(b)) for b in bases))
        self._basis_set = frozenset(frozenset(b) for b in self.bases)
        self._masks = tuple(_mask(b) for b in self.bases)

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, d={self.d}, bases={len(self.bases)})"

    def is_basis(self, subset) -> bool:
        return frozenset(subset) in self._basis_set

    def rank(self, subset) -> int:
        """max over bases of |B ∩ subset|."""
        a = _mask(subset)
        cap = min(bin(a).count("1"), self.d)
        best = 0
        for b in self._masks:
            v = bin(a & b).count("1")
            if v > best:
                best = v
                if best == cap:
                    break
        return best

    def closure(self, subset):
        """Smallest flat containing `subset`."""
        a = frozenset(subset)
        r = self.rank(a)
        return frozenset(
            e for e in range(1, self.n + 1) if e in a or self.rank(a | {e}) == r
        )

    def loops(self):
        covered = 0
        for b in self._masks:
            covered |= b
        return frozenset(
            e for e in range(1, self.n + 1) if not covered & (1 << (e - 1))
        )

    def coloops(self):
        common = self._masks[0]
        for b in self._masks:
            common &= b
        return frozenset(e for e in range(1, self.n + 1) if common & (1 << (e - 1)))


def check_exchange(bases) -> tuple | None:
    """Return a violating (B, B', e) triple, or None if the axiom holds.

    `bases` is an iterable of frozensets of equal cardinality.
    """
    basis_set = set(map(frozenset, bases))
    basis_list = sorted(basis_set, key=sorted)
    for b in basis_list:
        for b2 in basis_list:
            if b == b2:
                continue
            for e in sorted(b - b2):
                reduced = b - {e}
                if not any(reduced | {f} in basis_set for f in b2 - b):
                    return (b, b2, e)
    return None


def from_bases(n: int, d: int, bases) -> Matroid:
    """Build and validate a matroid from an explicit list of bases."""
    base_sets = [frozenset(b) for b in bases]
    if not base_sets:
        raise EmptyBases("a matroid needs at least one basis")
    for b in base_sets:
        if len(b) != d:
            raise WrongCardinality(f"basis {tuple(sorted(b))} does not have {d} elements")
        if not all(1 <= e <= n for e in b):
            raise WrongCardinality(f"basis {tuple(sorted(b))} not within 1..{n}")
    violation = check_exchange(base_sets)
    if violation is not None:
        raise NotAMatroid(*[violation[0], violation[1], violation[2]])
    return Matroid(n, d, base_sets)


def uniform(d: int, n: int) -> Matroid:
    """The uniform matroid U_{d,n}: all d-subsets of [n] are bases."""
    if n < 1 or d < 0 or d > n:
        raise InvalidParameters(f"uniform({d},{n}) needs 0 <= d <= n, n >= 1")
    return Matroid(n, d, [frozenset(c) for c in combinations(range(1, n + 1), d)])


def graphic(vertex_count: int, edges) -> Matroid:
    """Matroid of spanning forests of a multigraph.

    Edges are pairs of vertices (labels 0-based or any hashable); the
    matroid's elements are the edge positions 1..|edges|.
    """
    edges = list(edges)
    if not edges:
        raise NoEdges("graphic matroid needs at least one edge")

    vertices = set()
    for u, v in edges:
        vertices.add(u)
        vertices.add(v)
    if len(vertices) > vertex_count:
        raise InvalidParameters("edge endpoints exceed vertex_count")

    def forest_rank(edge_indices):
        parent = {v: v for v in vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for i in edge_indices:
            u, v = edges[i - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    d = forest_rank(range(1, len(edges) + 1))
    bases = [
        frozenset(c)
        for c in combinations(range(1, len(edges) + 1), d)
        if forest_rank(c) == d
    ]
    return Matroid(len(edges), d, bases)


_FANO_LINES = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
]

_EXAMPLE_14_BASES = [
    (1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5), (2, 4, 6), (2, 5, 6),
    (3, 4, 5), (3, 4, 6), (3, 5, 6), (4, 5, 6),
]


def _pg23_bases():
    # Points of the projective plane over the 3-element field: one nonzero
    # vector per 1-dimensional subspace, normalized to leading entry 1.
    points = []
    for x in range(3):
        for y in range(3):
            for z in range(3):
                vec = (x, y, z)
                if vec == (0, 0, 0):
                    continue
                lead = next(v for v in vec if v)
                if lead == 1:
                    points.append(vec)
    assert len(points) == 13

    def collinear(a, b, c):
        det = (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
        return det % 3 == 0

    bases = []
    for i, j, k in combinations(range(13), 3):
        if not collinear(points[i], points[j], points[k]):
            bases.append(frozenset({i + 1, j + 1, k + 1}))
    return bases


@lru_cache(maxsize=None)
def named(name: str) -> Matroid:
    """Catalog matroids: fano, pg23, example_16basis, example_14basis."""
    if name == "fano":
        lines = set(map(frozenset, _FANO_LINES))
        bases = [
            frozenset(c)
            for c in combinations(range(1, 8), 3)
            if frozenset(c) not in lines
        ]
        return from_bases(7, 3, bases)
    if name == "pg23":
        return from_bases(13, 3, _pg23_bases())
    if name == "example_16basis":
        removed = {frozenset({1, 2, 3}), frozenset({1, 4, 5}), frozenset({3, 5, 6})}
        bases = [
            frozenset(c)
            for c in combinations(range(1, 7), 3)
            if frozenset(c) not in removed
        ]
        return from_bases(6, 3, bases)
    if name == "example_14basis":
        return from_bases(6, 3, _EXAMPLE_14_BASES)
    raise UnknownName(f"unknown catalog matroid {name!r}")


def rank_of(m: Matroid, subset) -> int:
    return m.rank(subset)


def closure_of(m: Matroid, subset) -> frozenset:
    return m.closure(subset)


def flats(m: Matroid):
    """All flats, grouped by rank: a list indexed by rank 0..d."""
    by_rank = [[] for _ in range(m.d + 1)]
    seen = set()
    frontier = {m.closure(())}
    while frontier:
        new = set()
        for f in frontier:
            if f in seen:
                continue
            seen.add(f)
            by_rank[m.rank(f)].append(f)
            # Covers of f: closures of f + one new element.
            for e in range(1, m.n + 1):
                if e not in f:
                    new.add(m.closure(f | {e}))
        frontier = new - seen
    for group in by_rank:
        group.sort(key=sorted)
    return by_rank


def minor(m: Matroid, contract, delete) -> Matroid:
    """(m / contract) \\ delete with the ground set relabeled 1..n'.

    A dependent contraction set is handled by contracting a maximal
    independent subset of it and deleting the rest.
    """
    contract = frozenset(contract)
    delete = frozenset(delete)
    if contract & delete:
        raise InvalidParameters("contract and delete sets must be disjoint")
    remaining = [e for e in range(1, m.n + 1) if e not in contract and e not in delete]
    if not remaining:
        raise EverythingRemoved("minor would have an empty ground set")

    # Maximal independent subset of the contraction set, greedily.
    indep = []
    for e in sorted(contract):
        if m.rank(indep + [e]) == len(indep) + 1:
            indep.append(e)
    indep_set = frozenset(indep)

    new_rank = m.rank(set(remaining) | indep_set) - len(indep)
    relabel = {e: i + 1 for i, e in enumerate(remaining)}
    bases = []
    for c in combinations(remaining, new_rank):
        if m.rank(indep_set | set(c)) == len(indep) + new_rank:
            bases.append(frozenset(relabel[e] for e in c))
    return Matroid(len(remaining), new_rank, bases)


def delete(m: Matroid, *elements) -> Matroid:
    return minor(m, (), elements)


def contract(m: Matroid, *elements) -> Matroid:
    return minor(m, elements, ())


def dual(m: Matroid) -> Matroid:
    ground = frozenset(range(1, m.n + 1))
    return Matroid(m.n, m.n - m.d, [ground - frozenset(b) for b in m.bases])


def connected_components(m: Matroid):
    """The finest partition of [n] into sets with constant |S ∩ B| over bases.

    Returned as a sorted list of sorted tuples; the matroid is connected iff
    there is a single block.  Loops and coloops are their own blocks.
    """
    b0 = m.bases[0]
    rows = []
    ref = [1 if e in b0 else 0 for e in range(1, m.n + 1)]
    for b in m.bases[1:]:
        ind = [1 if e in b else 0 for e in range(1, m.n + 1)]
        rows.append([x - y for x, y in zip(ind, ref)])
    basis = nullspace(rows, ncols=m.n)
    columns = {}
    for e in range(m.n):
        key = tuple(vec[e] for vec in basis)
        columns.setdefault(key, []).append(e + 1)
    return sorted((tuple(block) for block in columns.values()))


def is_connected(m: Matroid) -> bool:
    return len(connected_components(m)) == 1


def parallel_classes(m: Matroid):
    """Parallelism classes of the non-loop elements, plus the loop set.

    Returns (classes, loops) where classes is a sorted list of sorted tuples.
    """
    loops = m.loops()
    rest = [e for e in range(1, m.n + 1) if e not in loops]
    classes = []
    assigned = set()
    for e in rest:
        if e in assigned:
            continue
        cls = [e]
        assigned.add(e)
        for f in rest:
            if f > e and f not in assigned and m.rank({e, f}) == 1:
                cls.append(f)
                assigned.add(f)
        classes.append(tuple(cls))
    return sorted(classes), loops


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Matroid on the concatenated ground sets; m2's elements shift by m1.n."""
    shift = m1.n
    bases = [
        frozenset(b1) | frozenset(e + shift for e in b2)
        for b1 in m1.bases
        for b2 in m2.bases
    ]
    return Matroid(m1.n + m2.n, m1.d + m2.d, bases)


def is_binary(m: Matroid):
    """Tutte's criterion: binary iff no U_{2,4} minor.

    Returns (True, None) or (False, (contract_set, delete_set)) where the
    witness minor on the four remaining elements is U_{2,4}.
    """
    ground = range(1, m.n + 1)
    for four in combinations(ground, 4):
        four_set = frozenset(four)
        rest = [e for e in ground if e not in four_set]
        for csize in range(0, max(m.d - 1, 1)):
            for c in combinations(rest, csize):
                if m.rank(c) != csize:
                    continue
                cset = frozenset(c)
                if m.rank(cset | four_set) != csize + 2:
                    continue
                if all(
                    m.rank(cset | {p, q}) == csize + 2
                    for p, q in combinations(four, 2)
                ):
                    return False, (cset, frozenset(rest) - cset)
    return True, None
