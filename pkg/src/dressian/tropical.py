"""Valuated matroids: three-term relations, membership and tropical data.

A weight vector assigns an exact rational to every basis of a fixed matroid;
all other d-subsets are implicitly at +infinity.  Membership in the local
Dressian is the min-plus rule: in every three-term relation the minimum of
the finite term sums must be attained at least twice (relations with no
finite term hold vacuously; a single finite term is a violation).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .errors import (
    AllInfiniteColumnSet,
    HasLoops,
    InvalidParameters,
    MalformedInput,
    MalformedTree,
    NotValuated,
)
from .matroid import Matroid, connected_components, flats, from_bases, uniform
from .rational import QQ, ZERO, rref, to_rational


class WeightVector:
    """Rational weight per basis of a matroid (+infinity off the bases)."""

    __slots__ = ("matroid", "values")

    def __init__(self, matroid: Matroid, values):
        """`values` maps each basis (any set-like or sorted tuple) to a rational."""
        table = {}
        for key, val in values.items():
            basis = tuple(sorted(key))
            if not matroid.is_basis(basis):
                raise MalformedInput(f"{basis} is not a basis of {matroid!r}")
            table[basis] = to_rational(val)
        if len(table) != len(matroid.bases):
            missing = set(matroid.bases) - set(table)
            raise MalformedInput(f"missing weights for bases {sorted(missing)[:3]}...")
        self.matroid = matroid
        self.values = table

    @classmethod
    def zero(cls, matroid: Matroid) -> "WeightVector":
        return cls(matroid, {b: 0 for b in matroid.bases})

    @classmethod
    def from_list(cls, matroid: Matroid, flat_values) -> "WeightVector":
        """Weights listed in the matroid's canonical basis order."""
        if len(flat_values) != len(matroid.bases):
            raise MalformedInput("wrong number of weight entries")
        return cls(matroid, dict(zip(matroid.bases, flat_values)))

    def as_list(self):
        return [self.values[b] for b in self.matroid.bases]

    def __getitem__(self, basis):
        return self.values[tuple(sorted(basis))]

    def __eq__(self, other):
        return (
            isinstance(other, WeightVector)
            and self.matroid == other.matroid
            and self.as_list() == other.as_list()
        )

    def shifted(self, other_list) -> "WeightVector":
        """Pointwise sum with a raw list in canonical basis order."""
        return WeightVector.from_list(
            self.matroid, [a + QQ(b) for a, b in zip(self.as_list(), other_list)]
        )


@dataclass(frozen=True)
class Relation:
    """One three-term relation: common set s and quadruple i<j<l<m.

    terms holds the three (factor, factor) basis-tuples; finite holds, per
    term, whether both factors are bases.
    """

    s: tuple
    quad: tuple
    terms: tuple  # three pairs of sorted basis tuples
    finite: tuple  # three bools

    @property
    def finite_count(self) -> int:
        return sum(self.finite)


@dataclass(frozen=True)
class RelationStatus:
    finite_terms: tuple  # indices 1..3 of the finite terms
    verdict: str  # AllInfinite | Violated | Satisfied
    minimizers: tuple = ()  # indices of the minimal finite terms when Satisfied


def _term_sets(s, quad):
    i, j, l, m = quad
    pairs = [((i, j), (l, m)), ((i, l), (j, m)), ((i, m), (j, l))]
    return [
        (tuple(sorted(s + p)), tuple(sorted(s + q)))
        for p, q in pairs
    ]


def relations(m: Matroid, skip_all_infinite: bool = False):
    """All (s, quad) three-term relations in lexicographic order."""
    if m.d < 2 or m.n < m.d + 2:
        return []
    out = []
    ground = range(1, m.n + 1)
    for s in combinations(ground, m.d - 2):
        s_set = set(s)
        rest = [e for e in ground if e not in s_set]
        for quad in combinations(rest, 4):
            terms = tuple(_term_sets(s, quad))
            finite = tuple(
                m.is_basis(a) and m.is_basis(b) for a, b in terms
            )
            if skip_all_infinite and not any(finite):
                continue
            out.append(Relation(s, quad, terms, finite))
    return out


def relation_status(w: WeightVector, r: Relation) -> RelationStatus:
    """Evaluate the min-attained-at-least-twice rule on one relation."""
    finite_idx = tuple(i + 1 for i in range(3) if r.finite[i])
    if not finite_idx:
        return RelationStatus((), "AllInfinite")
    sums = {}
    for i in finite_idx:
        a, b = r.terms[i - 1]
        sums[i] = w.values[a] + w.values[b]
    low = min(sums.values())
    minimizers = tuple(i for i in finite_idx if sums[i] == low)
    if len(minimizers) >= 2:
        return RelationStatus(finite_idx, "Satisfied", minimizers)
    return RelationStatus(finite_idx, "Violated")


def is_valuated(w: WeightVector):
    """(True, None) or (False, first violated relation)."""
    for r in relations(w.matroid, skip_all_infinite=True):
        if relation_status(w, r).verdict == "Violated":
            return False, r
    return True, None


def sign_vector(w: WeightVector):
    """Per-relation minimizer labels identifying the Plücker cone of w.

    Only relations with at least two finite terms contribute; the result is
    a tuple of minimizer index tuples in canonical relation order.
    """
    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    labels = []
    for r in relations(w.matroid, skip_all_infinite=True):
        status = relation_status(w, r)
        if len(status.finite_terms) >= 2:
            labels.append(status.minimizers)
    return tuple(labels)


def lineality_basis(m: Matroid):
    """Generators of the lineality space of Dr(M) in basis-coordinate space.

    Generator i has entry 1 at every basis containing element i.  The span
    (which contains the all-ones vector) has dimension n - c + 1, i.e.
    n - c modulo all-ones.
    """
    gens = []
    for i in range(1, m.n + 1):
        gens.append([QQ(1) if i in b else ZERO for b in m.bases])
    return gens


def lineality_dim(m: Matroid) -> int:
    """dim of the lineality space of Dr(M) modulo the all-ones vector."""
    return m.n - len(connected_components(m))


def _gauge_pivots(m: Matroid):
    reduced, pivots = rref(lineality_basis(m))
    return reduced, pivots


def normalize(w: WeightVector) -> WeightVector:
    """Gauge-fix w modulo the lineality span (which includes all-ones).

    Subtracts the unique lineality-span vector agreeing with w on the
    lexicographically first spanning coordinate set, so the result vanishes
    there.  Two weight vectors differ by a lineality shift iff they
    normalize identically.
    """
    reduced, pivots = _gauge_pivots(w.matroid)
    vals = w.as_list()
    out = list(vals)
    # reduced is in rref, so reduced[k] is 1 at pivots[k], 0 at other pivots.
    for k, p in enumerate(pivots):
        coeff = out[p]
        if coeff:
            out = [x - coeff * y for x, y in zip(out, reduced[k])]
    return WeightVector.from_list(w.matroid, out)


def stiefel(matrix) -> WeightVector:
    """Tropical minors of a d×n matrix (entries rational or None = infinity).

    The weight of a column set B is the tropical determinant
    min over permutations of sum_i a[i, b_sigma(i)]; column sets where every
    permutation hits an infinite entry are dropped from the support.
    """
    d = len(matrix)
    if d == 0 or not matrix[0]:
        raise InvalidParameters("matrix must be nonempty")
    n = len(matrix[0])
    if any(len(row) != n for row in matrix):
        raise InvalidParameters("ragged matrix")
    if d > n:
        raise InvalidParameters("need d <= n")
    rows = [
        [None if x is None else to_rational(x) for x in row] for row in matrix
    ]

    support = {}
    for cols in combinations(range(n), d):
        best = None
        for sigma in permutations(range(d)):
            total = ZERO
            ok = True
            for i in range(d):
                entry = rows[i][cols[sigma[i]]]
                if entry is None:
                    ok = False
                    break
                total += entry
            if ok and (best is None or total < best):
                best = total
        if best is not None:
            support[tuple(c + 1 for c in cols)] = best

    if not support:
        raise AllInfiniteColumnSet("no finite tropical minor")
    try:
        m = from_bases(n, d, list(support))
    except Exception as exc:
        raise AllInfiniteColumnSet(
            f"support of the tropical minors is not a matroid: {exc}"
        ) from exc
    return WeightVector(m, support)


def selected_matroid(w: WeightVector, x) -> Matroid:
    """The matroid M_x of bases minimizing w_B - sum_{i in B} x_i."""
    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    x = [to_rational(v) for v in x]
    if len(x) != w.matroid.n:
        raise MalformedInput("point has wrong dimension")
    best = None
    arg = []
    for b in w.matroid.bases:
        val = w.values[b] - sum((x[e - 1] for e in b), ZERO)
        if best is None or val < best:
            best = val
            arg = [b]
        elif val == best:
            arg.append(b)
    return from_bases(w.matroid.n, w.matroid.d, arg)


def _ordered_partitions(elements):
    """All ordered set partitions of `elements` (exponential; desk scale)."""
    elements = list(elements)
    if not elements:
        yield ()
        return
    first = elements[0]
    rest = elements[1:]
    # Choose the block of `first`, then recurse on the rest.
    for k in range(len(rest) + 1):
        for block_rest in combinations(rest, k):
            block = (first,) + block_rest
            remaining = [e for e in rest if e not in block_rest]
            for tail in _ordered_partitions(remaining):
                yield (block,) + tail


def _greedy_face(bases, partition):
    """Bases picked by lexicographically maximizing (|B∩A_1|, |B∩A_2|, ...)."""
    current = list(bases)
    for block in partition:
        block_set = set(block)
        best = max(len(block_set & set(b)) for b in current)
        current = [b for b in current if len(set(b) & block_set) == best]
    return frozenset(current)


def _all_faces(m: Matroid):
    """Vertex sets of all nonempty faces of P_M.

    The normal fan of a matroid polytope coarsens the braid fan (all edges
    are parallel to e_i - e_j), so every face is selected by a functional
    that is constant on the blocks of an ordered set partition of [n].
    """
    faces = set()
    for partition in _ordered_partitions(range(1, m.n + 1)):
        faces.add(_greedy_face(m.bases, partition))
    return faces


def linear_space_cells(w: WeightVector):
    """Cells of the tropical linear space of w, with boundedness flags.

    Returns a list of (Matroid, bounded) pairs, one per loopless matroid
    occurring as a face (of any dimension) of the regular subdivision
    induced by w; a cell is bounded iff its matroid has no coloops.  The
    bounded sublist is the tight span.
    """
    from .subdivision import regular_subdivision  # cycle-free at call time

    ok, bad = is_valuated(w)
    if not ok:
        raise NotValuated(f"violated relation at s={bad.s}, quad={bad.quad}")
    m = w.matroid
    faces = set()
    for cell in regular_subdivision(w).maximal_cells:
        cell_matroid = Matroid(m.n, m.d, cell)
        faces.update(_all_faces(cell_matroid))
    out = []
    for face in sorted(faces, key=lambda f: (len(f), sorted(map(sorted, f)))):
        cell_matroid = from_bases(m.n, m.d, face)
        if cell_matroid.loops():
            continue
        bounded = not cell_matroid.coloops()
        out.append((cell_matroid, bounded))
    return out


def bergman_flag_cones(m: Matroid):
    """Chains of proper nonempty flats, one cone per chain.

    Each chain F_1 ⊂ ... ⊂ F_k spans the cone generated by the indicator
    vectors e_{F_i}; the empty chain stands for the cone {0}.  Cone
    dimension equals chain length (modulo the ambient all-ones lineality).
    """
    if m.loops():
        raise HasLoops("Bergman fan needs a loopless matroid")
    ground = frozenset(range(1, m.n + 1))
    proper = [
        f
        for group in flats(m)
        for f in group
        if f and f != ground
    ]
    proper.sort(key=lambda f: (len(f), sorted(f)))
    chains = [()]
    stack = [((), -1)]
    while stack:
        chain, last = stack.pop()
        for idx in range(last + 1, len(proper)):
            f = proper[idx]
            if not chain or chain[-1] < f:
                extended = chain + (f,)
                chains.append(extended)
                stack.append((extended, idx))
    chains.sort(key=lambda ch: (len(ch), [sorted(f) for f in ch]))
    return chains


def tree_metric_weight(n: int, edges) -> WeightVector:
    """Weights on U_{2,n} from a leaf-labeled edge-weighted tree.

    `edges` is a list of (u, v, length) with positive rational lengths;
    leaves carry the labels 1..n, internal nodes any other labels.  The
    weight of {i, j} is minus the path length between leaves i and j (the
    min-plus convention: tree metrics satisfy the max form of the
    four-point condition, so the Dressian sees their negatives).
    """
    if n < 3:
        raise MalformedTree("need at least 3 leaves")
    adjacency = {}
    for u, v, length in edges:
        length = to_rational(length)
        if length <= 0:
            raise MalformedTree(f"edge ({u},{v}) has non-positive length")
        adjacency.setdefault(u, []).append((v, length))
        adjacency.setdefault(v, []).append((u, length))
    if len(edges) != len(adjacency) - 1:
        raise MalformedTree("edge count does not match a tree")
    for leaf in range(1, n + 1):
        if leaf not in adjacency:
            raise MalformedTree(f"missing leaf {leaf}")

    def distances_from(source):
        dist = {source: ZERO}
        stack = [source]
        while stack:
            node = stack.pop()
            for neighbor, length in adjacency[node]:
                if neighbor not in dist:
                    dist[neighbor] = dist[node] + length
                    stack.append(neighbor)
        return dist

    values = {}
    for i in range(1, n + 1):
        dist = distances_from(i)
        if len(dist) != len(adjacency):
            raise MalformedTree("tree is not connected")
        for j in range(i + 1, n + 1):
            values[(i, j)] = -dist[j]
    return WeightVector(uniform(2, n), values)


def tropical_basis_size(d: int, n: int):
    """Size of a tropical basis for the (d,n) tropical Grassmannian.

    Returns (size, bound_holds) where bound_holds checks size <= 2^(2n+1).
    """
    if not 2 <= d < n:
        raise InvalidParameters("need 2 <= d < n")
    size = comb(n, d + 1) * (comb(n, d - 1) - comb(d + 1, 2)) + comb(n, d) - d * (n - d)
    return size, size <= 2 ** (2 * n + 1)
