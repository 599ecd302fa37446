"""Matroid polytope combinatorics: edges, dimension and small faces.

The 3-dimensional faces spanned by a common intersection s and four extra
elements are detected purely combinatorially: the linear functional that is
very negative on s, -1 on the four extra elements and 0 elsewhere is
minimized exactly on the bases of the form s ∪ {pair}, so no convex-hull
computation is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ImpossiblePattern, MalformedInput
from .matroid import Matroid, connected_components


@dataclass(frozen=True)
class OctahedronFace:
    """A 3-face of P_M with six vertices e_{s ∪ pair}, pair ⊂ t."""

    s: tuple
    t: tuple


@dataclass(frozen=True)
class FaceClass:
    kind: str  # Octahedron | Pyramid | Square | Triangle | Edge | Vertex | Empty
    present_pairs: frozenset  # pairs p ⊂ t with s ∪ p a basis


def exchange_graph(m: Matroid):
    """The vertex-edge graph of P_M: bases adjacent iff |B \\ B'| = 1.

    Returns (vertices, edges) with vertices the canonical basis tuples and
    edges a sorted list of index pairs into that list.
    """
    vertices = m.bases
    sets = [frozenset(b) for b in vertices]
    edges = []
    for i, j in combinations(range(len(vertices)), 2):
        if len(sets[i] - sets[j]) == 1:
            edges.append((i, j))
    return vertices, edges


def polytope_dim(m: Matroid) -> int:
    """dim P_M = n - (number of connected components, loops counted)."""
    return m.n - len(connected_components(m))


def classify_pair_face(m: Matroid, s, t) -> FaceClass:
    """Classify the face conv{e_{s∪p} : p ⊂ t, s∪p basis}.

    s must have d-2 elements, t four elements disjoint from s.  The
    classification is a function of which of the six pairs of t complete s
    to a basis; patterns excluded by the exchange axiom raise
    ImpossiblePattern.
    """
    s = frozenset(s)
    t = tuple(sorted(t))
    if len(s) != m.d - 2 or len(t) != 4 or s & set(t):
        raise MalformedInput("need |s| = d-2, |t| = 4, s and t disjoint")

    pairs = [frozenset(p) for p in combinations(t, 2)]
    present = frozenset(p for p in pairs if m.is_basis(s | p))
    k = len(present)

    if k == 6:
        kind = "Octahedron"
    elif k == 5:
        kind = "Pyramid"
    elif k == 4:
        missing = [p for p in pairs if p not in present]
        if missing[0] & missing[1]:
            raise ImpossiblePattern(f"4 pairs with intersecting gaps at s={s}, t={t}")
        kind = "Square"
    elif k == 3:
        if all(p & q for p, q in combinations(present, 2)):
            kind = "Triangle"
        else:
            raise ImpossiblePattern(f"3 pairs containing a disjoint pair at s={s}, t={t}")
    elif k == 2:
        p, q = present
        if not p & q:
            raise ImpossiblePattern(f"2 disjoint pairs at s={s}, t={t}")
        kind = "Edge"
    elif k == 1:
        kind = "Vertex"
    else:
        kind = "Empty"
    return FaceClass(kind, present)


def octahedra(m: Matroid):
    """All octahedral 3-faces of P_M, in lexicographic (s, t) order."""
    if m.d < 2 or m.n < m.d + 2:
        return []
    faces = []
    ground = range(1, m.n + 1)
    for s in combinations(ground, m.d - 2):
        s_set = frozenset(s)
        rest = [e for e in ground if e not in s_set]
        for t in combinations(rest, 4):
            if all(m.is_basis(s_set | {p, q}) for p, q in combinations(t, 2)):
                faces.append(OctahedronFace(s, t))
    return faces
