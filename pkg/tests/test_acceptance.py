"""End-to-end acceptance checks, one per numbered criterion.

Each test prints a single PASS/FAIL line before asserting, so the summary
is readable even when a criterion is red.
"""

import random
from itertools import combinations
from math import comb

from dressian.fan import (
    enumerate_fan,
    forced_equalities,
    is_indecomposable,
    parallel_projection,
    phi,
    tensor_weights,
)
from dressian.matroid import (
    direct_sum,
    dual,
    from_bases,
    graphic,
    is_binary,
    named,
    uniform,
)
from dressian.polytope import octahedra, polytope_dim
from dressian.rational import QQ, span_equal
from dressian.subdivision import (
    classify_subdivision,
    is_matroidal,
    regular_subdivision,
    skeleton_labels,
)
from dressian.tropical import (
    WeightVector,
    is_valuated,
    lineality_basis,
    lineality_dim,
    normalize,
    sign_vector,
    stiefel,
    tree_metric_weight,
    tropical_basis_size,
)

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
K5_EDGES = [(a, b) for a, b in combinations(range(1, 6), 2)]


def _report(number, ok, detail):
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def _random_trivalent_tree(n, rng, lengths):
    edges = [(1, n + 1, next(lengths)), (2, n + 1, next(lengths)),
             (3, n + 1, next(lengths))]
    nxt = n + 2
    for leaf in range(4, n + 1):
        u, v, _ = edges.pop(rng.randrange(len(edges)))
        edges.extend([(u, nxt, next(lengths)), (v, nxt, next(lengths)),
                      (leaf, nxt, next(lengths))])
        nxt += 1
    return edges


def _distinct_lengths(rng):
    used = set()
    while True:
        x = rng.randint(1, 10 ** 6)
        if x not in used:
            used.add(x)
            yield x


def _cone_samples(m, cone, count, rng):
    gens = lineality_basis(m)
    out = []
    for _ in range(count):
        scale = QQ(rng.randint(1, 6))
        point = [scale * x for x in cone.witness]
        for g in gens:
            c = QQ(rng.randint(-5, 5))
            point = [p + c * v for p, v in zip(point, g)]
        out.append(WeightVector.from_list(m, point))
    return out


def _valuated_samples(m, count, rng):
    """Valuated vectors on the corpus matroids, spread over several cones."""
    out = []
    if m.d == 2 and m.n >= 4 and len(m.bases) == comb(m.n, 2):
        lengths = _distinct_lengths(rng)
        while len(out) < count:
            edges = _random_trivalent_tree(m.n, rng, lengths)
            out.append(tree_metric_weight(m.n, edges))
    elif m == uniform(3, 6):
        while len(out) < count:
            matrix = [
                [rng.randint(0, 40) for _ in range(6)] for _ in range(3)
            ]
            out.append(stiefel(matrix))
    else:
        fan = enumerate_fan(m)
        cones = list(fan.maximal_cones)
        k = 0
        while len(out) < count:
            out.extend(_cone_samples(m, cones[k % len(cones)], 1, rng))
            k += 1
    return out[:count]


def test_criterion_01_dr24():
    f = enumerate_fan(uniform(2, 4))
    ok = len(f.maximal_cones) == 3 and f.lineality_dim == 3 and f.complete
    _report(1, ok, f"Dr(2,4): {len(f.maximal_cones)} maximal cones, "
                   f"lineality {f.lineality_dim}")


def test_criterion_02_example_16basis():
    m = named("example_16basis")
    f = enumerate_fan(m)
    kinds = sorted(
        classify_subdivision(
            regular_subdivision(WeightVector.from_list(m, list(c.witness)))
        ).kind
        for c in f.maximal_cones
    )
    ok = (
        len(m.bases) == 17
        and f.lineality_dim == 5
        and len(f.maximal_cones) == 3
        and all(c.dim == 6 for c in f.maximal_cones)
        and kinds == ["Split", "ThreeSplit", "ThreeSplit"]
    )
    _report(2, ok, f"16-basis example: {len(m.bases)} bases, "
                   f"{len(f.maximal_cones)} cones, kinds {kinds}")


def test_criterion_03_example_14basis():
    m = named("example_14basis")
    f = enumerate_fan(m)
    hyperplanes = set()
    for c in f.maximal_cones:
        w = WeightVector.from_list(m, list(c.witness))
        cl = classify_subdivision(regular_subdivision(w))
        hyperplanes.add(cl.hyperplane)
    expected = {
        ((0, 0, 0, 1, 1, 1), 2),
        ((0, 0, 1, 0, 1, 1), 2),
        ((0, 0, 1, 1, 0, 0), 1),
    }
    ok = (
        len(f.maximal_cones) == 3
        and f.lineality_dim == 5
        and all(c.dim == 6 for c in f.maximal_cones)
        and hyperplanes == expected
    )
    _report(3, ok, f"14-basis example: split hyperplanes {sorted(hyperplanes)}")


def test_criterion_04_square_linear_space():
    square = direct_sum(uniform(1, 2), uniform(1, 2))
    f = enumerate_fan(square)
    gens = [[1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]]  # e13+e14, e13+e23, 1
    spans = span_equal(
        lineality_basis(square), [[QQ(x) for x in g] for g in gens]
    )
    ok = (
        f.is_linear_space
        and f.lineality_dim == 2
        and len(f.maximal_cones) == 1
        and f.maximal_cones[0].dim == 2
        and spans
    )
    _report(4, ok, f"U12+U12: linear space of dim {f.lineality_dim}, "
                   f"generator span matches: {spans}")


def test_criterion_05_pg23():
    m = named("pg23")
    faces = len(octahedra(m))
    verdict = is_indecomposable(m, budget=10 ** 7).verdict
    ok = (
        faces == 117
        and len(m.bases) == 234
        and polytope_dim(m) == 12
        and verdict == "Indecomposable"
    )
    _report(5, ok, f"PG(2,3): octahedra {faces} (expected 117), "
                   f"bases {len(m.bases)}, dim {polytope_dim(m)}, {verdict}")


def test_criterion_06_binary_indecomposable():
    corpus = {
        "fano": named("fano"),
        "K4": graphic(4, K4_EDGES),
        "K5": graphic(5, K5_EDGES),
        "fano*": dual(named("fano")),
    }
    results = {}
    for name, m in corpus.items():
        results[name] = (
            octahedra(m) == [],
            is_binary(m)[0],
            is_indecomposable(m).verdict == "Indecomposable",
        )
    ok = all(all(r) for r in results.values())
    _report(6, ok, f"binary corpus indecomposable: {results}")


def test_criterion_07_pyramid_counterexample():
    pyr = from_bases(4, 2, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    w = WeightVector.from_list(pyr, [0, 0, 1, 1, 1])
    valuated, _ = is_valuated(w)
    s = regular_subdivision(w)
    matroidal, _ = is_matroidal(s)
    ok = not valuated and not matroidal and len(s) == 2
    _report(7, ok, f"square pyramid: valuated={valuated}, "
                   f"cells={len(s)}, matroidal={matroidal}")


def test_criterion_08_valuated_iff_matroidal():
    rng = random.Random(2024)
    corpus = [
        (uniform(2, 5), 350),
        (uniform(2, 6), 300),
        (uniform(3, 6), 250),
        (named("example_16basis"), 100),
    ]
    trials = 0
    mismatches = 0
    for m, count in corpus:
        nvaluated = count // 5
        samples = _valuated_samples(m, nvaluated, rng)
        for _ in range(count - nvaluated):
            samples.append(WeightVector.from_list(
                m, [rng.randint(0, 10 ** 6) for _ in range(len(m.bases))]
            ))
        for w in samples:
            trials += 1
            lhs = is_valuated(w)[0]
            rhs = is_matroidal(regular_subdivision(w))[0]
            if lhs != rhs:
                mismatches += 1
    ok = trials >= 1000 and mismatches == 0
    _report(8, ok, f"valuated iff matroidal: {trials} trials, "
                   f"{mismatches} mismatches")


def test_criterion_09_fan_structure_equivalence():
    rng = random.Random(77)
    corpus = [uniform(2, 5), uniform(2, 6), uniform(3, 6),
              named("example_16basis")]
    pairs = 0
    bad = 0
    for m in corpus:
        samples = _valuated_samples(m, 8, rng)
        # Include lineality translates to exercise the "equal" direction.
        gens = lineality_basis(m)
        samples.append(samples[0].shifted([3 * x for x in gens[0]]))
        signs = [sign_vector(w) for w in samples]
        subs = [regular_subdivision(w).maximal_cells for w in samples]
        labels = [tuple(l.label for l in skeleton_labels(w)) for w in samples]
        for i, j in combinations(range(len(samples)), 2):
            pairs += 1
            if (signs[i] == signs[j]) != (subs[i] == subs[j]):
                bad += 1
            if labels[i] == labels[j] and subs[i] != subs[j]:
                bad += 1
    ok = pairs >= 100 and bad == 0
    _report(9, ok, f"sign-vector/subdivision equivalence: {pairs} pairs, "
                   f"{bad} failures")


def test_criterion_10_direct_sum():
    rng = random.Random(5)
    u12 = uniform(1, 2)
    u24 = uniform(2, 4)
    f24 = enumerate_fan(u24)
    failures = 0
    checked = 0
    for trial in range(100):
        w1 = WeightVector.from_list(u12, [rng.randint(-9, 9), rng.randint(-9, 9)])
        cone = f24.maximal_cones[trial % 3]
        w2 = _cone_samples(u24, cone, 1, rng)[0]
        t = tensor_weights(w1, w2)
        p1, p2 = phi(t, u12, u24, (1,), u24.bases[trial % 6])
        back = tensor_weights(p1, p2)
        checked += 1
        if (normalize(p1) != normalize(w1) or normalize(p2) != normalize(w2)
                or normalize(back) != normalize(t)):
            failures += 1
    count_a = len(enumerate_fan(direct_sum(u24, uniform(1, 2))).maximal_cones)
    count_b = len(enumerate_fan(direct_sum(u24, u24),
                                budget=10 ** 6).maximal_cones)
    ok = checked >= 100 and failures == 0 and count_a == 3 and count_b == 9
    _report(10, ok, f"direct sum: {failures} round-trip failures, "
                    f"product cone counts {count_a} and {count_b}")


def test_criterion_11_parallel_element():
    rng = random.Random(8)
    doubled = from_bases(5, 2, [b for b in uniform(2, 5).bases if b != (4, 5)])
    dims_ok = lineality_dim(doubled) == lineality_dim(uniform(2, 4)) + 1
    fan = enumerate_fan(doubled)
    samples = []
    per_cone = max(1, 110 // max(len(fan.maximal_cones), 1))
    for cone in fan.maximal_cones:
        samples.extend(
            (cone.states, w) for w in _cone_samples(doubled, cone, per_cone, rng)
        )
    samples = samples[:110]
    failures = 0
    projected = []
    for states, w in samples:
        out = parallel_projection(w, 4, 5)
        if not is_valuated(out)[0]:
            failures += 1
            continue
        projected.append((states, sign_vector(w), sign_vector(out)))
    for (sa, wa, pa), (sb, wb, pb) in combinations(projected, 2):
        if wa == wb and pa != pb:
            failures += 1
    ok = dims_ok and len(samples) >= 100 and failures == 0
    _report(11, ok, f"parallel element: dims drop by one={dims_ok}, "
                    f"{len(samples)} samples, {failures} failures")


def test_criterion_12_finest_tree_subdivisions():
    rng = random.Random(31)
    lengths = _distinct_lengths(rng)
    failures = 0
    trees = 0
    for n, count in [(5, 17), (6, 17), (7, 16)]:
        for _ in range(count):
            trees += 1
            edges = _random_trivalent_tree(n, rng, lengths)
            w = tree_metric_weight(n, edges)
            s = regular_subdivision(w)
            cells_binary = all(
                is_binary(from_bases(n, 2, cell))[0]
                for cell in s.maximal_cells
            )
            if len(s) != n - 2 or not cells_binary:
                failures += 1
    ok = trees == 50 and failures == 0
    _report(12, ok, f"finest tree subdivisions: {trees} trees, "
                    f"{failures} failures")


def test_criterion_13_tropical_basis_size():
    v24, ok24 = tropical_basis_size(2, 4)
    v36, ok36 = tropical_basis_size(3, 6)
    bound = all(
        tropical_basis_size(d, n)[1]
        for n in range(3, 13) for d in range(2, n)
    )
    ok = v24 == 6 and v36 == 146 and ok24 and ok36 and bound
    _report(13, ok, f"tropical basis sizes: (2,4)={v24}, (3,6)={v36}, "
                    f"bound holds for 2<=d<n<=12: {bound}")
