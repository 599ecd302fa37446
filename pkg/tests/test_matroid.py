from itertools import combinations
from math import comb

import pytest

from dressian.errors import (
    EmptyBases,
    EverythingRemoved,
    NotAMatroid,
    UnknownName,
    WrongCardinality,
)
from dressian.matroid import (
    Matroid,
    check_exchange,
    connected_components,
    contract,
    delete,
    direct_sum,
    dual,
    flats,
    from_bases,
    graphic,
    is_binary,
    is_connected,
    minor,
    named,
    parallel_classes,
    uniform,
)

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
K5_EDGES = [(a, b) for a, b in combinations(range(1, 6), 2)]


def test_uniform_counts():
    for d, n in [(1, 3), (2, 4), (2, 5), (3, 6)]:
        m = uniform(d, n)
        assert len(m.bases) == comb(n, d)
        assert m.d == d and m.n == n


def test_basis_membership_and_rank():
    m = uniform(2, 4)
    assert m.is_basis({1, 3})
    assert not m.is_basis({1})
    assert m.rank({1}) == 1
    assert m.rank({1, 2, 3}) == 2
    assert m.rank(()) == 0


def test_closure_loops_coloops():
    m = from_bases(3, 2, [(1, 2), (1, 3)])  # 2 parallel 3
    assert m.closure({2}) == frozenset({2, 3})
    assert m.loops() == frozenset()
    assert m.coloops() == frozenset({1})
    loopy = from_bases(3, 1, [(1,), (2,)])  # 3 is a loop
    assert loopy.loops() == frozenset({3})


def test_from_bases_validates():
    with pytest.raises(EmptyBases):
        from_bases(3, 2, [])
    with pytest.raises(WrongCardinality):
        from_bases(3, 2, [(1, 2), (3,)])
    with pytest.raises(WrongCardinality):
        from_bases(3, 2, [(1, 5)])
    with pytest.raises(NotAMatroid) as info:
        from_bases(4, 2, [(1, 2), (3, 4)])
    b, b2, e = info.value.triple
    b, b2 = frozenset(b), frozenset(b2)
    assert e in b
    assert all((b - {e}) | {f} not in {frozenset((1, 2)), frozenset((3, 4))}
               for f in b2 - b)


def test_check_exchange_violation_certificate():
    bad = [frozenset((1, 2)), frozenset((3, 4))]
    triple = check_exchange(bad)
    assert triple is not None
    b, b2, e = triple
    assert e in b
    assert all(b - {e} | {f} not in set(bad) for f in b2 - b)
    assert check_exchange([frozenset(x) for x in uniform(2, 4).bases]) is None


def test_graphic_k4_and_k5():
    k4 = graphic(4, K4_EDGES)
    assert k4.d == 3 and len(k4.bases) == 16  # spanning trees of K4
    k5 = graphic(5, K5_EDGES)
    assert k5.d == 4 and len(k5.bases) == 125  # Cayley: 5^3


def test_named_catalog():
    assert len(named("fano").bases) == 28
    assert len(named("pg23").bases) == 234
    assert len(named("example_16basis").bases) == 17
    assert len(named("example_14basis").bases) == 14
    with pytest.raises(UnknownName):
        named("nope")


def test_named_catalog_is_matroidal():
    for name in ("fano", "example_16basis", "example_14basis"):
        m = named(name)
        assert check_exchange([frozenset(b) for b in m.bases]) is None


def test_flats_u24():
    groups = flats(uniform(2, 4))
    assert [len(g) for g in groups] == [1, 4, 1]
    assert groups[0] == [frozenset()]
    assert groups[2] == [frozenset({1, 2, 3, 4})]


def test_flats_fano_lines():
    groups = flats(named("fano"))
    # Fano plane: 7 points, 7 lines.
    assert [len(g) for g in groups] == [1, 7, 7, 1]
    assert all(len(f) == 3 for f in groups[2])


def test_minor_roundtrip():
    m = uniform(3, 6)
    assert contract(m, 1) == uniform(2, 5)
    assert delete(m, 6) == uniform(3, 5)
    assert minor(m, (1,), (6,)) == uniform(2, 4)
    with pytest.raises(EverythingRemoved):
        minor(uniform(1, 2), (1,), (2,))


def test_minor_contracting_dependent_set():
    m = from_bases(3, 2, [(1, 2), (1, 3)])  # 2 parallel 3
    # Contracting both parallel elements only contracts an independent part.
    got = minor(m, (2, 3), ())
    assert got == from_bases(1, 1, [(1,)])


def test_dual_involution_and_complement():
    for m in (uniform(2, 4), named("fano"), graphic(4, K4_EDGES)):
        dd = dual(dual(m))
        assert dd == m
        ground = frozenset(range(1, m.n + 1))
        assert sorted(dual(m).bases) == sorted(
            tuple(sorted(ground - frozenset(b))) for b in m.bases
        )
    assert dual(uniform(2, 4)) == uniform(2, 4)


def test_connectivity():
    assert is_connected(uniform(2, 4))
    s = direct_sum(uniform(1, 2), uniform(1, 2))
    comps = connected_components(s)
    assert sorted(sorted(c) for c in comps) == [[1, 2], [3, 4]]
    loopy = from_bases(3, 1, [(1,), (2,)])
    assert sorted(sorted(c) for c in connected_components(loopy)) == [[1, 2], [3]]


def test_parallel_classes():
    m = from_bases(3, 2, [(1, 2), (1, 3)])
    classes, loops = parallel_classes(m)
    assert classes == [(1,), (2, 3)]
    assert loops == frozenset()


def test_direct_sum_shifts_labels():
    s = direct_sum(uniform(1, 2), uniform(2, 3))
    assert s.n == 5 and s.d == 3
    assert len(s.bases) == 2 * 3
    assert all(b[0] <= 2 < b[1] for b in s.bases)


def test_is_binary_positive():
    for m in (named("fano"), graphic(4, K4_EDGES), graphic(5, K5_EDGES),
              dual(named("fano"))):
        ok, witness = is_binary(m)
        assert ok and witness is None


def test_is_binary_negative_with_witness():
    for m in (uniform(2, 4), named("pg23"), uniform(3, 6)):
        ok, witness = is_binary(m)
        assert not ok
        cset, dset = witness
        got = minor(m, tuple(sorted(cset)), tuple(sorted(dset)))
        assert got == uniform(2, 4)
