from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from dilute import diagrams as dg
from dilute.towers import catalan


def perfect_matchings(points):
    if not points:
        yield []
        return
    a, rest = points[0], points[1:]
    for k, b in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(a, b)] + m


def raw_diagram(top, bottom, pairs):
    match = [0] * (len(top) + len(bottom))
    for a, b in pairs:
        match[a], match[b] = b, a
    return dg.DiluteDiagram(tuple(top), tuple(bottom), tuple(match))


def brute_force_count(n, c):
    """Every colouring and every matching, filtered by colour and planarity."""
    total = 0
    for cols in itertools.product(range(c), repeat=2 * n):
        for m in perfect_matchings(list(range(2 * n))):
            if any(cols[a] != cols[b] for a, b in m):
                continue
            d = raw_diagram(cols[:n], cols[n:], m)
            if dg.is_planar_per_colour(d):
                total += 1
    return total


@pytest.mark.parametrize("n,c", [(0, 2), (1, 2), (2, 2), (3, 2), (2, 3), (1, 3), (3, 1)])
def test_enumeration_matches_brute_force(n, c):
    assert len(dg.enumerate_basis(n, c)) == brute_force_count(n, c)


def test_enumerated_counts():
    assert [len(dg.enumerate_basis(n, 2)) for n in range(6)] == [1, 2, 10, 70, 588, 5544]
    assert len(dg.enumerate_basis(3, 3)) == 285
    assert [len(dg.enumerate_basis(n, 2, dg.PERMUTATION)) for n in range(5)] == [1, 2, 6, 20, 70]


def test_single_colour_is_catalan():
    assert [len(dg.enumerate_basis(n, 1)) for n in range(6)] == [catalan(n) for n in range(6)]


def test_planarity_examples():
    # same-colour crossing of two through strands
    same = raw_diagram((0, 0), (0, 0), [(0, 3), (1, 2)])
    assert not dg.is_planar_per_colour(same)
    with pytest.raises(ValueError):
        same.validate()
    mixed = raw_diagram((0, 1), (1, 0), [(0, 3), (1, 2)])
    assert dg.is_planar_per_colour(mixed)
    nested = raw_diagram((0, 0, 0, 0), (), [(0, 3), (1, 2)])
    assert dg.is_planar_per_colour(nested)


def test_propagating_content():
    s = dg.crossing((0, 1), 0)
    assert dg.propagating_content(s, 2) == (1, 1)
    cap = dg.cup_cap((0, 0), (1, 1), 0)
    assert dg.propagating_content(cap, 2) == (0, 0)


def test_compose_mismatch_and_loops():
    cap = dg.cup_cap((0, 0), (0, 0), 0)
    got = dg.compose(cap, cap)
    assert got == (cap, ((0, 1),))
    other = dg.cup_cap((1, 1), (1, 1), 0)
    assert dg.compose(cap, other) is None


def test_identity_is_unit():
    for d in dg.enumerate_basis(2, 2):
        assert dg.compose(dg.identity(d.top), d) == (d, ())
        assert dg.compose(d, dg.identity(d.bottom)) == (d, ())


def test_json_roundtrip():
    for d in dg.enumerate_basis(2, 2):
        data = d.to_json()
        assert set(data) == {"top", "bottom", "pairs"}
        assert dg.DiluteDiagram.from_json(data) == d


def test_close_last_strand():
    ident = dg.identity((0, 1))
    closed, loops = dg.close_last_strand(ident)
    assert closed == dg.identity((0,)) and loops == ((1, 1),)
    assert dg.close_last_strand(dg.crossing((0, 1), 0)) is None


basis3 = dg.enumerate_basis(3, 2)
diagrams3 = st.sampled_from(basis3)


@given(diagrams3, diagrams3, diagrams3)
def test_compose_associative(a, b, c):
    def prod(x, y):
        if x is None or y is None:
            return None
        r = dg.compose(x[0], y[0])
        if r is None:
            return None
        loops = dict(x[1])
        for k, v in list(y[1]) + list(r[1]):
            loops[k] = loops.get(k, 0) + v
        return r[0], tuple(sorted(loops.items()))

    A, B, C = (a, ()), (b, ()), (c, ())
    assert prod(prod(A, B), C) == prod(A, prod(B, C))


@given(diagrams3, diagrams3)
def test_products_stay_planar(a, b):
    r = dg.compose(a, b)
    if r is not None:
        assert dg.is_planar_per_colour(r[0])
        r[0].validate()
