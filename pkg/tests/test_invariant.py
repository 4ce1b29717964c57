from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from dilute import invariant as inv
from dilute.scalars import DELTA_SPECIAL, Q, as_scalar, q, simplify
from dilute.towers import AlgebraContext, generators_S2, identity, symmetric_basis

A = q
loop = -(q ** 2) - q ** -2

# textbook Kauffman brackets (normalised so that an empty circle is -A^2 - A^-2)
KAUFFMAN = {
    "unknot": loop,
    "unlink": loop ** 2,
    "hopf": A ** 6 + A ** 2 + A ** -2 + A ** -6,
    "trefoil": loop * (A ** -7 - A ** -3 - A ** 5),
    "figure-eight": loop * (A ** 8 - A ** 4 + 1 - A ** -4 + A ** -8),
    "unknot-curl": loop * (-(A ** 3)),
}


def words(max_strands=3, max_len=4):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_strands))
        if n == 1:
            return inv.BraidWord(1, ())
        gens = [s * i for i in range(1, n) for s in (1, -1)]
        return inv.BraidWord(n, tuple(draw(st.lists(st.sampled_from(gens), max_size=max_len))))
    return build()


def test_parse_and_render():
    w = inv.BraidWord.parse("1, -2 1", 3)
    assert w.letters == (1, -2, 1)
    assert str(w) == "1 -2 1"
    assert (w.positive, w.negative, w.exponent_sum) == (2, 1, 1)
    assert w.inverse().letters == (-1, 2, -1)
    assert w.stabilize(-1).letters == (1, -2, 1, -3)


@pytest.mark.parametrize("text,n", [("1 x", 2), ("0", 2), ("3", 3), ("", 0)])
def test_parse_errors(text, n):
    with pytest.raises(ValueError):
        inv.BraidWord.parse(text, n)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_identity_trace(n):
    ctx = AlgebraContext.specialized(n)
    assert inv.closure_trace(identity(ctx)) == simplify((2 * DELTA_SPECIAL) ** n)


def test_u_generator_trace():
    ctx = AlgebraContext.specialized(2)
    assert inv.closure_trace(generators_S2(ctx, 1)["u"]) == simplify(2 * DELTA_SPECIAL)


@pytest.mark.parametrize("kind", "esut")
def test_expectation_rules_agree(kind):
    ctx = AlgebraContext.specialized(1)
    span = symmetric_basis(ctx)
    for a in span:
        for b in span:
            assert inv.diagrammatic_expectation(kind, a, b) == inv.rule_based_expectation(kind, a, b)


def test_identity_closure_is_two_delta():
    ctx = AlgebraContext.specialized(1)
    one = identity(ctx)
    got = inv.diagrammatic_expectation("1", one, one)
    assert got == one.scale(2 * DELTA_SPECIAL)
    assert got != inv.rule_based_expectation("1", one, one)


def test_markov():
    assert inv.check_markov(2)
    assert inv.markov_factor(1) == -(q ** 4)


def test_tower_compatibility():
    assert inv.check_tower_compatibility(2)


@pytest.mark.parametrize("name", sorted(KAUFFMAN))
def test_kauffman_oracle(name):
    assert inv.kauffman_bracket(inv.load_example(name)) == simplify(KAUFFMAN[name])


def test_hopf_state_sum_by_hand():
    # two monochrome colourings give the Hopf bracket, two mixed ones a split pair of circles
    expected = simplify(2 * KAUFFMAN["hopf"] + 2 * loop ** 2)
    assert inv.dilute_state_sum(inv.load_example("hopf")) == expected


@pytest.mark.parametrize("name", sorted(KAUFFMAN))
def test_bundled_pd_matches_braid_closure(name):
    pd = inv.load_example(name)
    word = inv.STANDARD_BRAIDS.get(name) or {"figure-eight": inv.EXTRA_BRAIDS["figure-eight"]}[name]
    assert inv.dilute_state_sum(pd) == inv.dilute_state_sum(inv.braid_closure_pd(word))


def test_pd_validation_errors():
    with pytest.raises(ValueError):
        inv.PDCode([(1, 2, 3)], [1])
    with pytest.raises(ValueError):
        inv.PDCode([(1, 2, 2, 3)], [1])
    with pytest.raises(ValueError):
        inv.PDCode([(1, 1, 2, 2)], [1, 1])
    with pytest.raises(ValueError):
        inv.PDCode([(1, 1, 2, 2)], [1], [[1], [2]])


def test_pd_json_roundtrip():
    pd = inv.load_example("trefoil")
    again = inv.PDCode.from_json(pd.to_json())
    assert again.to_json() == pd.to_json()
    alt = inv.PDCode.from_json({"crossings": [{"arcs": list(x), "sign": s} for x, s in zip(pd.crossings, pd.signs)]})
    assert alt.writhe == 3


@settings(max_examples=15)
@given(st.sampled_from(sorted(KAUFFMAN)), st.sampled_from(sorted(KAUFFMAN)))
def test_state_sum_multiplicative(a, b):
    p1, p2 = inv.load_example(a), inv.load_example(b)
    assert inv.dilute_state_sum(inv.disjoint_union(p1, p2)) == simplify(
        inv.dilute_state_sum(p1) * inv.dilute_state_sum(p2))


def test_calibration_constants():
    lam, Q2, Q_star, note = inv.calibrate()
    assert lam == q and Q2 == q ** 2 and Q_star == -q
    assert "sign" in note


def test_calibration_crosscheck_all():
    report = inv.calibrate_and_crosscheck({**inv.STANDARD_BRAIDS, **inv.EXTRA_BRAIDS})
    assert report.ok, [c.to_json() for c in report.checks if not c.ok]


def test_trace_even_in_Q():
    t = as_scalar(inv.closure_trace(inv.braid_image(inv.BraidWord(2, (1, 1, 1)), Q)))
    assert t == t.substitute("Q", -Q)


@settings(max_examples=25)
@given(words())
def test_conjugation_invariance(w):
    base = inv.link_invariant_trace(w, -q).normalized
    for k in range(1, 3):
        assert inv.link_invariant_trace(w.rotate(k), -q).normalized == base
    if w.n > 1:
        g = inv.BraidWord(w.n, (1,))
        assert inv.link_invariant_trace(g * w * g.inverse(), -q).normalized == base


@settings(max_examples=25)
@given(words(max_strands=2), st.sampled_from([1, -1]))
def test_stabilization_invariance(w, sign):
    a = inv.link_invariant_trace(w, -q).normalized
    b = inv.link_invariant_trace(w.stabilize(sign), -q).normalized
    assert a == b


def test_normalized_invariant_of_unknots():
    one = inv.link_invariant_trace(inv.BraidWord(1, ()), -q).normalized
    curl = inv.link_invariant_trace(inv.BraidWord(3, (1, -2)), -q).normalized
    assert one == curl == simplify(2 * DELTA_SPECIAL)
