import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garside_kit.errors import NotASimple, NotGarsideElement
from garside_kit.families import FamilySpec, dihedral_structure, mn, structure_for
from garside_kit.garside import (
    build_structure,
    complement_in_delta,
    complements_coincide,
    duality_check,
    fraction_word,
    gcd_left,
    gcd_right,
    group_equal,
    group_normalize,
    is_central,
    is_greedy,
    lattice_dot,
    lattice_json,
    nf_word,
    normal_form,
)
from garside_kit.kernel import inverse, lambda_length, make_presentation
from garside_kit.rewrite import (
    all_words_up_to,
    left_divides_bounded,
    right_divides_bounded,
    words_equal,
)

from .conftest import mn_structure


@pytest.mark.parametrize("n,count", [(1, 3), (2, 8), (3, 21), (4, 55)])
def test_simple_counts(n, count):
    g = mn_structure(n)
    assert g.size == count
    assert g.cross_check == {"left": True, "right": True}


def test_m2_simples(m2):
    assert g_words(m2) == {(), (1,), (2,), (1, 2), (2, 1), (2, 2), (2, 1, 2), (2, 2, 2)}
    assert len(m2.coversL) == 9


def g_words(g):
    return set(g.simples)


def test_m3_lattice_shape(m3):
    assert len(m3.coversL) == 29
    assert m3.simples[0] == () and lambda_length(m3.presentation, m3.simples[-1]) == 12


def test_order_matrices(m3):
    g = m3
    p = g.presentation
    for a in range(g.size):
        for b in range(g.size):
            u, v = g.simples[a], g.simples[b]
            assert g.leL[a, b] == left_divides_bounded(p, u, v)[0]
            assert g.leR[a, b] == right_divides_bounded(p, u, v)[0]


def test_meets_and_joins(m3):
    g = m3
    le = g.leL
    for a in range(g.size):
        for b in range(g.size):
            m, j = g.meetL[a, b], g.joinL[a, b]
            assert le[m, a] and le[m, b] and le[a, j] and le[b, j]
            lower = np.flatnonzero(le[:, a] & le[:, b])
            assert all(le[c, m] for c in lower)
            upper = np.flatnonzero(le[a] & le[b])
            assert all(le[j, c] for c in upper)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_delta_central(n):
    g = mn_structure(n)
    assert is_central(g, g.delta)
    assert not is_central(g, (n,))


def test_complements(m3):
    a, b = complement_in_delta(m3, (1,))
    p = m3.presentation
    assert words_equal(p, (1,) + a, m3.delta)
    assert words_equal(p, b + (1,), m3.delta)
    assert complements_coincide(m3)
    with pytest.raises(NotASimple):
        complement_in_delta(m3, (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1))


def test_duality(m2, m3):
    d2, d3 = duality_check(m2), duality_check(m3)
    assert d2.anti_iso.mapping is not None and d3.anti_iso.mapping is not None
    assert d2.self_dual_left and d2.self_dual_right
    assert not d3.self_dual_left and not d3.self_dual_right
    assert d2.left_right_isomorphic and not d3.left_right_isomorphic


def test_nf_examples(m2):
    assert nf_word(m2, normal_form(m2, (1, 2, 1, 2))) == (2, 2, 2)
    assert normal_form(m2, (1, 2, 1, 2)).factors == (m2.top,)
    assert [m2.simples[s] for s in normal_form(m2, (1, 1)).factors] == [(1,), (1,)]
    assert normal_form(m2, ()).factors == ()


def test_nf_agrees_with_oracle():
    for n, bound in [(2, 8), (3, 7)]:
        g = mn_structure(n)
        p = g.presentation
        seen = {}
        for w in all_words_up_to(p, bound):
            nf = normal_form(g, w)
            assert is_greedy(g, nf)
            assert words_equal(p, nf_word(g, nf), w)
            key = nf.factors
            if key in seen:
                assert words_equal(p, seen[key], w)
            seen[key] = w


def test_gcd_examples(m2):
    assert gcd_left(m2, (1, 2), (2, 1)) == ()
    assert words_equal(m2.presentation, gcd_left(m2, (2, 2, 2), (1, 1)), (1,))
    # ρ2³ = ρ1ρ2·ρ1ρ2, so ρ1ρ2 is a right divisor of both
    assert gcd_right(m2, (1, 2), (2, 2, 2)) == (1, 2)
    assert gcd_right(m2, (2, 1), (1, 2)) == ()


def test_gcd_is_greatest_m3(m3):
    p = m3.presentation
    words = list(all_words_up_to(p, 6))
    rng = random.Random(7)
    for _ in range(60):
        u, v = rng.choice(words), rng.choice(words)
        d = gcd_left(m3, u, v)
        assert left_divides_bounded(p, d, u)[0] and left_divides_bounded(p, d, v)[0]
        for c in words:
            if lambda_length(p, c) > lambda_length(p, d):
                if left_divides_bounded(p, c, u)[0] and left_divides_bounded(p, c, v)[0]:
                    raise AssertionError((u, v, c, d))


def test_group_fraction_example(m2, m3):
    e = group_normalize(m2, (-2, 1, 2, 1))
    assert e.denominator.factors == ()
    assert nf_word(m2, e.numerator) == (2,)
    assert fraction_word(m2, e) == (2,)
    assert group_normalize(m3, (1, 3, 1, -3, -2)).is_identity


def test_group_identity_round_trips():
    for n in (2, 3, 4):
        g = mn_structure(n)
        rng = random.Random(n)
        for _ in range(150):
            w = tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(0, 12)))
            assert group_normalize(g, w + inverse(w)).is_identity
            assert group_normalize(g, inverse(w) + w).is_identity
            assert group_equal(g, fraction_word(g, group_normalize(g, w)), w)


def test_group_central_delta_power(m3):
    assert group_equal(m3, m3.delta + (1,), (1,) + m3.delta)
    assert not group_equal(m3, (1, 2), (2, 1))


def test_not_garside_element():
    with pytest.raises(NotGarsideElement) as exc:
        build_structure(mn(3), (3, 3, 3))
    assert exc.value.reason in ("divisor sets differ", "generator not a divisor")
    with pytest.raises(NotGarsideElement):
        build_structure(mn(2), (1, 2))


def test_free_monoid_structure():
    g = build_structure(make_presentation(["g"], []), (1,))
    assert g.size == 2


@pytest.mark.parametrize("m", [3, 5, 7])
def test_dihedral(m):
    g = dihedral_structure(m)
    p = g.presentation
    assert g.cross_check["identities"]
    # every word of λ ≤ λ(Δ) left-dividing Δ lands in a simple, and nothing else does
    divisors = {g.index[w] for w in all_words_up_to(p, 2 * m) if left_divides_bounded(p, w, g.delta)[0]}
    assert divisors == set(range(g.size))


def test_dihedral_m3_is_m2(m2):
    g = dihedral_structure(3)
    assert g.presentation == m2.presentation and g.simples == m2.simples


def test_lattice_emitters(m2):
    doc = lattice_json(m2)
    assert len(doc["simples"]) == 8 and len(doc["coversL"]) == 9
    dot = lattice_dot(m2)
    assert dot.startswith("digraph") and dot.count("->") == 9
    assert dot == lattice_dot(mn_structure(2))


pos3 = st.lists(st.integers(1, 3), max_size=8).map(tuple)


@settings(max_examples=80, deadline=None)
@given(pos3, pos3)
def test_nf_is_a_monoid_invariant(u, v):
    g = mn_structure(3)
    a = normal_form(g, u + v)
    b = normal_form(g, nf_word(g, normal_form(g, u)) + nf_word(g, normal_form(g, v)))
    assert a == b
    assert is_greedy(g, a)


signed3 = st.lists(st.integers(1, 3).flatmap(lambda i: st.sampled_from([i, -i])), max_size=12).map(tuple)


@settings(max_examples=80, deadline=None)
@given(signed3, signed3)
def test_group_normalize_is_multiplicative(u, v):
    g = mn_structure(3)
    fu = fraction_word(g, group_normalize(g, u))
    fv = fraction_word(g, group_normalize(g, v))
    assert group_normalize(g, u + v) == group_normalize(g, fu + fv)
