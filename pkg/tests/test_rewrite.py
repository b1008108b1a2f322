import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garside_kit.errors import CapExceeded
from garside_kit.families import FamilySpec, make_family, mn
from garside_kit.kernel import lambda_length, make_presentation
from garside_kit.rewrite import (
    ClassIndex,
    cancellativity_scan,
    equiv_class,
    full_class,
    left_divides_bounded,
    random_word,
    right_divides_bounded,
    words_equal,
    words_of_length,
)


def test_delta_class_m2():
    c = equiv_class(mn(2), (2, 2, 2), cap=100)
    assert set(c.members) == {(2, 2, 2), (1, 2, 1, 2), (2, 1, 2, 1)}
    assert not c.capped
    assert c.rep == (2, 2, 2)


def test_empty_class():
    assert set(equiv_class(mn(3), ()).members) == {()}


def test_class_contains_relation_instance():
    assert (2, 3) in equiv_class(mn(3), (1, 3, 1))


def test_class_members_share_lambda():
    p = mn(4)
    c = full_class(p, (4,) * 5)
    assert len({lambda_length(p, w) for w in c}) == 1


def test_words_equal_examples():
    p = mn(3)
    assert words_equal(p, (1, 3) * 3, (3,) * 4)
    assert not words_equal(p, (1, 2, 1), (2, 2))
    assert len(equiv_class(p, (1, 2, 1))) == 1
    assert words_equal(p, (1, 2, 3), (1, 2, 3))


def test_cap_raises(monkeypatch):
    p = mn(3)
    with pytest.raises(CapExceeded):
        words_equal(p, (3,) * 4, (1, 3) * 3, cap=2)
    with pytest.raises(CapExceeded):
        full_class(p, (3,) * 4, cap=5)
    c = equiv_class(p, (3,) * 4, cap=5)
    assert c.capped and len(c) == 5
    monkeypatch.setenv("GARSIDE_KIT_MAX_CAP", "3")
    with pytest.raises(CapExceeded):
        full_class(p, (3,) * 4)


def test_left_divides_examples():
    p = mn(3)
    assert left_divides_bounded(p, (1,), (3, 3)) == (True, (3, 2))
    assert left_divides_bounded(p, (), (3, 1)) == (True, (3, 1))
    assert left_divides_bounded(mn(2), (1,), (2,)) == (False, None)
    assert left_divides_bounded(p, (3, 3, 3), (1,)) == (False, None)


def test_right_divides_examples():
    p = mn(2)
    ok, z = right_divides_bounded(p, (1,), (2, 2))
    assert ok and words_equal(p, z + (1,), (2, 2))
    assert right_divides_bounded(p, (1,), (1, 2)) == (False, None)


def test_words_of_length_shortlex():
    ws = words_of_length(mn(2), 3)
    assert ws == [(1, 2), (2, 1), (1, 1, 1)]


def test_scan_m2_and_free():
    assert cancellativity_scan(mn(2), 8) is None
    assert cancellativity_scan(make_presentation(["a", "b"], []), 6) is None


@pytest.mark.parametrize("n", [3, 4])
def test_scan_hn(n):
    assert cancellativity_scan(make_family(FamilySpec("Hn", n)), 10) is None


def test_scan_finds_failures():
    p = make_presentation(["a", "b", "c"], [((1, 2), (1, 3))])
    side, a, b, c = cancellativity_scan(p, 4)
    assert side == "left" and a == (1,) and {b, c} == {(2,), (3,)}
    q = make_presentation(["a", "b", "c"], [((2, 1), (3, 1))])
    side, a, b, c = cancellativity_scan(q, 4)
    assert side == "right" and a == (1,)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cancellativity_random(n):
    p = mn(n)
    rng = random.Random(n)
    for _ in range(40):
        u = random_word(p, rng.randint(1, 6), rng)
        v = random_word(p, lambda_length(p, u), rng)
        w = random_word(p, rng.randint(1, 4), rng)
        e = words_equal(p, u, v)
        assert words_equal(p, u + w, v + w) == e
        assert words_equal(p, w + u, w + v) == e


def test_antisymmetry_m3():
    p = mn(3)
    index = ClassIndex(p, 6)
    words = list(index.cid)
    rng = random.Random(3)
    for _ in range(200):
        u, v = rng.choice(words), rng.choice(words)
        if left_divides_bounded(p, u, v)[0] and left_divides_bounded(p, v, u)[0]:
            assert words_equal(p, u, v)


word3 = st.lists(st.integers(1, 3), max_size=6).map(tuple)


@settings(max_examples=60, deadline=None)
@given(word3, word3, word3)
def test_equality_is_an_equivalence(u, v, w):
    p = mn(3)
    assert words_equal(p, u, u)
    assert words_equal(p, u, v) == words_equal(p, v, u)
    if words_equal(p, u, v) and words_equal(p, v, w):
        assert words_equal(p, u, w)


@settings(max_examples=60, deadline=None)
@given(word3)
def test_class_closed_and_contains_seed(w):
    p = mn(3)
    c = equiv_class(p, w)
    assert w in c
    assert all(words_equal(p, w, x) for x in list(c.members)[:5])
