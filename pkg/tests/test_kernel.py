import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from garside_kit.errors import DuplicateGenerator, MalformedRelation, NoLengthFunction
from garside_kit.families import mn
from garside_kit.kernel import (
    Relation,
    format_word,
    free_reduce,
    from_json,
    inverse,
    is_right_complemented,
    lambda_length,
    make_presentation,
    opposite,
    parse_word,
    to_json,
)


def test_m2_lambda_inferred():
    p = make_presentation(["ρ1", "ρ2"], [((1, 2, 1), (2, 2))])
    assert p.lam == (1, 2)
    assert p.relations == (Relation((1, 2, 1), (2, 2)),)


def test_free_monoid_one_letter():
    p = make_presentation(["g"], [])
    assert p.lam == (1,)
    assert is_right_complemented(p) == (True, None)


def test_no_positive_lambda():
    p = make_presentation(["a", "b"], [((1, 2), (2, 1, 1))])
    assert p.lam is None
    with pytest.raises(NoLengthFunction):
        lambda_length(p, (1,))


def test_inferred_lambda_is_minimal():
    # x^2 = y^3 forces λ = (3, 2)
    p = make_presentation(["x", "y"], [((1, 1), (2, 2, 2))])
    assert p.lam == (3, 2)


def test_malformed_relations():
    with pytest.raises(MalformedRelation):
        make_presentation(["a"], [((), (1,))])
    with pytest.raises(MalformedRelation):
        make_presentation(["a"], [((1, 2), (1,))])
    with pytest.raises(MalformedRelation):
        make_presentation([], [])
    with pytest.raises(MalformedRelation):
        make_presentation(["a", "b"], [((1, 1), (2,))], lam=(1, 1))


def test_duplicate_generator():
    with pytest.raises(DuplicateGenerator):
        make_presentation(["a", "a"], [])


def test_orientation_is_deterministic():
    a = make_presentation(["a", "b"], [((2, 2), (1, 2, 1))])
    b = make_presentation(["a", "b"], [((1, 2, 1), (2, 2))])
    assert a == b
    assert a.relations[0].lhs[0] == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_lambda_lengths(n):
    p = mn(n)
    for i in range(1, n + 1):
        assert lambda_length(p, (1, n, i)) == n + i + 1
    assert lambda_length(p, ()) == 0
    for q in (mn(n), mn(n, "R'"), mn(n, "R''")):
        for r in q.relations:
            assert lambda_length(q, r.lhs) == lambda_length(q, r.rhs)


def test_m3_delta_length():
    assert lambda_length(mn(3), (3,) * 4) == 12 == lambda_length(mn(3), (1, 3) * 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_right_complemented_variants(n):
    assert is_right_complemented(mn(n))[0]
    assert is_right_complemented(mn(n, "R'"))[0]
    assert is_right_complemented(opposite(mn(n, "R''")))[0]
    if n >= 3:
        ok, witness = is_right_complemented(opposite(mn(n, "R'")))
        assert not ok and len(witness) == 2


def test_rprime_op_witness_n3():
    ok, witness = is_right_complemented(opposite(mn(3, "R'")))
    assert not ok
    pairs = {frozenset((r.lhs, r.rhs)) for r in witness}
    assert pairs == {frozenset(((1, 3, 1), (3, 2))), frozenset(((3, 3, 3), (1, 3, 3, 2)))}


def test_opposite():
    p = mn(3, "R'")
    assert opposite(opposite(p)) == p
    assert opposite(mn(2)) == mn(2)
    n = 4
    op = opposite(mn(n, "R''"))
    expected = {
        Relation.oriented((i,) + (n, 1) * (n - j + 1), (j,) + (n, 1) * (n - j) + (n - j + i + 1,))
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    assert set(op.relations) == expected


def test_json_roundtrip():
    p = mn(3)
    doc = to_json(p)
    assert from_json(json.dumps(doc)) == p
    assert doc["generators"][2] == {"name": "ρ3", "lambda": 3}
    with pytest.raises(MalformedRelation):
        from_json({"generators": [{"name": "a"}]})


def test_parse_and_format():
    p = mn(3)
    assert parse_word(p, "1 3 -2") == (1, 3, -2)
    assert parse_word(p, "ρ1 ρ3^2") == (1, 3, 3)
    assert parse_word(p, "r1^-1 r2") == (-1, 2)
    assert parse_word(p, "1") == (1,)
    assert parse_word(p, "") == () == parse_word(p, "e")
    assert format_word(p, (1, -3)) == "ρ1ρ3⁻¹"
    assert format_word(p, ()) == "1"
    with pytest.raises(MalformedRelation):
        parse_word(p, "4")
    with pytest.raises(MalformedRelation):
        parse_word(p, "1 -2", allow_inverse=False)


signed = st.lists(st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g])), max_size=20).map(tuple)


@given(signed)
def test_free_reduce_inverse(w):
    assert free_reduce(w + inverse(w)) == ()
    r = free_reduce(w)
    assert free_reduce(r) == r
