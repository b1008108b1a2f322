import pytest

from garside_kit.cosets import (
    Completed,
    GroupPresentation,
    Overflow,
    coset_enumerate,
    cycle_perm,
    evaluate,
    group_order,
    quotient_of,
    relators_hold,
    symmetric_cycle_check,
)
from garside_kit.errors import GarsideKitError
from garside_kit.families import FamilySpec, make_family, mn


def test_cyclic_two():
    t = coset_enumerate(GroupPresentation.make(["r1"], [(1, 1)]))
    assert t.status == Completed(2)


def test_trivial_and_free():
    assert coset_enumerate(GroupPresentation.make(["a"], [(1,)])).order == 1
    assert coset_enumerate(GroupPresentation.make(["a"], []), max_cosets=50).status == Overflow(50)
    with pytest.raises(GarsideKitError):
        GroupPresentation.make(["a"], [(2,)])


def test_klein_and_s3():
    s3 = GroupPresentation.make(["a", "b"], [(1, 1), (2, 2), (1, 2) * 3])
    assert coset_enumerate(s3).order == 6
    v4 = GroupPresentation.make(["a", "b"], [(1, 1), (2, 2), (1, 2) * 2])
    assert coset_enumerate(v4).order == 4


@pytest.mark.parametrize("n,order", [(1, 2), (2, 6), (3, 24), (4, 120)])
def test_symmetric_quotient(n, order):
    gp = quotient_of(make_family(FamilySpec("Hn", n)), [(1, 1)])
    t = coset_enumerate(gp)
    assert t.order == order
    assert relators_hold(gp, t)
    assert symmetric_cycle_check(gp, n)


def test_g12_quotient():
    gp = quotient_of(mn(3), [(1, 1)])
    assert gp.names == ("r1", "r2", "r3")
    assert set(gp.relators) == {(1, 3, 1, -3, -2), (1, 3, 2, -3, -3), (1, 1)}
    assert coset_enumerate(gp).order == 48


def test_m2_quotient():
    assert coset_enumerate(quotient_of(mn(2), [(1, 1)])).order == 6


def test_relator_order_irrelevant():
    gp = quotient_of(mn(3), [(1, 1)])
    rev = GroupPresentation.make(gp.names, list(reversed(gp.relators)))
    assert coset_enumerate(rev).order == 48


def test_permutations():
    assert cycle_perm(4, 3) == (2, 3, 1, 4)
    c = cycle_perm(3, 3)
    assert evaluate([c], (1, 1, 1)) == (1, 2, 3)
    assert group_order([cycle_perm(4, 2), cycle_perm(4, 4)]) == 24
    assert not symmetric_cycle_check(GroupPresentation.make(["a", "b"], [(1, 2)]), 2)
