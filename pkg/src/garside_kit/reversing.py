"""Syntactic right-complements, subword reversing and the cube condition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .errors import CubeConditionFailed, Diverged, Inconclusive, NotRightComplemented
from .kernel import Presentation, is_right_complemented, opposite, reverse
from .rewrite import words_equal

DEFAULT_BUDGET = 10**5

DEFINED, UNDEFINED, DIVERGED = "defined", "undefined", "diverged"


@dataclass(frozen=True)
class ThetaOutcome:
    status: str
    word: tuple | None = None
    steps: int = 0

    @property
    def defined(self):
        return self.status == DEFINED


@dataclass(frozen=True)
class ComplementTable:
    """θ on generator pairs: ``entries[(s, t)]`` is θ(s, t); missing pairs are undefined."""

    rank: int
    entries: dict

    def __call__(self, s, t):
        return self.entries.get((s, t))

    def defined(self, s, t):
        return (s, t) in self.entries

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.entries.items()))))


def complement_table(p: Presentation) -> ComplementTable:
    ok, witness = is_right_complemented(p)
    if not ok:
        raise NotRightComplemented(f"offending relations: {witness}")
    entries = {(s, s): () for s in p.generators}
    for r in p.relations:
        s, t = r.lhs[0], r.rhs[0]
        entries[(s, t)] = r.lhs[1:]
        entries[(t, s)] = r.rhs[1:]
    return ComplementTable(p.rank, entries)


def reverse_pair(table: ComplementTable, u, v, budget=DEFAULT_BUDGET):
    """Right-reverse u⁻¹v to v'·u'⁻¹ and return ``(status, v', u', steps)``.

    On success v' = θ(u, v) and u' = θ(v, u).  Each table lookup costs one
    step; the left argument is consumed first.
    """
    # the signed word u^-1 v, stored as a list; negatives are -g
    w = [-g for g in reversed(u)] + list(v)
    steps = 0
    i = 0
    while True:
        # leftmost negative-positive pair at or after i-1
        i = max(i - 1, 0)
        while i + 1 < len(w) and not (w[i] < 0 < w[i + 1]):
            i += 1
        if i + 1 >= len(w):
            break
        s, t = -w[i], w[i + 1]
        if steps >= budget:
            return DIVERGED, None, None, steps
        steps += 1
        if s == t:
            w[i : i + 2] = []
            continue
        a = table(s, t)
        if a is None:
            return UNDEFINED, None, None, steps
        b = table(t, s)
        w[i : i + 2] = list(a) + [-g for g in reversed(b)]
    k = 0
    while k < len(w) and w[k] > 0:
        k += 1
    pos = tuple(w[:k])
    neg = tuple(-g for g in reversed(w[k:]))
    return DEFINED, pos, neg, steps


def theta_eval(table: ComplementTable, u, v, budget=DEFAULT_BUDGET) -> ThetaOutcome:
    status, pos, _, steps = reverse_pair(table, tuple(u), tuple(v), budget)
    return ThetaOutcome(status, pos, steps)


def theta_both(table, u, v, budget=DEFAULT_BUDGET):
    """(θ(u,v), θ(v,u)); raises Diverged, returns None when undefined."""
    status, pos, neg, steps = reverse_pair(table, tuple(u), tuple(v), budget)
    if status == DIVERGED:
        raise Diverged(steps)
    if status == UNDEFINED:
        return None
    return pos, neg


PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class CubeResult:
    verdict: str
    triple: tuple
    left: ThetaOutcome
    right: ThetaOutcome
    diverged: bool = False

    @property
    def passed(self):
        return self.verdict == PASS


def _nested(table, x, y, z, budget):
    """θ(θ(x,y), θ(x,z)) with undefined/diverged propagated."""
    a = theta_eval(table, x, y, budget)
    b = theta_eval(table, x, z, budget)
    for o in (a, b):
        if not o.defined:
            return o
    return theta_eval(table, a.word, b.word, budget)


def cube_condition(p: Presentation, triple, sharp=True, equality=None, budget=DEFAULT_BUDGET,
                   table=None) -> CubeResult:
    """Check the (sharp) θ-cube condition on one triple of words.

    ``equality(u, v)`` decides equivalence for the non-sharp variant and
    defaults to the rewrite oracle on ``p``; it may raise Inconclusive.
    """
    table = table or complement_table(p)
    a, b, c = (tuple(x) for x in triple)
    left = _nested(table, a, b, c, budget)
    right = _nested(table, b, a, c, budget)
    if DIVERGED in (left.status, right.status):
        return CubeResult(FAIL, (a, b, c), left, right, diverged=True)
    if left.status == UNDEFINED and right.status == UNDEFINED:
        return CubeResult(PASS, (a, b, c), left, right)
    if left.status != right.status:
        return CubeResult(FAIL, (a, b, c), left, right)
    if left.word == right.word:
        return CubeResult(PASS, (a, b, c), left, right)
    if sharp:
        return CubeResult(FAIL, (a, b, c), left, right)
    equality = equality or (lambda u, v: words_equal(p, u, v))

    try:
        same = equality(left.word, right.word)
    except Inconclusive:
        return CubeResult(INCONCLUSIVE, (a, b, c), left, right)
    return CubeResult(PASS if same else FAIL, (a, b, c), left, right)


def cube_sweep(p: Presentation, sharp=True, budget=DEFAULT_BUDGET):
    """Run the cube check on every ordered triple of pairwise distinct generators."""
    table = complement_table(p)
    return [
        cube_condition(p, ((i,), (j,), (k,)), sharp=sharp, budget=budget, table=table)
        for i, j, k in permutations(p.generators, 3)
    ]


@lru_cache(maxsize=64)
def _cube_ok(p: Presentation):
    ok, _ = is_right_complemented(p)
    if not ok:
        return False
    return all(r.passed for r in cube_sweep(p, sharp=False))


def _checked_table(p):
    ok, witness = is_right_complemented(p)
    if not ok:
        raise NotRightComplemented(f"offending relations: {witness}")
    if not _cube_ok(p):
        raise CubeConditionFailed("θ-cube condition fails on a generator triple")
    return complement_table(p)


def right_lcm(p: Presentation, u, v, budget=DEFAULT_BUDGET):
    """``(lcm, θ(u,v), θ(v,u))`` or None when u and v have no common right-multiple."""
    table = _checked_table(p)
    u, v = tuple(u), tuple(v)
    r = theta_both(table, u, v, budget)
    if r is None:
        return None
    cu, cv = r
    return u + cu, cu, cv


def left_lcm(p: Presentation, u, v, budget=DEFAULT_BUDGET):
    """``(lcm, x, y)`` with lcm = x·u = y·v, computed by reversing in the opposite presentation."""
    q = opposite(p)
    r = right_lcm(q, reverse(u), reverse(v), budget)
    if r is None:
        return None
    m, cu, cv = r
    return reverse(m), reverse(cu), reverse(cv)


def atoms_lcm(p: Presentation, side="right", budget=DEFAULT_BUDGET):
    """Iterated lcm of all generators, or None if some pair has no common multiple."""
    f = right_lcm if side == "right" else left_lcm
    acc = (1,)
    for g in list(p.generators)[1:]:
        r = f(p, acc, (g,), budget)
        if r is None:
            return None
        acc = r[0]
    return acc
