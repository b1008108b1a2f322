"""Brute-force word equivalence for homogeneous presentations.

Every query is answered by exhausting equivalence classes under the
defining relations.  Homogeneity keeps each class finite; the cap only
guards against classes too large to hold in memory, and hitting it raises
:class:`CapExceeded` instead of answering.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import CapExceeded, NoLengthFunction
from .kernel import Presentation, lambda_length, shortlex_key

DEFAULT_CAP = 10**6


def default_cap():
    env = os.environ.get("GARSIDE_KIT_MAX_CAP")
    return int(env) if env else DEFAULT_CAP


def _require_lambda(p):
    if p.lam is None:
        raise NoLengthFunction("class exhaustion needs a homogeneous length function")


def neighbours(p: Presentation, w):
    """All words obtained from ``w`` by one relation application."""
    rules = p.rules
    n = len(w)
    for k in range(n):
        for lhs, rhs in rules.get(w[k], ()):
            m = len(lhs)
            if k + m <= n and w[k : k + m] == lhs:
                yield w[:k] + rhs + w[k + m :]


@dataclass(frozen=True)
class EquivClass:
    seed: tuple
    members: frozenset
    capped: bool

    @property
    def rep(self):
        """ShortLex-least member."""
        return min(self.members, key=shortlex_key)

    def __len__(self):
        return len(self.members)

    def __contains__(self, w):
        return tuple(w) in self.members


def equiv_class(p: Presentation, w, cap=None) -> EquivClass:
    _require_lambda(p)
    cap = cap or default_cap()
    w = tuple(w)
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for v in neighbours(p, u):
            if v not in seen:
                if len(seen) >= cap:
                    return EquivClass(w, frozenset(seen), True)
                seen.add(v)
                queue.append(v)
    return EquivClass(w, frozenset(seen), False)


def full_class(p, w, cap=None):
    """Members of the class of ``w``; raises if the cap is hit."""
    cap = cap or default_cap()
    c = equiv_class(p, w, cap)
    if c.capped:
        raise CapExceeded(cap)
    return c.members


def normal_rep(p, w, cap=None):
    """ShortLex-least word equivalent to ``w``."""
    return min(full_class(p, w, cap), key=shortlex_key)


def words_equal(p: Presentation, u, v, cap=None) -> bool:
    """Decide u ≡ v by bidirectional breadth-first search."""
    _require_lambda(p)
    cap = cap or default_cap()
    u, v = tuple(u), tuple(v)
    if u == v:
        return True
    if lambda_length(p, u) != lambda_length(p, v):
        return False
    seen = [{u}, {v}]
    frontier = [[u], [v]]
    while True:
        if not frontier[0] or not frontier[1]:
            # one side closed without meeting the other
            return False
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt = []
        for w in frontier[side]:
            for x in neighbours(p, w):
                if x in other:
                    return True
                if x not in mine:
                    if len(mine) >= cap:
                        raise CapExceeded(cap)
                    mine.add(x)
                    nxt.append(x)
        frontier[side] = nxt


def left_divides_bounded(p: Presentation, u, v, cap=None):
    """Return ``(True, z)`` with u·z ≡ v, or ``(False, None)``.

    Any factorisation u·z ≡ v puts the literal word u·z in the class of v,
    so it is enough to scan that class for members with prefix u.
    """
    _require_lambda(p)
    u, v = tuple(u), tuple(v)
    if lambda_length(p, u) > lambda_length(p, v):
        return False, None
    k = len(u)
    tails = [w[k:] for w in full_class(p, v, cap) if w[:k] == u]
    if not tails:
        return False, None
    return True, normal_rep(p, min(tails, key=shortlex_key), cap)


def right_divides_bounded(p: Presentation, u, v, cap=None):
    """Return ``(True, z)`` with z·u ≡ v, or ``(False, None)``."""
    _require_lambda(p)
    u, v = tuple(u), tuple(v)
    if lambda_length(p, u) > lambda_length(p, v):
        return False, None
    k = len(u)
    heads = [w[: len(w) - k] for w in full_class(p, v, cap) if k == 0 or w[-k:] == u]
    if not heads:
        return False, None
    return True, normal_rep(p, min(heads, key=shortlex_key), cap)


def words_of_length(p: Presentation, total):
    """All words of λ-length exactly ``total``, in ShortLex order."""
    _require_lambda(p)
    lam = p.lam
    out = []

    def rec(prefix, left):
        if left == 0:
            out.append(tuple(prefix))
            return
        for g in p.generators:
            if lam[g - 1] <= left:
                prefix.append(g)
                rec(prefix, left - lam[g - 1])
                prefix.pop()

    rec([], total)
    out.sort(key=shortlex_key)
    return out


class ClassIndex:
    """Partition of all words up to a λ-bound into equivalence classes.

    ``cid[w]`` is the class id of word ``w``; ids are assigned in order of
    the ShortLex-least representative, level by level.
    """

    def __init__(self, p: Presentation, max_lambda, cap=None):
        _require_lambda(p)
        self.p = p
        self.max_lambda = max_lambda
        self.cid = {}
        self.reps = []
        for total in range(max_lambda + 1):
            for w in words_of_length(p, total):
                if w in self.cid:
                    continue
                members = full_class(p, w, cap)
                k = len(self.reps)
                self.reps.append(w)
                for m in members:
                    self.cid[m] = k

    def same(self, u, v):
        return self.cid[tuple(u)] == self.cid[tuple(v)]


def cancellativity_scan(p: Presentation, max_lambda, cap=None):
    """Search for a failure of left or right cancellativity.

    Returns None, or ``(side, a, b, c)`` with b ≢ c and a·b ≡ a·c (side
    "left") or b·a ≡ c·a (side "right"), all words of λ-length with
    λ(a)+λ(b) ≤ max_lambda.
    """
    index = ClassIndex(p, max_lambda, cap)
    cid = index.cid
    left, right = {}, {}
    for w in sorted(cid, key=shortlex_key):
        c = cid[w]
        for k in range(1, len(w)):
            a, b = w[:k], w[k:]
            key = (c, a)
            prev = left.setdefault(key, b)
            if cid[prev] != cid[b]:
                return ("left", a, prev, b)
            a2, b2 = w[len(w) - k :], w[: len(w) - k]
            key = (c, a2)
            prev = right.setdefault(key, b2)
            if cid[prev] != cid[b2]:
                return ("right", a2, prev, b2)
    return None


def all_words_up_to(p: Presentation, max_lambda):
    for total in range(max_lambda + 1):
        yield from words_of_length(p, total)


def random_word(p: Presentation, total, rng):
    """A random word of λ-length exactly ``total``."""
    lam = p.lam
    w = []
    left = total
    while left > 0:
        choices = [g for g in p.generators if lam[g - 1] <= left]
        g = rng.choice(choices)
        w.append(g)
        left -= lam[g - 1]
    return tuple(w)


__all__ = [
    "EquivClass",
    "ClassIndex",
    "equiv_class",
    "words_equal",
    "left_divides_bounded",
    "right_divides_bounded",
    "cancellativity_scan",
    "words_of_length",
    "all_words_up_to",
    "neighbours",
    "normal_rep",
    "full_class",
    "default_cap",
]
