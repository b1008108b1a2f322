"""Garside structures: simples, divisor lattices, normal forms, fractions.

Simples are found from the equivalence class of Δ: every word representing
a left-divisor of Δ is a literal prefix of some word in that class, and
dually for right-divisors and suffixes.  When a right-complemented
presentation satisfying the cube condition is available, the divisor sets
are enumerated a second time by subword reversing and the two answers are
compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

from .errors import GarsideKitError, NotASimple, NotGarsideElement
from .kernel import Presentation, is_right_complemented, lambda_length, opposite, reverse, shortlex_key
from .reversing import DEFAULT_BUDGET, _cube_ok, complement_table, theta_both
from .rewrite import full_class, words_equal


class CrossCheckFailed(GarsideKitError):
    pass


@dataclass(frozen=True)
class NormalForm:
    factors: tuple  # simple indices, all nontrivial

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class GroupElement:
    """The left fraction denominator⁻¹ · numerator."""

    denominator: NormalForm
    numerator: NormalForm

    @property
    def is_identity(self):
        return not self.denominator.factors and not self.numerator.factors


@dataclass(frozen=True)
class LatticeIso:
    mapping: tuple | None


@dataclass
class GarsideStructure:
    presentation: Presentation
    delta: tuple
    simples: list  # ShortLex-least representative per simple
    index: dict  # every word representing a simple -> its id
    lam: np.ndarray
    leL: np.ndarray
    leR: np.ndarray
    quotL: dict  # (c, b) -> z with c·z = b
    quotR: dict  # (c, b) -> z with z·c = b
    meetL: np.ndarray = None
    joinL: np.ndarray = None
    meetR: np.ndarray = None
    joinR: np.ndarray = None
    cross_check: dict = field(default_factory=dict)

    @property
    def size(self):
        return len(self.simples)

    @property
    def one(self):
        return 0

    @property
    def top(self):
        return self.size - 1

    def simple_id(self, w):
        try:
            return self.index[tuple(w)]
        except KeyError:
            raise NotASimple(f"{w} is not a divisor of Δ") from None

    def word(self, s):
        return self.simples[s]

    def words(self, factors):
        out = ()
        for s in factors:
            out += self.simples[s]
        return out

    @cached_property
    def right_comp(self):
        """∂s with s·∂s = Δ."""
        return np.array([self.quotL[(s, self.top)] for s in range(self.size)])

    @cached_property
    def left_comp(self):
        """∂'s with ∂'s·s = Δ."""
        return np.array([self.quotR[(s, self.top)] for s in range(self.size)])

    @cached_property
    def conj(self):
        """s ↦ Δ·s·Δ⁻¹ on simples."""
        return self.left_comp[self.left_comp]

    @cached_property
    def gen_ids(self):
        return [self.simple_id((g,)) for g in self.presentation.generators]

    def mul(self, a, b):
        """Id of the simple a·b, or None when the product is not simple."""
        return self.index.get(self.simples[a] + self.simples[b])

    @cached_property
    def coversL(self):
        return _covers(self.leL)

    @cached_property
    def coversR(self):
        return _covers(self.leR)

    @cached_property
    def op(self):
        """The structure of the opposite monoid."""
        return build_structure(opposite(self.presentation), reverse(self.delta), check=False)


def _covers(le):
    strict = le & ~np.eye(len(le), dtype=bool)
    two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cov = strict & ~two_step
    return sorted((int(i), int(j)) for i, j in zip(*np.nonzero(cov)))


def _bounds(le, lam, up):
    """Meet (up=False) or join (up=True) table of a finite poset, or None if not a lattice."""
    n = len(le)
    out = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            if up:
                cand = np.nonzero(le[x, :] & le[y, :])[0]
                best = cand[np.argmin(lam[cand])] if len(cand) else None
                ok = best is not None and le[best, cand].all()
            else:
                cand = np.nonzero(le[:, x] & le[:, y])[0]
                best = cand[np.argmax(lam[cand])] if len(cand) else None
                ok = best is not None and le[cand, best].all()
            if not ok:
                return None, (x, y)
            out[x, y] = out[y, x] = best
    return out, None


def is_lattice(le, meet, join):
    """``le`` is a partial order and ``meet``/``join`` are its greatest lower and least upper bounds."""
    n = len(le)
    idx = np.arange(n)
    if not le[idx, idx].all() or (le & le.T & ~np.eye(n, dtype=bool)).any():
        return False
    if ((le.astype(np.int64) @ le.astype(np.int64) > 0) & ~le).any():
        return False
    for x in range(n):
        m, j = meet[x], join[x]
        if not (le[m, x].all() and le[m, idx].all() and le[x, j].all() and le[idx, j].all()):
            return False
        lower = le[:, x][:, None] & le  # lower[c, y]: c ≤ x and c ≤ y
        if (lower & ~le[:, m]).any():
            return False
        upper = le[x, :][:, None] & le.T  # upper[c, y]: x ≤ c and y ≤ c
        if (upper & ~le[j, :].T).any():
            return False
    return True


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _neighbours(p, w):
    from .rewrite import neighbours

    return neighbours(p, w)


def build_structure(p: Presentation, delta, left_variant=None, right_variant=None, cap=None,
                    budget=DEFAULT_BUDGET, check=True) -> GarsideStructure:
    """Enumerate Div(Δ) and verify the Garside axioms that concern simples.

    ``left_variant`` must be a right-complemented presentation of the same
    monoid satisfying the cube condition; ``right_variant`` one whose
    opposite is.  Either defaults to ``p`` when ``p`` qualifies; when no
    variant qualifies the reversing cross-check for that side is skipped
    and recorded as ``None`` in ``cross_check``.
    """
    delta = tuple(delta)
    lambda_length(p, delta)  # raises NoLengthFunction
    dclass = full_class(p, delta, cap)
    prefixes = {w[:k] for w in dclass for k in range(len(w) + 1)}
    suffixes = {w[k:] for w in dclass for k in range(len(w) + 1)}
    if prefixes != suffixes:
        extra = min(prefixes ^ suffixes, key=shortlex_key)
        raise NotGarsideElement("divisor sets differ", f"witness word {extra}")
    for g in p.generators:
        if (g,) not in prefixes:
            raise NotGarsideElement("generator not a divisor", p.names[g - 1])

    uf = _UnionFind(prefixes)
    for w in prefixes:
        for v in _neighbours(p, w):
            uf.union(w, v)
    groups = {}
    for w in prefixes:
        groups.setdefault(uf.find(w), []).append(w)
    reps = sorted(
        (min(ws, key=shortlex_key) for ws in groups.values()),
        key=lambda w: (lambda_length(p, w), shortlex_key(w)),
    )
    rid = {w: k for k, w in enumerate(reps)}
    index = {}
    for ws in groups.values():
        k = rid[min(ws, key=shortlex_key)]
        for w in ws:
            index[w] = k
    n = len(reps)
    lam = np.array([lambda_length(p, w) for w in reps])

    quotL, quotR = {}, {}
    leL = np.zeros((n, n), dtype=bool)
    leR = np.zeros((n, n), dtype=bool)
    for w, b in index.items():
        for k in range(len(w) + 1):
            head, tail = index[w[:k]], index[w[k:]]
            if quotL.setdefault((head, b), tail) != tail:
                raise NotGarsideElement("lattice failure", f"left cancellativity fails at {w}")
            if quotR.setdefault((tail, b), head) != head:
                raise NotGarsideElement("lattice failure", f"right cancellativity fails at {w}")
            leL[head, b] = True
            leR[tail, b] = True

    g = GarsideStructure(p, delta, reps, index, lam, leL, leR, quotL, quotR)
    for name, le in (("L", leL), ("R", leR)):
        meet, bad = _bounds(le, lam, up=False)
        if meet is None:
            raise NotGarsideElement("lattice failure", f"no meet{name} for {reps[bad[0]]}, {reps[bad[1]]}")
        join, bad = _bounds(le, lam, up=True)
        if join is None:
            raise NotGarsideElement("lattice failure", f"no join{name} for {reps[bad[0]]}, {reps[bad[1]]}")
        setattr(g, "meet" + name, meet)
        setattr(g, "join" + name, join)

    if check:
        g.cross_check = _cross_check(g, left_variant, right_variant, budget)
    return g


def _usable(q):
    return q is not None and is_right_complemented(q)[0] and _cube_ok(q)


def _saturate(table, delta, lam_of, budget):
    """Left-divisors of ``delta`` found by reversing alone, one word per element."""
    found = {0: [()]}
    frontier = [()]
    rank = table.rank
    while frontier:
        nxt = []
        for u in frontier:
            for s in range(1, rank + 1):
                w = u + (s,)
                r = theta_both(table, w, delta, budget)
                if r is None or r[1] != ():
                    continue
                bucket = found.setdefault(lam_of(w), [])
                if any(theta_both(table, w, x, budget) == ((), ()) for x in bucket):
                    continue
                bucket.append(w)
                nxt.append(w)
        frontier = nxt
    return [w for ws in found.values() for w in ws]


def _cross_check(g, left_variant, right_variant, budget):
    p = g.presentation
    out = {"left": None, "right": None}
    lv = left_variant if left_variant is not None else (p if _usable(p) else None)
    if lv is not None and _usable(lv):
        words = _saturate(complement_table(lv), g.delta, lambda w: lambda_length(p, w), budget)
        ids = sorted(g.index.get(w, -1) for w in words)
        if ids != list(range(g.size)):
            raise CrossCheckFailed(f"reversing found {len(words)} left-divisors, oracle {g.size}")
        out["left"] = True
    rv = right_variant if right_variant is not None else p
    rv_op = opposite(rv)
    if _usable(rv_op):
        words = _saturate(complement_table(rv_op), reverse(g.delta), lambda w: lambda_length(p, w), budget)
        ids = sorted(g.index.get(reverse(w), -1) for w in words)
        if ids != list(range(g.size)):
            raise CrossCheckFailed(f"reversing found {len(words)} right-divisors, oracle {g.size}")
        out["right"] = True
    return out


# --- queries ------------------------------------------------------------


def is_central(g: GarsideStructure, w, cap=None) -> bool:
    p = g.presentation
    w = tuple(w)
    return all(words_equal(p, w + (s,), (s,) + w, cap) for s in p.generators)


def complement_in_delta(g: GarsideStructure, w):
    """``(a, b)`` with w·a ≡ Δ and b·w ≡ Δ, as representative words."""
    s = g.simple_id(w)
    return g.simples[g.right_comp[s]], g.simples[g.left_comp[s]]


def complements_coincide(g: GarsideStructure):
    return bool((g.right_comp == g.left_comp).all())


@dataclass(frozen=True)
class DualityReport:
    anti_iso: LatticeIso
    self_dual_left: bool
    self_dual_right: bool
    left_right_isomorphic: bool


def _hasse(n, covers):
    h = nx.DiGraph()
    h.add_nodes_from(range(n))
    h.add_edges_from(covers)
    return h


def duality_check(g: GarsideStructure) -> DualityReport:
    f = g.left_comp  # x ↦ Δx⁻¹
    bijective = sorted(f.tolist()) == list(range(g.size))
    reversing = bool((g.leL == g.leR[np.ix_(f, f)].T).all())
    anti = LatticeIso(tuple(int(x) for x in f) if bijective and reversing else None)
    hl = _hasse(g.size, g.coversL)
    hr = _hasse(g.size, g.coversR)
    return DualityReport(
        anti,
        nx.is_isomorphic(hl, hl.reverse(copy=True)),
        nx.is_isomorphic(hr, hr.reverse(copy=True)),
        nx.is_isomorphic(hl, hr),
    )


# --- normal forms -------------------------------------------------------


def _left_weight(g: GarsideStructure, factors):
    f = list(factors)
    meet, rc, quot = g.meetL, g.right_comp, g.quotL
    changed = True
    while changed:
        changed = False
        for k in range(len(f) - 1):
            a, b = f[k], f[k + 1]
            c = meet[rc[a], b]
            if c != 0:
                f[k] = g.mul(a, c)
                f[k + 1] = quot[(c, b)]
                changed = True
    return [s for s in f if s != 0]


def _letters(g, w):
    try:
        return [g.gen_ids[x - 1] for x in w]
    except IndexError:
        raise GarsideKitError(f"word {w} has letters outside the alphabet") from None


def normal_form(g: GarsideStructure, w) -> NormalForm:
    """Left-greedy factorisation of the positive word ``w`` into simples."""
    return NormalForm(tuple(_left_weight(g, _letters(g, tuple(w)))))


def nf_word(g, nf: NormalForm):
    return g.words(nf.factors)


def is_greedy(g: GarsideStructure, nf: NormalForm):
    """Every factor is the largest simple prefix of what remains."""
    f = nf.factors
    if any(s == 0 for s in f):
        return False
    return all(g.meetL[g.right_comp[a], b] == 0 for a, b in zip(f, f[1:]))


def _ldiv(g, factors, c):
    """Factors of c⁻¹·x, where the simple c left-divides the first factor of x."""
    if c == 0:
        return list(factors)
    first = g.quotL[(c, factors[0])]
    return _left_weight(g, [first] + list(factors[1:]))


def _gcd_factors(g, fu, fv):
    out = []
    fu, fv = list(fu), list(fv)
    while fu and fv:
        c = int(g.meetL[fu[0], fv[0]])
        if c == 0:
            break
        out.append(c)
        fu, fv = _ldiv(g, fu, c), _ldiv(g, fv, c)
    return _left_weight(g, out), fu, fv


def gcd_left(g: GarsideStructure, u, v):
    """Greatest common left-divisor of two positive words, as a word."""
    d, _, _ = _gcd_factors(g, _left_weight(g, _letters(g, u)), _left_weight(g, _letters(g, v)))
    return g.words(d)


def gcd_right(g: GarsideStructure, u, v):
    """Greatest common right-divisor, computed in the opposite monoid."""
    return reverse(gcd_left(g.op, reverse(u), reverse(v)))


def group_normalize(g: GarsideStructure, sw) -> GroupElement:
    """Irreducible left fraction x⁻¹y for a signed word."""
    k = 0
    f = []
    top = g.top
    for x in sw:
        if x > 0:
            f = _left_weight(g, f + [g.gen_ids[x - 1]])
        else:
            s = g.gen_ids[-x - 1]
            # s⁻¹ = Δ⁻¹·∂'s, and P·Δ⁻¹ = Δ⁻¹·conj(P)
            k -= 1
            f = _left_weight(g, [int(g.conj[t]) for t in f] + [int(g.left_comp[s])])
        while f and f[0] == top:
            f.pop(0)
            k += 1
    if k >= 0:
        return GroupElement(NormalForm(()), NormalForm(tuple([top] * k + f)))
    den = [top] * (-k)
    _, den, num = _gcd_factors(g, den, f)
    return GroupElement(NormalForm(tuple(den)), NormalForm(tuple(num)))


def group_equal(g: GarsideStructure, w1, w2) -> bool:
    return group_normalize(g, w1) == group_normalize(g, w2)


def fraction_word(g, e: GroupElement):
    """Signed word den⁻¹·num for a normalised element."""
    den = g.words(e.denominator.factors)
    return tuple(-x for x in reversed(den)) + g.words(e.numerator.factors)


# --- emitters -------------------------------------------------------------


def lattice_json(g: GarsideStructure):
    return {
        "simples": [list(w) for w in g.simples],
        "coversL": [list(e) for e in g.coversL],
        "coversR": [list(e) for e in g.coversR],
    }


def lattice_dot(g: GarsideStructure, side="L"):
    from .kernel import format_word

    covers = g.coversL if side == "L" else g.coversR
    lines = [f'digraph "Div(Δ) ≤_{side}" {{', "  rankdir=BT;"]
    for k, w in enumerate(g.simples):
        lines.append(f'  s{k} [label="{format_word(g.presentation, w)}"];')
    for i, j in sorted(covers):
        lines.append(f"  s{i} -> s{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
