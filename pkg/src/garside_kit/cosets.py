"""Todd–Coxeter enumeration of cosets of the trivial subgroup (HLT strategy)."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import GarsideKitError
from .kernel import Presentation, free_reduce, inverse

DEFAULT_MAX_COSETS = 10**5


@dataclass(frozen=True)
class GroupPresentation:
    names: tuple
    relators: tuple  # freely reduced signed words

    @classmethod
    def make(cls, names, relators):
        rels = []
        for r in relators:
            r = free_reduce(tuple(r))
            if any(x == 0 or abs(x) > len(names) for x in r):
                raise GarsideKitError(f"relator {r} uses letters outside the alphabet")
            if r:
                rels.append(r)
        return cls(tuple(names), tuple(rels))

    @property
    def rank(self):
        return len(self.names)


@dataclass(frozen=True)
class Completed:
    order: int


@dataclass(frozen=True)
class Overflow:
    limit: int


@dataclass
class CosetTable:
    rows: list  # rows[c][col]; column 2k is generator k+1, 2k+1 its inverse
    status: object

    @property
    def completed(self):
        return isinstance(self.status, Completed)

    @property
    def order(self):
        return self.status.order if self.completed else None

    def action(self, x):
        """Image of every coset under the signed letter ``x`` (0-based cosets)."""
        col = _col(x)
        return [row[col] for row in self.rows]

    def generator_permutations(self):
        return [tuple(self.action(k)) for k in range(1, len(self.rows[0]) // 2 + 1)]


def _col(x):
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class _Enumerator:
    def __init__(self, gp: GroupPresentation, max_cosets):
        self.ncols = 2 * gp.rank
        self.rels = [[_col(x) for x in r] for r in gp.relators]
        self.max = max_cosets
        self.table = [[None] * self.ncols]
        self.parent = [0]

    def live(self, c):
        return self.parent[c] == c

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, x):
        if len(self.table) >= self.max:
            raise _Overflow
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                self.table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self.merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x ^ 1] is not None:
                    self.merge(e1, self.table[f1][x ^ 1], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x ^ 1] = e1

    def scan_and_fill(self, c, w):
        t = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][w[j] ^ 1] is not None:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def run(self):
        c = 0
        while c < len(self.table):
            for w in self.rels:
                if not self.live(c):
                    break
                self.scan_and_fill(c, w)
            if self.live(c):
                for x in range(self.ncols):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1

    def compact(self):
        alive = [c for c in range(len(self.table)) if self.live(c)]
        new = {c: k for k, c in enumerate(alive)}
        return [[new[self.rep(y)] for y in self.table[c]] for c in alive]


class _Overflow(Exception):
    pass


def coset_enumerate(gp: GroupPresentation, max_cosets=DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerate cosets of the trivial subgroup; Overflow when ``max_cosets`` is hit."""
    if max_cosets < 1:
        raise GarsideKitError("max_cosets must be positive")
    if gp.rank == 0:
        return CosetTable([[]], Completed(1))
    e = _Enumerator(gp, max_cosets)
    try:
        e.run()
    except _Overflow:
        return CosetTable([], Overflow(max_cosets))
    rows = e.compact()
    table = CosetTable(rows, Completed(len(rows)))
    if not relators_hold(gp, table):
        raise GarsideKitError("coset table fails a relator; enumeration is broken")
    return table


def relators_hold(gp: GroupPresentation, table: CosetTable):
    """Every relator fixes every coset under the action read off the table."""
    acts = {}
    for x in range(1, gp.rank + 1):
        acts[x] = table.action(x)
        acts[-x] = table.action(-x)
    for c in range(len(table.rows)):
        for r in gp.relators:
            d = c
            for x in r:
                d = acts[x][d]
            if d != c:
                return False
    return True


def quotient_of(p: Presentation, extra=()) -> GroupPresentation:
    """Group presentation with relators lhs·rhs⁻¹ for each relation, plus ``extra``."""
    rels = [tuple(r.lhs) + inverse(r.rhs) for r in p.relations]
    rels.extend(tuple(r) for r in extra)
    names = tuple(s.replace("ρ", "r") for s in p.names)
    return GroupPresentation.make(names, rels)


# --- permutation images --------------------------------------------------


def cycle_perm(N, k):
    """The cycle (1, 2, ..., k) on N points, in one-line notation."""
    return tuple(list(range(2, k + 1)) + [1] + list(range(k + 1, N + 1)))


def _mul(a, b):
    """Composition as functions: (a·b)(k) = a(b(k))."""
    return tuple(a[x - 1] for x in b)


def _inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a, 1):
        out[x - 1] = i
    return tuple(out)


def evaluate(perms, w):
    N = len(perms[0])
    out = tuple(range(1, N + 1))
    for x in w:
        out = _mul(out, perms[x - 1] if x > 0 else _inv(perms[-x - 1]))
    return out


def group_order(perms):
    """Order of the permutation group generated by ``perms`` (orbit of the identity)."""
    N = len(perms[0])
    e = tuple(range(1, N + 1))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in perms:
                b = _mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen)


def symmetric_cycle_check(gp: GroupPresentation, n):
    """r_i ↦ (1 2 ⋯ i+1) satisfies every relator and generates 𝔖_{n+1}.

    Together with a coset count of (n+1)! this shows the assignment is an
    isomorphism from the presented group onto 𝔖_{n+1}.
    """
    N = n + 1
    perms = [cycle_perm(N, i + 1) for i in range(1, gp.rank + 1)]
    e = tuple(range(1, N + 1))
    holds = all(evaluate(perms, r) == e for r in gp.relators)
    return holds and group_order(perms) == factorial(N)

