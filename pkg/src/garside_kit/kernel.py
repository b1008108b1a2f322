"""Words, relations and monoid presentations.

A word is a tuple of 1-based generator indices; the empty tuple is the
identity.  A *signed* word (used for group elements) is a tuple of nonzero
ints where ``-i`` stands for the inverse of generator ``i``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import LinearConstraint, milp

from .errors import DuplicateGenerator, MalformedRelation, NoLengthFunction

Word = tuple


def shortlex_key(w):
    return (len(w), w)


def reverse(w):
    return tuple(reversed(w))


def power(w, k):
    return tuple(w) * k


def signed(w):
    """View a positive word as a signed word."""
    return tuple(w)


def inverse(sw):
    return tuple(-x for x in reversed(sw))


def free_reduce(sw):
    out = []
    for x in sw:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Generator:
    index: int
    name: str


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    @classmethod
    def oriented(cls, a, b):
        """Store with the lexicographically smaller first letter on the left."""
        a, b = tuple(a), tuple(b)
        if (a[:1], a) > (b[:1], b):
            a, b = b, a
        return cls(a, b)

    def reversed(self):
        return Relation.oriented(reverse(self.lhs), reverse(self.rhs))


@dataclass(frozen=True)
class Presentation:
    names: tuple
    relations: tuple
    lam: tuple | None = None

    @property
    def rank(self):
        return len(self.names)

    @property
    def alphabet(self):
        return [Generator(i + 1, s) for i, s in enumerate(self.names)]

    @property
    def generators(self):
        return range(1, self.rank + 1)

    @property
    def homogeneous(self):
        return self.lam is not None

    def weight(self, g):
        if self.lam is None:
            raise NoLengthFunction("presentation has no homogeneous length function")
        return self.lam[g - 1]

    @cached_property
    def rules(self):
        """Rewrite rules in both orientations, bucketed by first letter."""
        table = {}
        for r in self.relations:
            for a, b in ((r.lhs, r.rhs), (r.rhs, r.lhs)):
                table.setdefault(a[0], []).append((a, b))
        return table

    def __repr__(self):
        rels = ", ".join(
            f"{format_word(self, r.lhs)}={format_word(self, r.rhs)}" for r in self.relations
        )
        return f"Presentation<{', '.join(self.names)} | {rels}>"


def _check_word(w, rank, where):
    w = tuple(w)
    for x in w:
        if not isinstance(x, (int, np.integer)) or not 1 <= x <= rank:
            raise MalformedRelation(f"{where}: letter {x!r} is not a generator index in 1..{rank}")
    return tuple(int(x) for x in w)


def infer_lambda(rank, relations):
    """Minimal positive integer weights making every relation homogeneous, or None."""
    if not relations:
        return (1,) * rank
    A = np.zeros((len(relations), rank))
    for k, r in enumerate(relations):
        for x in r.lhs:
            A[k, x - 1] += 1
        for x in r.rhs:
            A[k, x - 1] -= 1
    res = milp(
        c=np.ones(rank),
        constraints=LinearConstraint(A, 0, 0),
        integrality=np.ones(rank),
        bounds=(1, np.inf),
    )
    if not res.success:
        return None
    lam = [int(round(v)) for v in res.x]
    g = 0
    for v in lam:
        g = gcd(g, v)
    lam = tuple(v // g for v in lam)
    if not _homogeneous(lam, relations):
        return None
    return lam


def _homogeneous(lam, relations):
    return all(
        sum(lam[x - 1] for x in r.lhs) == sum(lam[x - 1] for x in r.rhs) for r in relations
    )


def make_presentation(alphabet: Sequence, relations: Iterable, lam=None) -> Presentation:
    """Validate and build a presentation.

    ``alphabet`` holds display names (or Generator objects); ``relations``
    holds (lhs, rhs) pairs of index sequences.  When ``lam`` is omitted the
    minimal homogeneous weighting is inferred (None if there is none).
    """
    names = tuple(a.name if isinstance(a, Generator) else str(a) for a in alphabet)
    if not names:
        raise MalformedRelation("alphabet must be nonempty")
    if len(set(names)) != len(names):
        dup = sorted({s for s in names if names.count(s) > 1})
        raise DuplicateGenerator(f"duplicate generator names: {dup}")
    rank = len(names)
    rels = []
    for k, rel in enumerate(relations):
        if isinstance(rel, Relation):
            a, b = rel.lhs, rel.rhs
        else:
            a, b = rel
        a = _check_word(a, rank, f"relation {k} lhs")
        b = _check_word(b, rank, f"relation {k} rhs")
        if not a or not b:
            raise MalformedRelation(f"relation {k} has an empty side")
        rels.append(Relation.oriented(a, b))
    rels = tuple(rels)
    if lam is None:
        lam = infer_lambda(rank, rels)
    else:
        lam = tuple(int(v) for v in lam)
        if len(lam) != rank or min(lam) < 1:
            raise MalformedRelation("lambda must give a positive weight to every generator")
        if not _homogeneous(lam, rels):
            raise MalformedRelation("supplied lambda does not make the relations homogeneous")
    return Presentation(names, rels, lam)


def lambda_length(p: Presentation, w) -> int:
    if p.lam is None:
        raise NoLengthFunction("presentation has no homogeneous length function")
    lam = p.lam
    return sum(lam[x - 1] for x in w)


def is_right_complemented(p: Presentation):
    """Return ``(True, None)`` or ``(False, witness)``.

    The witness is a tuple of one or two offending relations.
    """
    seen = {}
    for r in p.relations:
        s, t = r.lhs[0], r.rhs[0]
        if s == t:
            return False, (r,)
        key = frozenset((s, t))
        if key in seen:
            return False, (seen[key], r)
        seen[key] = r
    return True, None


def opposite(p: Presentation) -> Presentation:
    return Presentation(p.names, tuple(r.reversed() for r in p.relations), p.lam)


def relabel(p: Presentation, names) -> Presentation:
    names = tuple(names)
    if len(names) != p.rank:
        raise MalformedRelation("wrong number of names")
    return Presentation(names, p.relations, p.lam)


# --- I/O -----------------------------------------------------------------

def to_json(p: Presentation) -> dict:
    return {
        "generators": [
            {"name": s, "lambda": (p.lam[i] if p.lam is not None else None)}
            for i, s in enumerate(p.names)
        ],
        "relations": [{"lhs": list(r.lhs), "rhs": list(r.rhs)} for r in p.relations],
    }


def from_json(doc) -> Presentation:
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    try:
        gens = doc["generators"]
        names = [g["name"] for g in gens]
        lams = [g.get("lambda") for g in gens]
        rels = [(r["lhs"], r["rhs"]) for r in doc["relations"]]
    except (KeyError, TypeError) as e:
        raise MalformedRelation(f"bad presentation document: {e}") from None
    lam = None if any(v is None for v in lams) else lams
    return make_presentation(names, rels, lam=lam)


def format_word(p, w, sep=""):
    if not w:
        return "1"
    parts = []
    for x in w:
        name = p.names[abs(x) - 1] if p is not None else str(abs(x))
        parts.append(name if x > 0 else name + "⁻¹")
    return sep.join(parts)


def parse_word(p: Presentation | None, text: str, allow_inverse=True):
    """Parse ``"1 3 -2"``, ``"ρ1 ρ3^2"`` or ``"r1^-1 r2"`` into a signed word.

    Tokens are whitespace separated; a token is an index, a display name, or
    ``r<k>``/``x<k>``/``s<k>`` shorthand, optionally followed by ``^e``.
    The empty word is written ``""``, ``e``, ``ε`` or ``()``; a lone ``1``
    is the first generator.
    """
    text = text.strip()
    if text in ("", "ε", "e", "()"):
        return ()
    out = []
    for tok in text.split():
        m = re.fullmatch(r"(-?)(.+?)(?:\^(-?\d+))?", tok)
        if m is None:
            raise MalformedRelation(f"cannot parse token {tok!r}")
        neg, body, exp = m.groups()
        g = _lookup(p, body)
        e = int(exp) if exp is not None else 1
        if neg:
            e = -e
        if e < 0 and not allow_inverse:
            raise MalformedRelation(f"negative exponent not allowed in {tok!r}")
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


def _lookup(p, body):
    if body.isdigit():
        g = int(body)
    elif p is not None and body in p.names:
        return p.names.index(body) + 1
    else:
        m = re.fullmatch(r"[A-Za-zρτσ]+_?(\d+)", body)
        if m is None:
            raise MalformedRelation(f"unknown generator {body!r}")
        g = int(m.group(1))
    if p is not None and not 1 <= g <= p.rank:
        raise MalformedRelation(f"generator index {g} out of range 1..{p.rank}")
    return g
