"""Presentations of the monoid families and the homomorphisms between them."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .errors import BadParameters, GarsideKitError
from .kernel import Presentation, free_reduce, inverse, make_presentation

KINDS = (
    "Mn_R",
    "Mn_Rprime",
    "Mn_Rsecond",
    "Hn",
    "DihedralM",
    "TorusXY",
    "TorusCyclic",
    "BraidArtin",
)

# CLI spelling -> kind
CLI_KINDS = {
    "mn": "Mn_R",
    "mnp": "Mn_Rprime",
    "mns": "Mn_Rsecond",
    "hn": "Hn",
    "dihedral": "DihedralM",
    "torus-xy": "TorusXY",
    "torus-cyclic": "TorusCyclic",
    "braid": "BraidArtin",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int | None = None
    m: int | None = None

    def __post_init__(self):
        k, n, m = self.kind, self.n, self.m
        if k not in KINDS:
            raise BadParameters(f"unknown family kind {k!r}")
        if k.startswith("Mn") or k in ("Hn", "BraidArtin"):
            if n is None or n < 1:
                raise BadParameters(f"{k} needs n >= 1")
        elif k == "DihedralM":
            if m is None or m < 3 or m % 2 == 0:
                raise BadParameters("DihedralM needs odd m >= 3")
        elif k in ("TorusXY", "TorusCyclic"):
            if n is None or m is None or n < 1 or m < 1:
                raise BadParameters(f"{k} needs n, m >= 1")
            if gcd(n, m) != 1:
                raise BadParameters(f"{k} needs gcd(n, m) = 1")

    def label(self):
        if self.kind == "DihedralM":
            return f"M({self.m})"
        if self.kind in ("TorusXY", "TorusCyclic"):
            return f"{self.kind}({self.n},{self.m})"
        return f"{self.kind}({self.n})"


def rho_names(n, letter="ρ"):
    return [f"{letter}{i}" for i in range(1, n + 1)]


def _mn_r(n):
    return [((1, n, i), (i + 1, n)) for i in range(1, n)]


def _mn_rprime(n):
    return [
        ((i,) + (n,) * i + (j - i,), (j,) + (n,) * i)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


def _mn_rsecond(n):
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            lhs = (1, n) * (n - j + 1) + (i,)
            rhs = (n - j + i + 1,) + (1, n) * (n - j) + (j,)
            rels.append((lhs, rhs))
    return rels


def _hn(n):
    return [
        ((1, j, i), (i + 1, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    ]


def _dihedral(m):
    h = (m - 1) // 2
    return [((1,) + (2,) * h + (1,), (2,) * (h + 1))]


def cyclic_word(n, m, start):
    """``x_start x_{start+1} ...`` with m factors, indices taken mod n."""
    return tuple((start - 1 + k) % n + 1 for k in range(m))


def braid_relations(n):
    rels = []
    for i in range(1, n):
        rels.append(((i, i + 1, i), (i + 1, i, i + 1)))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            rels.append(((i, j), (j, i)))
    return rels


def make_family(spec: FamilySpec) -> Presentation:
    k, n, m = spec.kind, spec.n, spec.m
    if k == "Mn_R":
        return make_presentation(rho_names(n), _mn_r(n), lam=range(1, n + 1))
    if k == "Mn_Rprime":
        return make_presentation(rho_names(n), _mn_rprime(n), lam=range(1, n + 1))
    if k == "Mn_Rsecond":
        return make_presentation(rho_names(n), _mn_rsecond(n), lam=range(1, n + 1))
    if k == "Hn":
        return make_presentation(rho_names(n), _hn(n), lam=range(1, n + 1))
    if k == "DihedralM":
        return make_presentation(rho_names(2), _dihedral(m), lam=(1, 2))
    if k == "TorusXY":
        g = gcd(n, m)
        return make_presentation(["x", "y"], [((1,) * n, (2,) * m)], lam=(m // g, n // g))
    if k == "TorusCyclic":
        first = cyclic_word(n, m, 1)
        rels = [(first, cyclic_word(n, m, s)) for s in range(2, n + 1)]
        return make_presentation([f"x{i}" for i in range(1, n + 1)], rels)
    if k == "BraidArtin":
        return make_presentation(
            [f"σ{i}" for i in range(1, n + 1)], braid_relations(n), lam=(1,) * n
        )
    raise BadParameters(k)


def mn(n, variant="R"):
    kind = {"R": "Mn_R", "R'": "Mn_Rprime", "R''": "Mn_Rsecond"}[variant]
    return make_family(FamilySpec(kind, n))


def half_twist(n):
    """Reduced word for the longest permutation on n+1 strands."""
    w = []
    for k in range(1, n + 1):
        w.extend(range(k, 0, -1))
    return tuple(w)


def default_delta(spec: FamilySpec):
    """The Garside element each family comes with (None for H_n)."""
    k, n, m = spec.kind, spec.n, spec.m
    if k.startswith("Mn"):
        return (n,) * (n + 1)
    if k == "DihedralM":
        return (2,) * m
    if k == "TorusXY":
        return (1,) * n
    if k == "TorusCyclic":
        return cyclic_word(n, m, 1)
    if k == "BraidArtin":
        return half_twist(n)
    return None


# --- homomorphisms ---------------------------------------------------------


@dataclass
class Homomorphism:
    """Generator images (signed words in the target) for a map source → target."""

    source: Presentation
    target: Presentation
    images: dict
    name: str = ""
    verified: bool = field(default=False, compare=False)

    def apply(self, sw):
        out = []
        for x in sw:
            img = self.images[abs(x)]
            out.extend(img if x > 0 else inverse(img))
        return free_reduce(out)


@dataclass(frozen=True)
class HomResult:
    ok: bool
    relation: object = None
    checked: int = 0

    def __bool__(self):
        return self.ok


def verify_hom(h: Homomorphism, equal: Callable) -> HomResult:
    """Check every defining relation of the source maps to an identity in the target.

    ``equal(w1, w2)`` must decide equality of signed words in the target group.
    """
    for k, r in enumerate(h.source.relations):
        if not equal(h.apply(r.lhs), h.apply(r.rhs)):
            return HomResult(False, r, k)
    h.verified = True
    return HomResult(True, None, len(h.source.relations))


def phi_n(n):
    """ρ_i ↦ σ1⋯σi, from M_n to the braid group on n+1 strands."""
    return Homomorphism(
        mn(n),
        make_family(FamilySpec("BraidArtin", n)),
        {i: tuple(range(1, i + 1)) for i in range(1, n + 1)},
        name=f"phi_{n}",
    )


def torus_map(n):
    """ρ_i ↦ x^i y^-i into ⟨x, y | x^n = y^(n+1)⟩."""
    return Homomorphism(
        mn(n),
        make_family(FamilySpec("TorusXY", n, n + 1)),
        {i: (1,) * i + (-2,) * i for i in range(1, n + 1)},
        name=f"torus_{n}",
    )


def cyclic_maps(n):
    """The pair (φ, ψ) between M_n and the cyclic presentation of G(n, n+1)."""
    src = mn(n)
    cyc = make_family(FamilySpec("TorusCyclic", n, n + 1))
    # ρ1 ↦ x1, ρ_k ↦ x_{n-k+2} ⋯ x_n x_1
    phi = {1: (1,)}
    for k in range(2, n + 1):
        phi[k] = tuple(range(n - k + 2, n + 1)) + (1,)
    # x1 ↦ ρ1, x_{n-k+2} ↦ ρ_k ρ_{k-1}^-1
    psi = {1: (1,)}
    for k in range(2, n + 1):
        psi[n - k + 2] = (k, -(k - 1))
    return (
        Homomorphism(src, cyc, phi, name=f"phi_cyc_{n}"),
        Homomorphism(cyc, src, psi, name=f"psi_cyc_{n}"),
    )


def pres_bn_f(n):
    """ρ_i ↦ σ1⋯σi, from H_n to the braid group on n+1 strands."""
    return Homomorphism(
        make_family(FamilySpec("Hn", n)),
        make_family(FamilySpec("BraidArtin", n)),
        {i: tuple(range(1, i + 1)) for i in range(1, n + 1)},
        name=f"f_{n}",
    )


def pres_bn_g(n):
    """σ_i ↦ ρ_{i-1}^-1 ρ_i with ρ_0 the empty word."""
    images = {1: (1,)}
    for i in range(2, n + 1):
        images[i] = (-(i - 1), i)
    return Homomorphism(
        make_family(FamilySpec("BraidArtin", n)),
        make_family(FamilySpec("Hn", n)),
        images,
        name=f"g_{n}",
    )


def identity_hom(p: Presentation):
    return Homomorphism(p, p, {g: (g,) for g in p.generators}, name="id")


# --- structures and verifications ------------------------------------------


def structure_for(spec: FamilySpec, cap=None):
    """Garside structure of a family with its default Δ.

    For M_n the reversing cross-check runs on ⟨S,R′⟩ (left side) and
    ⟨S,R″⟩ (right side), the presentations on which the cube condition holds.
    """
    from .garside import build_structure

    delta = default_delta(spec)
    if delta is None:
        raise BadParameters(f"{spec.label()} has no known Garside element")
    p = make_family(spec)
    left = right = None
    if spec.kind.startswith("Mn"):
        left, right = mn(spec.n, "R'"), mn(spec.n, "R''")
    return build_structure(p, delta, left_variant=left, right_variant=right, cap=cap)


def group_equality(spec: FamilySpec):
    """A decision procedure for equality of signed words in the group of ``spec``."""
    if spec.kind == "BraidArtin":
        from .braidref import braid_equal

        return lambda u, v: braid_equal(spec.n, u, v)
    from .garside import group_equal

    g = structure_for(spec)
    return lambda u, v: group_equal(g, u, v)


def _compose(first: Homomorphism, second: Homomorphism, x):
    return second.apply(first.apply((x,)))


@dataclass(frozen=True)
class Report:
    status: str  # "pass", "fail" or "not applicable"
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def __bool__(self):
        return self.passed


def _report(checks):
    return Report("pass" if all(checks.values()) else "fail", checks)


def iso_cyclic_roundtrip(n) -> Report:
    """φ and ψ are mutually inverse homomorphisms between G(M_n) and the cyclic presentation."""
    if n < 2:
        raise BadParameters("the cyclic round-trip needs n >= 2")
    phi, psi = cyclic_maps(n)
    eq_m = group_equality(FamilySpec("Mn_R", n))
    eq_c = group_equality(FamilySpec("TorusCyclic", n, n + 1))
    checks = {
        "phi hom": verify_hom(phi, eq_c).ok,
        "psi hom": verify_hom(psi, eq_m).ok,
        "psi.phi = id": all(eq_m(_compose(phi, psi, i), (i,)) for i in phi.source.generators),
        "phi.psi = id": all(eq_c(_compose(psi, phi, i), (i,)) for i in psi.source.generators),
    }
    return _report(checks)


def pres_bn_maps(n) -> Report:
    """f: H_n → B_{n+1} and g: B_{n+1} → H_n, checked through the braid oracle."""
    from .braidref import braid_equal

    f, g = pres_bn_f(n), pres_bn_g(n)
    eq_b = lambda u, v: braid_equal(n, u, v)  # noqa: E731
    fg = Homomorphism(g.source, f.target, {i: _compose(g, f, i) for i in g.source.generators})
    checks = {
        "f hom": verify_hom(f, eq_b).ok,
        "g hom via f": verify_hom(fg, eq_b).ok,
        "f.g = id": all(eq_b(_compose(g, f, i), (i,)) for i in g.source.generators),
        "g.f = id": all(_compose(f, g, i) == (i,) for i in f.source.generators),
    }
    if checks["g hom via f"]:
        g.verified = True
    return _report(checks)


def dihedral_structure(m):
    """Garside structure of M(m) with Δ = ρ2^m, after checking the defining identities of Δ."""
    from .garside import build_structure
    from .rewrite import words_equal

    spec = FamilySpec("DihedralM", m=m)
    p = make_family(spec)
    h = (m - 1) // 2
    delta = (2,) * m
    a1 = (2,) * h + (1,) + (2,) * h
    facts = {
        "(ρ1ρ2^h)^2 = Δ": words_equal(p, ((1,) + (2,) * h) * 2, delta),
        "ρ1·a1 = Δ": words_equal(p, (1,) + a1, delta),
        "a1·ρ1 = Δ": words_equal(p, a1 + (1,), delta),
    }
    if not all(facts.values()):
        bad = [k for k, v in facts.items() if not v]
        raise GarsideKitError(f"M({m}): identities fail: {bad}")
    g = build_structure(p, delta)
    g.cross_check["identities"] = True
    return g


def even_dihedral_negative_check(kmax=8, cap=None) -> Report:
    """In ⟨ρ1, ρ2 | ρ1ρ2² = ρ2²ρ1⟩ no power ρ2^k (k ≤ kmax) is left-divisible by ρ1."""
    from .rewrite import left_divides_bounded, words_equal

    p = make_presentation(["ρ1", "ρ2"], [((1, 2, 2), (2, 2, 1))], lam=(1, 1))
    checks = {"ρ1ρ2² = ρ2²ρ1": words_equal(p, (1, 2, 2), (2, 2, 1), cap)}
    for k in range(1, kmax + 1):
        checks[f"ρ1 ∤ ρ2^{k}"] = not left_divides_bounded(p, (1,), (2,) * k, cap)[0]
    return _report(checks)


def kernel_search(n, max_len=6):
    """Look for a signed ρ-word trivial in B_{n+1} but not in G(M_n).

    Freely reduced words up to ``max_len`` letters are tried in ShortLex
    order.  Returns the first such word or None; nothing is claimed when
    the search comes back empty.
    """
    from itertools import product

    from .braidref import braid_is_identity
    from .garside import group_normalize

    g = structure_for(FamilySpec("Mn_R", n))
    phi = phi_n(n)
    letters = [x for i in range(1, n + 1) for x in (i, -i)]
    for length in range(1, max_len + 1):
        for w in product(letters, repeat=length):
            if free_reduce(w) != w:
                continue
            if braid_is_identity(n, phi.apply(w)) and not group_normalize(g, w).is_identity:
                return w
    return None
