"""Reproduction checks for the main results, shared by the test-suite and ``report``.

Each check returns a :class:`CheckResult`; a check passes only when every
exact sub-check holds and it finished within its time limit.
"""

from __future__ import annotations

import json
import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from math import factorial

from .braidref import dehornoy_counterexample
from .cosets import coset_enumerate, quotient_of, symmetric_cycle_check
from .errors import GarsideKitError, Inconclusive
from .families import (
    FamilySpec,
    dihedral_structure,
    even_dihedral_negative_check,
    group_equality,
    iso_cyclic_roundtrip,
    make_family,
    mn,
    phi_n,
    pres_bn_maps,
    structure_for,
    torus_map,
    verify_hom,
)
from .garside import (
    duality_check,
    group_normalize,
    is_central,
    is_lattice,
    normal_form,
)
from .kernel import inverse, opposite, parse_word, relabel
from .reversing import atoms_lcm, cube_sweep, left_lcm, right_lcm
from .rewrite import (
    ClassIndex,
    all_words_up_to,
    cancellativity_scan,
    left_divides_bounded,
    right_divides_bounded,
    words_equal,
)

PASS, FAIL, INCONCLUSIVE, SKIPPED = "pass", "fail", "inconclusive", "skipped"


@dataclass
class CheckResult:
    key: str
    title: str
    status: str
    seconds: float
    limit: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == PASS

    def line(self):
        return f"[{self.status.upper():>12}] {self.key:<14} {self.title} ({self.seconds:.2f}s / {self.limit:g}s)"

    def to_json(self):
        return {
            "key": self.key,
            "title": self.title,
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "limit": self.limit,
            "details": {k: _plain(v) for k, v in self.details.items()},
        }


def _plain(v):
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


def _run(key, title, limit, body, *args):
    t0 = time.perf_counter()
    try:
        details = body(*args)
        if details is None:
            return CheckResult(key, title, SKIPPED, time.perf_counter() - t0, limit, {})
        ok = all(v is True for v in details.values() if isinstance(v, bool))
        status = PASS if ok else FAIL
    except Inconclusive as e:
        details, status = {"error": str(e)}, INCONCLUSIVE
    except GarsideKitError as e:
        details, status = {"error": f"{type(e).__name__}: {e}"}, FAIL
    dt = time.perf_counter() - t0
    if status == PASS and dt > limit:
        status = FAIL
        details["over time"] = True
    return CheckResult(key, title, status, dt, limit, details)


def load_fixture(name):
    return json.loads(resources.files("garside_kit.data").joinpath(name).read_text(encoding="utf-8"))


def _lattice_matches(n, fixture, expected):
    d = load_fixture(fixture)
    g = structure_for(FamilySpec("Mn_R", n))
    p = relabel(g.presentation, d["names"])
    ids = [g.index.get(() if s == "1" else parse_word(p, s, allow_inverse=False)) for s in d["nodes"]]
    covers = {(ids[i], ids[j]) for i, j in d["covers"]}
    return {
        f"{expected} simples": g.size == expected,
        "every label is a simple": None not in ids,
        "labels are distinct simples": len(set(ids)) == len(ids),
        "labels exhaust the simples": len(set(ids)) == g.size,
        "covers match": covers == set(g.coversL),
    }


# --- the twelve checks --------------------------------------------------------


def _lattice_m2():
    return _lattice_matches(2, "lattice_m2.json", 8)


def _lattice_m3():
    return _lattice_matches(3, "lattice_m3.json", 21)


def _cube(n_max=8):
    out = {}
    for n in range(2, n_max + 1):
        out[f"R' sharp n={n}"] = all(r.passed for r in cube_sweep(mn(n, "R'")))
        out[f"(R'')^op sharp n={n}"] = all(r.passed for r in cube_sweep(opposite(mn(n, "R''"))))
    for n in range(3, min(n_max, 6) + 1):
        bad = [r for r in cube_sweep(mn(n)) if not r.passed]
        out[f"R fails n={n}"] = bool(bad)
        if bad:
            out[f"R witness n={n}"] = [list(x) for x in bad[0].triple]
    return out


def _lcm(n_max=8):
    out = {}
    for n in range(2, n_max + 1):
        p, rp, rs = mn(n), mn(n, "R'"), mn(n, "R''")
        ok_r = ok_l = True
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                r = right_lcm(rp, (i,), (j,))
                ok_r &= r is not None and words_equal(p, r[0], (j,) + (n,) * i)
                l = left_lcm(rs, (i,), (j,))
                ok_l &= l is not None and words_equal(p, l[0], (1, n) * (n - j + 1) + (i,))
        out[f"right lcm n={n}"] = ok_r
        out[f"left lcm n={n}"] = ok_l
    return out


def _garside_axioms(n_max=4):
    out = {}
    for n in range(2, n_max + 1):
        g = structure_for(FamilySpec("Mn_R", n))
        p, delta = g.presentation, g.delta
        out[f"built n={n}"] = True
        out[f"simples n={n}"] = g.size
        out[f"reversing agrees n={n}"] = g.cross_check == {"left": True, "right": True}
        out[f"Div_L(Δ) = Div_R(Δ) n={n}"] = all(
            left_divides_bounded(p, w, delta)[0] and right_divides_bounded(p, w, delta)[0]
            for w in g.simples
        )
        out[f"≤_L lattice n={n}"] = is_lattice(g.leL, g.meetL, g.joinL)
        out[f"≤_R lattice n={n}"] = is_lattice(g.leR, g.meetR, g.joinR)
        out[f"Δ = (ρ1ρn)^n n={n}"] = words_equal(p, delta, (1, n) * n)
        out[f"Δ = (ρnρ1)^n n={n}"] = words_equal(p, delta, (n, 1) * n)
        out[f"Δ central n={n}"] = is_central(g, delta)
        rl = atoms_lcm(mn(n, "R'"), "right")
        ll = atoms_lcm(mn(n, "R''"), "left")
        out[f"atoms lcm = ρn^n n={n}"] = (
            rl is not None and ll is not None
            and words_equal(p, rl, (n,) * n) and words_equal(p, ll, (n,) * n)
        )
        out[f"atoms lcm ≠ Δ n={n}"] = not words_equal(p, (n,) * n, delta)
    return out


def _duality():
    d3 = duality_check(structure_for(FamilySpec("Mn_R", 3)))
    d2 = duality_check(structure_for(FamilySpec("Mn_R", 2)))
    return {
        "M_3 x ↦ Δx⁻¹ order-reversing bijection": d3.anti_iso.mapping is not None,
        "M_3 not self-dual": not d3.self_dual_left,
        "M_2 x ↦ Δx⁻¹ order-reversing bijection": d2.anti_iso.mapping is not None,
        "M_2 self-dual": d2.self_dual_left,
    }


def _homs(n_max=8):
    out = {}
    for n in range(1, n_max + 1):
        out[f"φ_{n}"] = verify_hom(phi_n(n), group_equality(FamilySpec("BraidArtin", n))).ok
        out[f"H_{n} ↔ B_{n + 1}"] = pres_bn_maps(n).passed
    for n in range(1, min(n_max, 6) + 1):
        out[f"torus n={n}"] = verify_hom(torus_map(n), group_equality(FamilySpec("TorusXY", n, n + 1))).ok
    for n in range(2, min(n_max, 5) + 1):
        out[f"cyclic round-trip n={n}"] = iso_cyclic_roundtrip(n).passed
    return out


def _dehornoy():
    return {f"n={n}": dehornoy_counterexample(n).passed for n in (3, 4)}


def _cosets(n_max=4):
    out = {}
    for n in range(1, n_max + 1):
        gp = quotient_of(make_family(FamilySpec("Hn", n)), [(1, 1)])
        t = coset_enumerate(gp)
        out[f"H_{n} + ρ1² order {factorial(n + 1)}"] = t.order == factorial(n + 1)
        out[f"H_{n} cycles r_i ↦ (1..i+1)"] = symmetric_cycle_check(gp, n)
    out["M_3 + ρ1² order 48"] = coset_enumerate(quotient_of(mn(3), [(1, 1)])).order == 48
    out["M_2 + ρ1² order 6"] = coset_enumerate(quotient_of(mn(2), [(1, 1)])).order == 6
    return out


def _dihedral():
    out = {}
    for m in (3, 5, 7, 9):
        g = dihedral_structure(m)
        out[f"M({m}) simples"] = g.size
        out[f"M({m}) built"] = True
    g3, g2 = dihedral_structure(3), structure_for(FamilySpec("Mn_R", 2))
    out["M(3) = M_2 presentation"] = g3.presentation == g2.presentation
    out["M(3) = M_2 lattice"] = g3.simples == g2.simples and g3.coversL == g2.coversL
    out["even case: ρ1 ∤ ρ2^k, k ≤ 8"] = even_dihedral_negative_check().passed
    return out


def word_problem_agreement(g, max_lambda):
    """Normal forms and oracle classes induce the same partition of short words."""
    p = g.presentation
    index = ClassIndex(p, max_lambda)
    nfs = {}
    by_class = defaultdict(set)
    for w in all_words_up_to(p, max_lambda):
        nfs[w] = normal_form(g, w)
        by_class[index.cid[w]].add(nfs[w])
    return all(len(s) == 1 for s in by_class.values()) and len(set(nfs.values())) == len(by_class)


def random_signed_word(rank, length, rng):
    return tuple(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length))


def _word_problem(seed=0, samples=500, max_lambda=8):
    out = {}
    for n in (2, 3):
        g = structure_for(FamilySpec("Mn_R", n))
        out[f"M_{n} nf = oracle, λ ≤ {max_lambda}"] = word_problem_agreement(g, max_lambda)
        rng = random.Random(seed)
        ok = True
        for _ in range(samples):
            w = random_signed_word(n, rng.randint(0, 24), rng)
            ok &= group_normalize(g, w + inverse(w)).is_identity
        out[f"M_{n} w·w⁻¹ = 1 ({samples} words)"] = ok
    return out


def _scan(max_lambda=10):
    out = {}
    for n in (3, 4):
        r = cancellativity_scan(make_family(FamilySpec("Hn", n)), max_lambda)
        out[f"H_{n} no counterexample"] = r is None
        if r is not None:
            out[f"H_{n} counterexample"] = list(r)
    return out


CHECKS = [
    ("lattice-m2", "M_2 simple lattice (8 simples, covers fixture)", 1, _lattice_m2),
    ("lattice-m3", "M_3 simple lattice (21 simples, covers fixture)", 10, _lattice_m3),
    ("cube", "sharp cube condition on R', (R'')^op; failure on R", 30, _cube),
    ("lcm", "right and left lcm of generator pairs", 60, _lcm),
    ("garside", "Garside axioms for (M_n, ρ_n^(n+1)), n = 2..4", 120, _garside_axioms),
    ("duality", "x ↦ Δx⁻¹ and self-duality", 5, _duality),
    ("homs", "homomorphisms and isomorphisms", 60, _homs),
    ("sigma-lcm", "Σ_n lacks lcms, n = 3, 4", 30, _dehornoy),
    ("cosets", "finite quotients by ρ1² = 1", 10, _cosets),
    ("dihedral", "dihedral-type monoids M(m)", 30, _dihedral),
    ("word-problem", "normal forms vs oracle; group normalisation", 120, _word_problem),
    ("scan", "cancellativity scan of H_3, H_4 up to λ = 10", 600, _scan),
]


def run_check(key, **kwargs):
    for k, title, limit, body in CHECKS:
        if k == key:
            return _run(k, title, limit, lambda: body(**kwargs))
    raise KeyError(key)


def run_all(seed=0):
    out = []
    for key, title, limit, body in CHECKS:
        kwargs = {"seed": seed} if key == "word-problem" else {}
        out.append(_run(key, title, limit, lambda b=body, kw=kwargs: b(**kw)))
    return out


# --- report -------------------------------------------------------------------


def simple_counts(n_max):
    """Sizes of Div(ρ_n^(n+1)) in M_n, computed (not asserted) for n ≤ n_max."""
    return {n: structure_for(FamilySpec("Mn_R", n)).size for n in range(1, n_max + 1)}


def report(n_max=3, seed=0):
    """Run every check with parameters clipped to ``n_max``."""
    results = []
    plan = [
        ("lattice-m2", {}, n_max >= 2),
        ("lattice-m3", {}, n_max >= 3),
        ("cube", {"n_max": min(n_max, 8)}, n_max >= 2),
        ("lcm", {"n_max": min(n_max, 8)}, n_max >= 2),
        ("garside", {"n_max": min(n_max, 4)}, n_max >= 2),
        ("duality", {}, n_max >= 3),
        ("homs", {"n_max": min(n_max, 8)}, True),
        ("sigma-lcm", {}, n_max >= 4),
        ("cosets", {"n_max": min(n_max, 4)}, True),
        ("dihedral", {}, True),
        ("word-problem", {"seed": seed}, n_max >= 3),
        ("scan", {}, n_max >= 4),
    ]
    for key, kwargs, enabled in plan:
        if enabled:
            results.append(run_check(key, **kwargs))
        else:
            title, limit = next((t, lim) for k, t, lim, _ in CHECKS if k == key)
            results.append(CheckResult(key, title, SKIPPED, 0.0, limit, {"reason": f"needs larger n than {n_max}"}))
    return {
        "n_max": n_max,
        "seed": seed,
        "simple_counts": {str(k): v for k, v in simple_counts(n_max).items()},
        "checks": [r.to_json() for r in results],
    }, results


def report_markdown(doc):
    lines = [f"# Reproduction report (n ≤ {doc['n_max']}, seed {doc['seed']})", ""]
    lines.append("| check | status | time (s) | limit (s) |")
    lines.append("|---|---|---|---|")
    for c in doc["checks"]:
        lines.append(f"| {c['key']}: {c['title']} | {c['status']} | {c['seconds']:.2f} | {c['limit']:g} |")
    lines += ["", "## Simple counts of (M_n, ρ_n^(n+1))", ""]
    for n, k in doc["simple_counts"].items():
        lines.append(f"- n = {n}: {k}")
    return "\n".join(lines) + "\n"
