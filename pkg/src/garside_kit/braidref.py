"""Classical Garside structure of the braid group, on permutation braids.

Used as an independent oracle for equality in B_{n+1}.  A permutation is
stored in one-line notation (a tuple of 1..n+1); the braid word
σ_{i1}⋯σ_{ik} is sent to the permutation obtained by swapping positions
i_j, i_j+1 in turn, so products compose as functions: (a·b)(k) = a(b(k)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import GarsideKitError

Permutation = tuple


def identity(N):
    return tuple(range(1, N + 1))


def longest(N):
    return tuple(range(N, 0, -1))


def compose(a, b):
    return tuple(a[x - 1] for x in b)


def finishing_set(w):
    """{i : σ_i right-divides w}."""
    return {i for i in range(1, len(w)) if w[i - 1] > w[i]}


def starting_set(w):
    """{i : σ_i left-divides w}."""
    pos = [0] * (len(w) + 1)
    for k, x in enumerate(w, 1):
        pos[x] = k
    return {i for i in range(1, len(w)) if pos[i] > pos[i + 1]}


def _swap_positions(w, i):
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _swap_values(w, i):
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def _delta_conj(w):
    """Δ·w·Δ⁻¹, i.e. σ_i ↦ σ_{N-i}."""
    N = len(w)
    return tuple(N + 1 - w[N - k] for k in range(1, N + 1))


def _check(n, w):
    for x in w:
        if x == 0 or abs(x) > n:
            raise GarsideKitError(f"braid letter {x} out of range for B_{n + 1}")


def _left_weight(factors, N):
    f = list(factors)
    e = identity(N)
    changed = True
    while changed:
        changed = False
        for k in range(len(f) - 1):
            a, b = f[k], f[k + 1]
            fa = finishing_set(a)
            while True:
                extra = starting_set(b) - fa
                if not extra:
                    break
                i = min(extra)
                a, b = _swap_positions(a, i), _swap_values(b, i)
                fa = finishing_set(a)
                changed = True
            f[k], f[k + 1] = a, b
    return [x for x in f if x != e]


def braid_normal_form(n, w):
    """Left-greedy form ``(p, factors)`` of a signed σ-word in B_{n+1}: Δ^p·f1⋯fk."""
    w = tuple(w)
    _check(n, w)
    N = n + 1
    top = longest(N)
    e = identity(N)
    p = 0
    f = []
    for x in w:
        if x > 0:
            f = _left_weight(f + [_swap_positions(e, x)], N)
        else:
            # σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹), and P·Δ⁻¹ = Δ⁻¹·(ΔPΔ⁻¹)
            p -= 1
            f = _left_weight([_delta_conj(a) for a in f] + [_swap_positions(top, -x)], N)
        while f and f[0] == top:
            f.pop(0)
            p += 1
    return p, tuple(f)


def permutation_word(w):
    """A positive σ-word for the permutation braid of ``w`` (bubble sort)."""
    w = list(w)
    out = []
    # strip descents from the right: w = w'·σ_i
    while True:
        d = next((i for i in range(1, len(w)) if w[i - 1] > w[i]), None)
        if d is None:
            break
        w[d - 1], w[d] = w[d], w[d - 1]
        out.append(d)
    return tuple(reversed(out))


def normal_form_word(n, nf):
    """Signed σ-word for Δ^p·f1⋯fk."""
    p, factors = nf
    delta = permutation_word(longest(n + 1))
    out = delta * p if p >= 0 else tuple(-x for x in reversed(delta)) * (-p)
    for f in factors:
        out += permutation_word(f)
    return out


def braid_equal(n, w1, w2):
    return braid_normal_form(n, w1) == braid_normal_form(n, w2)


def braid_is_identity(n, w):
    return braid_normal_form(n, w) == (0, ())


# --- Σ_n: the submonoid generated by σ1, σ1σ2, ..., σ1⋯σn -------------------


def sigma_image(n, w):
    """ρ_i ↦ σ1σ2⋯σi on a signed ρ-word."""
    out = []
    for x in w:
        if abs(x) > n or x == 0:
            raise GarsideKitError(f"ρ-letter {x} out of range for n={n}")
        s = tuple(range(1, abs(x) + 1))
        out.extend(s if x > 0 else tuple(-y for y in reversed(s)))
    return tuple(out)


def sigma_length(w):
    return sum(abs(x) for x in w)


@lru_cache(maxsize=None)
def _rho_words(n, total):
    """All ρ-words with σ-length ``total`` (λ(ρ_i) = i)."""
    if total == 0:
        return [()]
    out = []
    for i in range(1, min(n, total) + 1):
        out.extend((i,) + z for z in _rho_words(n, total - i))
    return out


def sigma_divisibility_bounded(n, u, v):
    """Is u ≤_L v in Σ_n?  Exhaustive over ρ-words z of the forced σ-length."""
    u, v = tuple(u), tuple(v)
    d = sigma_length(v) - sigma_length(u)
    if d < 0:
        return False
    target = braid_normal_form(n, sigma_image(n, v))
    return any(braid_normal_form(n, sigma_image(n, u + z)) == target for z in _rho_words(n, d))


@dataclass(frozen=True)
class DehornoyReport:
    status: str  # "pass", "fail" or "not applicable"
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"


def dehornoy_counterexample(n) -> DehornoyReport:
    """ρ2² and ρ2ρ3 are two minimal common right-multiples of ρ1 and ρ2 in Σ_n."""
    if n < 3:
        return DehornoyReport("not applicable", {"reason": "ρ3 does not exist; M_2 has lcms"})
    a, b = (2, 2), (2, 3)
    img = lambda w: sigma_image(n, w)  # noqa: E731
    div = lambda x, y: sigma_divisibility_bounded(n, x, y)  # noqa: E731
    checks = {
        "ρ2² = ρ1ρ2ρ1": braid_equal(n, img(a), img((1, 2, 1))),
        "ρ2ρ3 = ρ1ρ3ρ1": braid_equal(n, img(b), img((1, 3, 1))),
        "ρ1 ≤ ρ2²": div((1,), a),
        "ρ2 ≤ ρ2²": div((2,), a),
        "ρ1 ≤ ρ2ρ3": div((1,), b),
        "ρ2 ≤ ρ2ρ3": div((2,), b),
        "ρ2² ∤ ρ2ρ3": not div(a, b),
        "ρ2ρ3 ∤ ρ2²": not div(b, a),
    }
    return DehornoyReport("pass" if all(checks.values()) else "fail", checks)
