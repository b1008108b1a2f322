"""Command-line interface.

Exit codes: 0 success, 1 verified failure, 2 inconclusive (a cap, budget
or coset limit was hit), 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .braidref import braid_normal_form
from .cosets import DEFAULT_MAX_COSETS, Overflow, coset_enumerate, quotient_of
from .errors import (
    BadParameters,
    DuplicateGenerator,
    GarsideKitError,
    Inconclusive,
    MalformedRelation,
    NotASimple,
)
from .families import (
    CLI_KINDS,
    FamilySpec,
    default_delta,
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
    build_structure,
    duality_check,
    fraction_word,
    gcd_left,
    gcd_right,
    group_normalize,
    is_central,
    is_lattice,
    lattice_dot,
    lattice_json,
    nf_word,
    normal_form,
)
from .kernel import format_word, from_json, opposite, parse_word, to_json
from .reversing import cube_sweep, left_lcm, right_lcm
from .rewrite import cancellativity_scan, equiv_class, left_divides_bounded, right_divides_bounded, words_equal

OK, FAIL, INCONCLUSIVE, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# --- monoid selection -------------------------------------------------------------


class Selection:
    """A presentation plus, when known, its family and Garside element."""

    def __init__(self, p, spec=None, delta=None):
        self.p = p
        self.spec = spec
        self.delta = delta

    def structure(self):
        if self.delta is None:
            raise UsageError("no Garside element known; pass --delta")
        if self.spec is not None and self.delta == default_delta(self.spec):
            return structure_for(self.spec)
        return build_structure(self.p, self.delta)

    def right_variant(self):
        """Presentation used for right lcms by reversing."""
        if self.spec is not None and self.spec.kind.startswith("Mn"):
            return mn(self.spec.n, "R'")
        return self.p

    def left_variant(self):
        if self.spec is not None and self.spec.kind.startswith("Mn"):
            return mn(self.spec.n, "R''")
        return self.p


def _add_selection(sp):
    sp.add_argument("family", nargs="?", help="family name (" + ", ".join(CLI_KINDS) + ")")
    sp.add_argument("--family", dest="family_opt", metavar="KIND")
    sp.add_argument("--kind", dest="kind_opt", metavar="KIND", help=argparse.SUPPRESS)
    sp.add_argument("--monoid", help="shorthand such as Mn:3, Hn:4, dihedral:5, torus-xy:2,3")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--presentation", type=Path, help="presentation JSON file")
    sp.add_argument("--delta", help="Garside element (overrides the family default)")


def _select(args) -> Selection:
    names = [x for x in (args.family, args.family_opt, args.kind_opt) if x]
    if len(set(names)) > 1:
        raise UsageError(f"conflicting family names {names}")
    n, m = args.n, args.m
    kind = names[0] if names else None
    if args.monoid:
        head, _, params = args.monoid.partition(":")
        kind = head
        nums = [int(x) for x in params.split(",") if x] if params else []
        if head.lower() == "dihedral":
            m = nums[0] if nums else m
        else:
            n = nums[0] if nums else n
            m = nums[1] if len(nums) > 1 else m
    if args.presentation is not None:
        if kind:
            raise UsageError("give either a family or --presentation, not both")
        try:
            p = from_json(args.presentation.read_text(encoding="utf-8"))
        except OSError as e:
            raise UsageError(str(e)) from None
        delta = parse_word(p, args.delta, allow_inverse=False) if args.delta else None
        return Selection(p, None, delta)
    if kind is None:
        raise UsageError("no monoid selected; give a family or --presentation")
    key = kind.lower().replace("_", "-")
    if key in ("mn", "m"):
        key = "mn"
    if key not in CLI_KINDS:
        raise UsageError(f"unknown family {kind!r}; choose from {', '.join(CLI_KINDS)}")
    k = CLI_KINDS[key]
    if k == "TorusXY" and m is None and n is not None:
        m = n + 1
    if k == "TorusCyclic" and m is None and n is not None:
        m = n + 1
    spec = FamilySpec(k, n, m)
    p = make_family(spec)
    delta = parse_word(p, args.delta, allow_inverse=False) if args.delta else default_delta(spec)
    return Selection(p, spec, delta)


def _word(p, text, signed=False):
    return parse_word(p, text, allow_inverse=signed)


# --- output ---------------------------------------------------------------------


class Output:
    def __init__(self, as_json, command):
        self.as_json = as_json
        self.command = command
        self.lines = []
        self.result = {}

    def say(self, text):
        self.lines.append(text)

    def finish(self, code):
        status = {OK: "ok", FAIL: "fail", INCONCLUSIVE: "inconclusive"}.get(code, "error")
        if self.as_json:
            doc = {"command": self.command, "status": status, "exit_code": code, "result": self.result}
            print(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2))
        else:
            for line in self.lines:
                print(line)
        return code


def _fmt(p, w):
    return format_word(p, w)


# --- commands -------------------------------------------------------------------


def cmd_family(args, out):
    sel = _select(args)
    doc = to_json(sel.p)
    out.result = {"presentation": doc, "delta": list(sel.delta) if sel.delta else None}
    if args.emit == "json" and not args.json:
        out.say(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2))
    else:
        out.say(repr(sel.p))
        if sel.delta:
            out.say(f"Δ = {_fmt(sel.p, sel.delta)}")
    return OK


def cmd_verify(args, out):
    what = args.what
    if what == "cube":
        sel = _select(args)
        p = opposite(sel.p) if args.opposite else sel.p
        results = cube_sweep(p, sharp=args.variant == "sharp")
        bad = [r for r in results if r.verdict == "fail"]
        unsure = [r for r in results if r.verdict == "inconclusive"]
        out.result = {
            "variant": args.variant,
            "triples": [
                {
                    "triple": [list(x) for x in r.triple],
                    "verdict": r.verdict,
                    "left": list(r.left.word) if r.left.defined else r.left.status,
                    "right": list(r.right.word) if r.right.defined else r.right.status,
                }
                for r in results
            ],
        }
        for r in results:
            t = ", ".join(_fmt(p, x) for x in r.triple)
            sides = [_fmt(p, o.word) if o.defined else o.status for o in (r.left, r.right)]
            out.say(f"({t})  {r.verdict:<12} {sides[0]} | {sides[1]}")
        if bad:
            out.say(f"FAIL on {len(bad)}/{len(results)} triples")
            return FAIL
        if unsure:
            out.say(f"INCONCLUSIVE on {len(unsure)}/{len(results)} triples")
            return INCONCLUSIVE
        out.say(f"PASS on all {len(results)} triples")
        return OK
    if what == "garside":
        sel = _select(args)
        g = sel.structure()
        d = duality_check(g)
        facts = {
            "simples": g.size,
            # build_structure raises NotGarsideElement when the two divisor sets differ
            "left divisors = right divisors": True,
            "lattices (≤_L, ≤_R)": is_lattice(g.leL, g.meetL, g.joinL) and is_lattice(g.leR, g.meetR, g.joinR),
            "Δ central": is_central(g, g.delta),
            "x ↦ Δx⁻¹ order-reversing": d.anti_iso.mapping is not None,
            "(Div(Δ), ≤_L) self-dual": d.self_dual_left,
            "reversing cross-check": g.cross_check,
        }
        out.result = {k: v for k, v in facts.items()}
        ok = facts["lattices (≤_L, ≤_R)"]
        verdict = "PASS" if ok else "FAIL"
        out.say(f"{verdict}: Δ = {_fmt(g.presentation, g.delta)} is a Garside element")
        for k, v in facts.items():
            out.say(f"  {k}: {v}")
        return OK if ok else FAIL
    if what == "hom":
        n = args.n
        if n is None:
            raise UsageError("verify hom needs --n")
        name = args.map
        if name == "phi":
            ok = verify_hom(phi_n(n), group_equality(FamilySpec("BraidArtin", n))).ok
        elif name == "torus":
            ok = verify_hom(torus_map(n), group_equality(FamilySpec("TorusXY", n, n + 1))).ok
        elif name == "cyclic":
            ok = iso_cyclic_roundtrip(n).passed
        else:
            ok = pres_bn_maps(n).passed
        out.result = {"map": name, "n": n, "pass": ok}
        out.say(f"{'PASS' if ok else 'FAIL'}: {name} (n={n})")
        return OK if ok else FAIL
    raise UsageError(what)


def cmd_lattice(args, out):
    sel = _select(args)
    g = sel.structure()
    doc = lattice_json(g)
    out.result = doc
    if args.format == "dot":
        out.say(lattice_dot(g, args.side).rstrip("\n"))
    elif args.format == "json":
        out.say(json.dumps(doc, ensure_ascii=False, sort_keys=True))
    else:
        p = g.presentation
        out.say(f"{g.size} simples of Δ = {_fmt(p, g.delta)}")
        for k, w in enumerate(g.simples):
            out.say(f"  {k}: {_fmt(p, w)}")
        covers = g.coversL if args.side == "L" else g.coversR
        out.say(f"covers ≤_{args.side}: " + " ".join(f"{i}-{j}" for i, j in covers))
    return OK


def cmd_nf(args, out):
    sel = _select(args)
    g = sel.structure()
    p = g.presentation
    nf = normal_form(g, _word(p, args.word))
    factors = [g.simples[s] for s in nf.factors]
    out.result = {"factors": [list(w) for w in factors], "word": list(nf_word(g, nf))}
    out.say(" · ".join(_fmt(p, w) for w in factors) if factors else "1")
    return OK


def cmd_lcm(args, out):
    sel = _select(args)
    p = sel.p
    u, v = _word(p, args.u), _word(p, args.v)
    if args.side == "right":
        r = right_lcm(sel.right_variant(), u, v)
    else:
        r = left_lcm(sel.left_variant(), u, v)
    if r is None:
        out.result = {"lcm": None}
        out.say("no common multiple")
        return FAIL
    m, cu, cv = r
    out.result = {"lcm": list(m), "cofactors": [list(cu), list(cv)]}
    if args.side == "right":
        out.say(f"{_fmt(p, m)}  = u·{_fmt(p, cu)} = v·{_fmt(p, cv)}")
    else:
        out.say(f"{_fmt(p, m)}  = {_fmt(p, cu)}·u = {_fmt(p, cv)}·v")
    return OK


def cmd_gcd(args, out):
    sel = _select(args)
    g = sel.structure()
    p = g.presentation
    u, v = _word(p, args.u), _word(p, args.v)
    d = gcd_left(g, u, v) if args.side == "left" else gcd_right(g, u, v)
    out.result = {"gcd": list(d)}
    out.say(_fmt(p, d))
    return OK


def cmd_wp(args, out):
    sel = _select(args)
    g = sel.structure()
    p = g.presentation
    w1 = _word(p, args.word, signed=True)
    e = group_normalize(g, w1)
    out.result = {
        "denominator": [list(g.simples[s]) for s in e.denominator.factors],
        "numerator": [list(g.simples[s]) for s in e.numerator.factors],
    }
    if args.other is None:
        den = " · ".join(_fmt(p, g.simples[s]) for s in e.denominator.factors) or "1"
        num = " · ".join(_fmt(p, g.simples[s]) for s in e.numerator.factors) or "1"
        out.say(f"({den})⁻¹ · ({num})")
        out.result["fraction"] = list(fraction_word(g, e))
        return OK
    same = e == group_normalize(g, _word(p, args.other, signed=True))
    out.result["equal"] = same
    out.say("equal" if same else "different")
    return OK if same else FAIL


def cmd_braid(args, out):
    if args.strands is None or args.strands < 2:
        raise UsageError("braid nf needs --strands >= 2")
    n = args.strands - 1
    w = parse_word(None, args.word)
    if any(abs(x) > n for x in w):
        raise UsageError(f"letters must lie in 1..{n} for {args.strands} strands")
    p, factors = braid_normal_form(n, w)
    out.result = {"delta_power": p, "factors": [list(f) for f in factors]}
    out.say(f"Δ^{p} " + " ".join("[" + " ".join(map(str, f)) + "]" for f in factors))
    return OK


def cmd_order(args, out):
    sel = _select(args)
    extra = [parse_word(sel.p, r) for r in args.add_relator]
    gp = quotient_of(sel.p, extra)
    t = coset_enumerate(gp, args.max_cosets)
    if isinstance(t.status, Overflow):
        out.result = {"order": None, "overflow": args.max_cosets}
        out.say("OVERFLOW")
        return INCONCLUSIVE
    out.result = {"order": t.order}
    out.say(str(t.order))
    return OK


def cmd_oracle(args, out):
    sel = _select(args)
    p = sel.p
    u = _word(p, args.u)
    if args.query == "scan":
        return cmd_scan(args, out)
    if args.query == "class":
        c = equiv_class(p, u, args.cap)
        out.result = {"size": len(c), "capped": c.capped, "rep": list(c.rep)}
        out.say(f"{len(c)} words, representative {_fmt(p, c.rep)}")
        return INCONCLUSIVE if c.capped else OK
    if args.v is None:
        raise UsageError(f"oracle {args.query} needs --v")
    v = _word(p, args.v)
    if args.query == "equal":
        ok = words_equal(p, u, v, args.cap)
        out.result = {"equal": ok}
        out.say("equal" if ok else "different")
        return OK if ok else FAIL
    f = left_divides_bounded if args.side == "left" else right_divides_bounded
    ok, z = f(p, u, v, args.cap)
    out.result = {"divides": ok, "cofactor": list(z) if ok else None}
    out.say(f"divides, cofactor {_fmt(p, z)}" if ok else "does not divide")
    return OK if ok else FAIL


def cmd_scan(args, out):
    sel = _select(args)
    r = cancellativity_scan(sel.p, args.max_lambda, args.cap)
    if r is None:
        out.result = {"counterexample": None}
        out.say(f"no counterexample up to λ = {args.max_lambda}")
        return OK
    side, a, b, c = r
    out.result = {"counterexample": {"side": side, "a": list(a), "b": list(b), "c": list(c)}}
    p = sel.p
    if side == "left":
        out.say(f"left cancellativity fails: {_fmt(p, a)}·{_fmt(p, b)} = {_fmt(p, a)}·{_fmt(p, c)}")
    else:
        out.say(f"right cancellativity fails: {_fmt(p, b)}·{_fmt(p, a)} = {_fmt(p, c)}·{_fmt(p, a)}")
    return FAIL


def cmd_report(args, out):
    doc, results = checks.report(args.n_max, args.seed)
    out.result = doc
    if args.format == "json" and not args.json:
        out.say(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=2))
    elif not args.json:
        out.say(checks.report_markdown(doc).rstrip("\n"))
    statuses = {r.status for r in results}
    if "fail" in statuses:
        return FAIL
    if "inconclusive" in statuses:
        return INCONCLUSIVE
    return OK


# --- parser -----------------------------------------------------------------------


def build_parser():
    ap = _Parser(prog="garside-kit", description="Garside structures on torus-knot-type monoids.")
    ap.add_argument("--json", action="store_true", help="emit a JSON document instead of text")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        return sp

    sp = add("family", cmd_family, "print a presentation")
    _add_selection(sp)
    sp.add_argument("--emit", choices=("text", "json"), default="text")

    sp = add("verify", cmd_verify, "cube condition, Garside axioms, homomorphisms")
    sp.add_argument("what", choices=("cube", "garside", "hom"))
    _add_selection(sp)
    sp.add_argument("--variant", choices=("sharp", "equiv"), default="sharp",
                    help="literal equality (sharp) or equality by the rewrite oracle")
    sp.add_argument("--opposite", action="store_true", help="check the opposite presentation")
    sp.add_argument("--map", choices=("phi", "torus", "cyclic", "presbn"), default="phi")

    sp = add("lattice", cmd_lattice, "divisor lattice of Δ")
    _add_selection(sp)
    sp.add_argument("--format", choices=("text", "dot", "json"), default="text")
    sp.add_argument("--side", choices=("L", "R"), default="L")

    sp = add("nf", cmd_nf, "left-greedy normal form of a positive word")
    _add_selection(sp)
    sp.add_argument("--word", required=True)

    sp = add("lcm", cmd_lcm, "lcm by subword reversing")
    _add_selection(sp)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--side", choices=("right", "left"), default="right")

    sp = add("gcd", cmd_gcd, "gcd through the simple lattice")
    _add_selection(sp)
    sp.add_argument("--u", required=True)
    sp.add_argument("--v", required=True)
    sp.add_argument("--side", choices=("left", "right"), default="left")

    sp = add("wp", cmd_wp, "word problem in the group of fractions")
    _add_selection(sp)
    sp.add_argument("--word", required=True, help="signed word, e.g. '1 2 -1'")
    sp.add_argument("--other", help="second signed word to compare with")

    sp = add("braid", cmd_braid, "braid group oracle")
    sp.add_argument("action", choices=("nf",))
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("--word", required=True)

    sp = add("order", cmd_order, "order of a quotient group by coset enumeration")
    _add_selection(sp)
    sp.add_argument("--add-relator", action="append", default=[])
    sp.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    sp = add("oracle", cmd_oracle, "rewrite oracle queries")
    sp.add_argument("query", choices=("equal", "divides", "class", "scan"))
    _add_selection(sp)
    sp.add_argument("--u", default="")
    sp.add_argument("--max-lambda", type=int, default=10)
    sp.add_argument("--v")
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp.add_argument("--cap", type=int)

    sp = add("scan", cmd_scan, "bounded searches")
    sp.add_argument("what", choices=("cancellativity",))
    _add_selection(sp)
    sp.add_argument("--max-lambda", type=int, default=10)
    sp.add_argument("--cap", type=int)

    sp = add("report", cmd_report, "run the reproduction checks")
    sp.add_argument("--n-max", type=int, default=4)
    sp.add_argument("--format", choices=("md", "json"), default="md")
    return ap


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:  # --help exits 0, bad usage exits 3
        return e.code if isinstance(e.code, int) else USAGE
    out = Output(args.json, args.command)
    try:
        code = args.fn(args, out)
    except (UsageError, BadParameters, MalformedRelation, DuplicateGenerator, NotASimple) as e:
        print(f"garside-kit: error: {e}", file=sys.stderr)
        return USAGE
    except Inconclusive as e:
        out.result = {"error": str(e)}
        out.say(f"INCONCLUSIVE: {e}")
        return out.finish(INCONCLUSIVE)
    except GarsideKitError as e:
        out.result = {"error": f"{type(e).__name__}: {e}"}
        out.say(f"FAIL: {type(e).__name__}: {e}")
        return out.finish(FAIL)
    return out.finish(code)


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
