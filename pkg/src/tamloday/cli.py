"""Command-line driver: ``tamloday {pi, relative-pi, check, norm, box, compare}``.

Exit codes: 0 success, 1 usage or input error, 2 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cache as cache_mod
from .fgab import FgAbGroup
from .gsimp import free_orbit, two_fixed_points
from .homotopy import pi_0_tambara, pi_n
from .parse import ParseError, load_ring, parse_coeff, parse_group, parse_space
from .ringobj import RingMap
from .tambara import TambaraFunctor, check_tambara_axioms, is_prime, norm_construction, unit_map


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _group_dict(g: FgAbGroup) -> dict:
    return {"rank": g.rank, "torsion": list(g.torsion), "str": str(g)}


def _functor_report(t: TambaraFunctor) -> dict:
    return {
        "fixed": _group_dict(t.fixed),
        "free": _group_dict(t.free),
        "res": t.res.matrix,
        "tr": t.tr.matrix,
        "weyl": t.weyl.matrix,
        "norm_on_generators": [list(t.norm(g)) for g in t.free.gens()],
    }


def _pi_reports(L, top: int) -> list[dict]:
    out = []
    p0 = pi_0_tambara(L)
    h0 = pi_n(L, 0)
    if p0.fixed.orders != h0.fixed.orders or p0.free.orders != h0.free.orders:
        raise AssertionError("π_0 as a quotient disagrees with H_0")
    out.append({"degree": 0, **_functor_report(p0)})
    for n in range(1, top + 1):
        d = pi_n(L, n).to_dict()
        d["norm_on_generators"] = None
        out.append(d)
    return out


def _format_pi(header: str, reports: list[dict]) -> str:
    lines = [header]
    for r in reports:
        lines.append(f"pi[{r['degree']}]: fixed {r['fixed']['str']}, free {r['free']['str']}")
    return "\n".join(lines)


def _emit(args, report: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(text)


def _cached(args, op: str, payload: dict, compute):
    c = cache_mod.Cache(cache_mod.resolve_dir(getattr(args, "cache_dir", None)))
    k = cache_mod.key(op, payload)
    hit = c.get(k)
    if hit is not None:
        return hit
    value = compute()
    c.put(k, value)
    return value


def _space_key(text: str) -> str:
    return "".join(text.split())


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_pi(args) -> int:
    from .loday import loday

    p = parse_group(args.group)
    t, ckey = parse_coeff(args.coeff, p)
    x = parse_space(args.space, p)
    top = args.max_degree

    def compute():
        return {"group": f"C{p}", "space": _space_key(args.space), "coeff": ckey,
                "pi": _pi_reports(loday(x, t, top + 1), top)}

    rep = _cached(args, "pi", {"group": p, "space": _space_key(args.space), "coeff": ckey, "top": top}, compute)
    _emit(args, rep, _format_pi(f"L_{rep['space']}({args.coeff}) over C{p}", rep["pi"]))
    return 0


def _base_map(base: TambaraFunctor, t: TambaraFunctor):
    """The structure map ``base -> t``: the unit from the Burnside functor, or ``1 ↦ 1`` between cyclic constants."""
    from .loday import constant_morphism

    if base.name.startswith("A"):
        return unit_map(t)
    R, T = base.free_ring, t.free_ring
    if R.additive.ngens != 1 or R.unit != R.additive.basis(0):
        raise UsageError("relative base must be burnside or a constant ring generated by its unit")
    try:
        f = RingMap.from_function(R, T, lambda v: T.additive.scale(v[0], T.unit))
        return constant_morphism(f, base, t)
    except ValueError as e:
        raise UsageError(f"no unital map from the base to the coefficients: {e}")


def cmd_relative_pi(args) -> int:
    from .loday import relative_loday

    p = parse_group(args.group)
    t, ckey = parse_coeff(args.coeff, p)
    base, bkey = parse_coeff(args.base, p)
    x = parse_space(args.space, p)
    top = args.max_degree

    def compute():
        L = relative_loday(_base_map(base, t), x, top + 1)
        return {"group": f"C{p}", "space": _space_key(args.space), "coeff": ckey, "base": bkey,
                "pi": _pi_reports(L, top)}

    rep = _cached(args, "relative-pi",
                  {"group": p, "space": _space_key(args.space), "coeff": ckey, "base": bkey, "top": top}, compute)
    _emit(args, rep, _format_pi(f"L^{bkey}_{rep['space']}({args.coeff}) over C{p}", rep["pi"]))
    return 0


def cmd_check(args) -> int:
    p = parse_group(args.group)
    t, ckey = parse_coeff(args.coeff, p)
    bad = check_tambara_axioms(t)
    report = {"coeff": ckey, "group": f"C{p}", "violations": [str(v) for v in bad]}
    text = "all axioms hold" if not bad else "\n".join(["axiom violations:"] + [f"  {v}" for v in bad])
    _emit(args, report, text)
    return 0 if not bad else 2


def cmd_norm(args) -> int:
    p = parse_group(args.group)
    if not is_prime(p):
        raise UsageError("the norm needs a prime group order")
    ring, src = load_ring(args.ring)
    nt = norm_construction(ring, p)
    report = {"ring": src, "group": f"C{p}", **_functor_report(nt)}
    _emit(args, report, f"N_e^C{p}({ring.name or src}): fixed {nt.fixed}, free {nt.free}")
    return 0


def cmd_box(args) -> int:
    from .tambara import box_tambara

    p = parse_group(args.group)
    a, ka = parse_coeff(args.left, p)
    b, kb = parse_coeff(args.right, p)
    bx = box_tambara(a, b)
    bad = check_tambara_axioms(bx)
    report = {"left": ka, "right": kb, **_functor_report(bx), "violations": [str(v) for v in bad]}
    text = f"{ka} □ {kb}: fixed {bx.fixed}, free {bx.free}" + ("" if not bad else f"\naxiom violation: {bad[0]}")
    _emit(args, report, text)
    return 0 if not bad else 2


def _ring_of(coeff: str):
    kind, _, ring_src = coeff.partition(":")
    if kind != "constant" or not ring_src:
        raise UsageError("ring-level comparisons need --coeff constant:RING")
    return load_ring(ring_src)[0]


def cmd_compare(args) -> int:
    from . import loday as L

    D = args.max_degree
    kind = args.kind
    reports = []
    if kind == "rotation-hc":
        n = args.n
        if is_prime(n):
            t, _ = parse_coeff(args.coeff, n)
            reports += [L.rotation_hc_iso(t, n, D), L.rotation_quotient_iso(t, D)]
        else:
            reports.append(L.rotation_hc_ring_iso(_ring_of(args.coeff), n, D))
    elif kind == "subdivision":
        reports.append(L.subdivision_iso(_ring_of(args.coeff), args.n, D))
    elif kind == "reflection-bar":
        t, _ = parse_coeff(args.coeff, 2)
        reports.append(L.reflection_bar_iso(t, D))
    elif kind == "suspension-bar":
        p = parse_group(args.group)
        t, _ = parse_coeff(args.coeff, p)
        y = parse_space(args.space, p) if args.space else (free_orbit(p) if args.flipped else two_fixed_points(p))
        reports.append(L.suspension_bar_iso(y, t, D, flipped=args.flipped))
    elif kind == "properties":
        from .gsimp import interval_sigma, reflection_circle, rotation_circle
        from .tambara import burnside_tambara

        t, _ = parse_coeff(args.coeff, 2)
        s0 = free_orbit(2)
        reports += [
            L.disjoint_union_iso(reflection_circle(), rotation_circle(2), t, D),
            L.box_distributivity_iso(reflection_circle(), t, burnside_tambara(2), D),
            L.diagonal_product_iso(two_fixed_points(2), two_fixed_points(2), t, D),
            L.pushout_iso(interval_sigma(), s0, interval_sigma(),
                          lambda k, s: ("b", s[1], s[2]), lambda k, s: ("b", s[1], (s[2] + 1) % 2), t, D),
        ]
    ok = all(r.verified for r in reports)
    report = {"kind": kind, "verified": ok,
              "checks": [{"name": r.name, "degree": r.D, "verified": r.verified,
                          "failures": [list(map(str, f)) for f in r.failures]} for r in reports]}
    text = "\n".join(str(r) for r in reports) + ("\nverified" if ok else "\nFAILED")
    _emit(args, report, text)
    return 0 if ok else 2


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="tamloday", description="Loday constructions of C_p-Tambara functors.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, group_default="C2"):
        sp.add_argument("--group", default=group_default, help="cyclic group, e.g. C2")
        sp.add_argument("--format", choices=["text", "json"], default="text")
        sp.add_argument("--cache-dir", default=None)

    sp = sub.add_parser("pi", help="homotopy Mackey functors of a Loday construction")
    common(sp)
    sp.add_argument("--space", required=True)
    sp.add_argument("--coeff", required=True)
    sp.add_argument("--max-degree", type=int, default=2)
    sp.set_defaults(fn=cmd_pi)

    sp = sub.add_parser("relative-pi", help="homotopy of a relative Loday construction")
    common(sp)
    sp.add_argument("--space", required=True)
    sp.add_argument("--coeff", required=True)
    sp.add_argument("--base", required=True)
    sp.add_argument("--max-degree", type=int, default=2)
    sp.set_defaults(fn=cmd_relative_pi)

    sp = sub.add_parser("check", help="check the Tambara axioms of a coefficient")
    common(sp)
    sp.add_argument("--coeff", required=True)
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("norm", help="norm construction of a ring")
    common(sp)
    sp.add_argument("--ring", required=True)
    sp.set_defaults(fn=cmd_norm)

    sp = sub.add_parser("box", help="box product of two coefficients")
    common(sp)
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.set_defaults(fn=cmd_box)

    sp = sub.add_parser("compare", help="verify a comparison isomorphism")
    common(sp)
    sp.add_argument("kind", choices=["rotation-hc", "subdivision", "reflection-bar", "suspension-bar", "properties"])
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--coeff", default="constant:Z/4")
    sp.add_argument("--space", default=None)
    sp.add_argument("--flipped", action="store_true")
    sp.add_argument("--max-degree", type=int, default=3)
    sp.set_defaults(fn=cmd_compare)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not getattr(args, "fn", None):
            raise UsageError("a subcommand is required")
        if getattr(args, "max_degree", 0) < 0:
            raise UsageError("--max-degree must be nonnegative")
        return args.fn(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return 1
    except ParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
