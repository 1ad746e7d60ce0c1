"""Command-line front end.

Subcommands: analyze, invert, to-poly, cycle-index, reps, conjugate.
Every command takes --format text|structured (structured = one JSON
object on stdout) and --verify for an oracle cross-check where that
makes sense.  Exit codes: 0 ok, 2 input rejected by the conversion
procedure (with the reason code), 1 error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter

from .arith import factorize
from .conjugacy import (
    conjugacy_invariant,
    hol_class_id,
    hol_conjugate,
    rep_system,
    reps_as_cyclotomic,
)
from .cycle_index import (
    CycleIndex,
    ci_cp,
    ci_focp,
    ci_gcp,
    ci_hol,
    ci_regular,
    ci_sym,
)
from .field import CyclotomicContext, make_field
from .forms import (
    CyclotomicForm,
    PolyForm,
    Rejected,
    analyze_permutation,
    cyclotomic_to_poly,
    eval_cyclotomic,
    invert_permutation,
    poly_to_cyclotomic,
)
from .oracle import (
    DEFAULT_CAP,
    ExplicitPerm,
    ci_brute,
    enumerate_group,
    group_order,
    materialize,
)
from .wreath import (
    AffineMapZ,
    WreathElem,
    cycle_type_wreath,
    cyclotomic_to_wreath,
)


class CommandError(Exception):
    pass


def _add_format_flags(p):
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--verify", action="store_true",
                   help="cross-check the result against brute force")


def _add_field_flags(p):
    p.add_argument("--p", type=int, help="field characteristic")
    p.add_argument("--k", type=int, help="extension degree")
    p.add_argument("--q", type=int, help="field size p^k (alternative to --p/--k)")
    p.add_argument("--modulus", help="comma-separated modulus coefficients c0,...,ck")
    p.add_argument("--omega", help="primitive root override (element syntax)")
    p.add_argument("--d", type=int, required=True, help="index of the subgroup")


def _resolve_field(args):
    if args.q is not None:
        fac = factorize(args.q)
        if len(fac) != 1:
            raise CommandError(f"--q {args.q} is not a prime power")
        p, k = fac[0]
        if args.p is not None and args.p != p:
            raise CommandError(f"--p {args.p} conflicts with --q {args.q}")
        if args.k is not None and args.k != k:
            raise CommandError(f"--k {args.k} conflicts with --q {args.q}")
    elif args.p is not None and args.k is not None:
        p, k = args.p, args.k
    else:
        raise CommandError("need --q or both --p and --k")
    modulus = [int(c) for c in args.modulus.split(",")] if args.modulus else None
    cfg = make_field(p, k, modulus=modulus)
    if args.omega:
        cfg = make_field(p, k, modulus=modulus,
                         omega=cfg.parse_elem(args.omega))
    return cfg


def _emit(args, payload: dict) -> int:
    status = payload.get("status", "ok")
    if args.format == "structured":
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            if isinstance(value, list):
                for item in value:
                    print(f"{key}: {item}")
            elif isinstance(value, bool):
                print(f"{key}: {'true' if value else 'false'}")
            else:
                print(f"{key}: {value}")
    return {"ok": 0, "rejected": 2}.get(status, 1)


def cmd_analyze(args) -> int:
    cfg = _resolve_field(args)
    ctx = CyclotomicContext(cfg, args.d)
    P = PolyForm.parse(cfg, args.poly)
    payload = {
        "status": "ok",
        "field": f"q={cfg.q} modulus={list(cfg.modulus)}",
        "d": ctx.d,
        "m": ctx.m,
        "poly": str(P),
    }
    try:
        analysis = analyze_permutation(P, ctx)
    except Rejected as exc:
        try:
            payload["cyclotomic"] = str(poly_to_cyclotomic(P, ctx))
            payload["permutation"] = False
        except Rejected:
            pass
        payload.update(status="rejected", reason=exc.code)
        return _emit(args, payload)
    wc = cyclotomic_to_wreath(analysis.form, analysis.psi)
    wz = wc.to_z()
    ct = cycle_type_wreath(wz)
    payload.update({
        "cyclotomic": str(analysis.form),
        "permutation": True,
        "psi": str(analysis.psi),
        "wreath_c": str(wc),
        "wreath_z": str(wz),
        "cycle_type": str(ct),
    })
    if args.verify:
        perm = materialize(analysis.form)
        if perm.cycle_type() != ct:
            raise CommandError("cycle type disagrees with materialization")
        payload["verified"] = True
    return _emit(args, payload)


def cmd_invert(args) -> int:
    cfg = _resolve_field(args)
    ctx = CyclotomicContext(cfg, args.d)
    P = PolyForm.parse(cfg, args.poly)
    try:
        analysis = analyze_permutation(P, ctx)
    except Rejected as exc:
        return _emit(args, {"status": "rejected", "reason": exc.code})
    inverse = invert_permutation(analysis.form)
    payload = {"status": "ok", "inverse": str(inverse)}
    if args.verify or args.check:
        for x in cfg.elements():
            if inverse.eval(P.eval(x)) != x or P.eval(inverse.eval(x)) != x:
                raise CommandError(f"composition is not the identity at {x}")
        payload["check"] = "identity-ok"
    return _emit(args, payload)


def cmd_to_poly(args) -> int:
    cfg = _resolve_field(args)
    ctx = CyclotomicContext(cfg, args.d)
    form = CyclotomicForm.parse(ctx, args.form)
    P = cyclotomic_to_poly(form)
    payload = {"status": "ok", "poly": str(P)}
    if args.verify:
        for x in cfg.elements():
            if P.eval(x) != eval_cyclotomic(form, x):
                raise CommandError(f"pointwise mismatch at {x}")
        payload["check"] = "pointwise-ok"
    return _emit(args, payload)


def _reconcile_dm(args, need_d=True):
    d = args.d
    if need_d and d is None:
        raise CommandError("need --d")
    if args.q is not None:
        if (args.q - 1) % (d or 1) != 0:
            raise CommandError(f"d={d} does not divide q-1={args.q - 1}")
        m = (args.q - 1) // (d or 1)
        if args.m is not None and args.m != m:
            raise CommandError(f"--m {args.m} conflicts with --q {args.q} "
                               f"(expected m={m})")
        return d, m
    if args.m is None:
        raise CommandError("need --m or --q")
    return d, args.m


def cmd_cycle_index(args) -> int:
    group = args.group
    if group == "sym":
        if args.d is None:
            raise CommandError("need --d for sym")
        ci = ci_sym(args.d)
        brute = _sym_brute(args.d) if args.verify else None
    elif group in ("hol", "reg"):
        if args.m is None:
            raise CommandError(f"need --m for {group}")
        ci = ci_hol(args.m) if group == "hol" else ci_regular(args.m)
        if args.verify:
            if group == "hol":
                brute = ci_brute(enumerate_group("Hol", 1, args.m, args.cap))
            else:
                brute = ci_brute(
                    (AffineMapZ(args.m, 1, b) for b in range(args.m)))
        else:
            brute = None
    else:
        d, m = _reconcile_dm(args)
        wreath_group = {"gcp": "W", "focp": "W1", "cp": "Weq",
                        "wreath-brute": "W"}[group]
        if group == "wreath-brute":
            ci = ci_brute(enumerate_group("W", d, m, args.cap),
                          group_order("W", d, m))
            brute = ci_gcp(d, m) if args.verify else None
        else:
            ci = {"gcp": ci_gcp, "focp": ci_focp, "cp": ci_cp}[group](d, m)
            brute = ci_brute(enumerate_group(wreath_group, d, m, args.cap),
                             group_order(wreath_group, d, m)) \
                if args.verify else None
    payload = {"status": "ok", "group": group, "cycle_index": str(ci),
               "terms": len(ci.terms), "degree": ci.degree()}
    if brute is not None:
        if ci != brute:
            raise CommandError("cycle index disagrees with brute force")
        payload["verified"] = True
    return _emit(args, payload)


def _sym_brute(d):
    import itertools
    from fractions import Fraction
    tally = Counter()
    for images in itertools.permutations(range(d)):
        tally[ExplicitPerm(images).cycle_type()] += 1
    total = math.factorial(d)
    return CycleIndex({ct: Fraction(n, total) for ct, n in tally.items()})


def cmd_reps(args) -> int:
    group = args.group
    kind = args.kind
    if group in ("w", "w1", "weq"):
        wname = {"w": "W", "w1": "W1", "weq": "Weq"}[group]
        d, m = _reconcile_dm(args)
        system = rep_system(wname, kind, d, m)
        lines = [str(g) for g in system.reps]
        payload = {"status": "ok", "group": group, "kind": kind,
                   "count": len(lines), "rep": lines}
        if args.verify:
            _verify_rep_system(system, args.cap)
            payload["verified"] = True
        return _emit(args, payload)
    if group in ("gcp", "focp", "cp"):
        if args.d is None:
            raise CommandError("need --d")
        cfg = _resolve_field(args)
        ctx = CyclotomicContext(cfg, args.d)
        if args.m is not None and args.m != ctx.m:
            raise CommandError(f"--m {args.m} conflicts with q={cfg.q}, "
                               f"d={args.d} (expected m={ctx.m})")
        forms = reps_as_cyclotomic(group.upper(), kind, ctx)
        lines = [str(f) for f in forms]
        payload = {"status": "ok", "group": group, "kind": kind,
                   "count": len(lines), "rep": lines}
        if args.verify:
            wname = {"gcp": "W", "focp": "W1", "cp": "Weq"}[group]
            _verify_rep_system(rep_system(wname, kind, ctx.d, ctx.m), args.cap)
            payload["verified"] = True
        return _emit(args, payload)
    raise CommandError(f"unknown group {group!r}")


def _verify_rep_system(system, cap):
    """Oracle completeness: every element of the kind matches exactly one rep."""
    from .conjugacy import is_involution_elem, is_long_cycle
    mode = "Weq" if system.group == "Weq" else "W"
    predicate = is_long_cycle if system.kind == "long-cycle" else is_involution_elem
    invariants = [conjugacy_invariant(g, mode) for g in system.reps]
    if len(set(invariants)) != len(invariants):
        raise CommandError("representatives are not pairwise non-conjugate")
    for g in system.reps:
        if not predicate(g):
            raise CommandError(f"representative {g} lacks the claimed property")
    for g in enumerate_group(system.group, system.d, system.m, cap):
        if predicate(g):
            inv = conjugacy_invariant(g, mode)
            if sum(1 for i in invariants if i == inv) != 1:
                raise CommandError(f"element {g} matches != 1 representative")


def cmd_conjugate(args) -> int:
    if args.group == "hol":
        g = AffineMapZ.parse(args.elements[0])
        h = AffineMapZ.parse(args.elements[1])
        if g.m != h.m:
            raise CommandError("moduli differ")
        verdict = hol_conjugate(g, h)
        payload = {"status": "ok", "conjugate": verdict}
        if not verdict:
            payload["distinguished_by"] = (
                "multiplier" if g.a != h.a else "translation-orbit")
            payload["class_ids"] = [str(tuple(hol_class_id(g))),
                                    str(tuple(hol_class_id(h)))]
        return _emit(args, payload)
    if args.group in ("w", "weq"):
        mode = "W" if args.group == "w" else "Weq"
        g = WreathElem.parse(args.elements[0])
        h = WreathElem.parse(args.elements[1])
        inv_g = conjugacy_invariant(g, mode)
        inv_h = conjugacy_invariant(h, mode)
        verdict = inv_g == inv_h
        payload = {"status": "ok", "conjugate": verdict}
        if not verdict:
            payload["distinguished_by"] = _wreath_mismatch(inv_g, inv_h, mode)
        return _emit(args, payload)
    raise CommandError(f"unknown group {args.group!r}")


def _wreath_mismatch(inv_g, inv_h, mode):
    if inv_g[0] != inv_h[0]:
        return "psi-cycle-type"
    if mode == "Weq" and inv_g[1] != inv_h[1]:
        return "multiplier"
    fp_g, fp_h = inv_g[-1], inv_h[-1]
    lens = {length for length, _ in fp_g} | {length for length, _ in fp_h}
    for length in sorted(lens):
        if dict(fp_g).get(length) != dict(fp_h).get(length):
            return f"cycle-product-classes(l={length})"
    return "cycle-product-classes"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloperm",
        description="index-d cyclotomic permutations of F_q: forms, "
                    "cycle indices, conjugacy, inversion")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="polynomial -> cyclotomic/wreath forms "
                                       "and cycle type")
    _add_field_flags(p)
    p.add_argument("--poly", required=True)
    _add_format_flags(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("invert", help="polynomial form of the inverse permutation")
    _add_field_flags(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--check", action="store_true",
                   help="compose with the input and assert identity")
    _add_format_flags(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("to-poly", help="cyclotomic form -> polynomial form")
    _add_field_flags(p)
    p.add_argument("--form", required=True,
                   help="cyclotomic form f(a=[...], r=[...])")
    _add_format_flags(p)
    p.set_defaults(func=cmd_to_poly)

    p = sub.add_parser("cycle-index", help="exact cycle index of a group")
    p.add_argument("--group", required=True,
                   choices=("gcp", "cp", "focp", "hol", "sym", "reg",
                            "wreath-brute"))
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_format_flags(p)
    p.set_defaults(func=cmd_cycle_index)

    p = sub.add_parser("reps", help="conjugacy class representatives")
    p.add_argument("--group", required=True,
                   choices=("gcp", "cp", "focp", "w", "w1", "weq"))
    p.add_argument("--kind", required=True,
                   choices=("long-cycle", "involution"))
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--modulus")
    p.add_argument("--omega")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    _add_format_flags(p)
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("conjugate", help="decide conjugacy of two elements")
    p.add_argument("--group", required=True, choices=("hol", "w", "weq"))
    p.add_argument("elements", nargs=2,
                   help="two elements in affine/wreath syntax")
    _add_format_flags(p)
    p.set_defaults(func=cmd_conjugate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Rejected as exc:
        code = _emit(args, {"status": "rejected", "reason": exc.code})
        return code
    except (CommandError, ValueError) as exc:
        _emit(args, {"status": "error", "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
