"""Command-line front end.

Every subcommand prints a human-readable report by default and a
deterministic JSON document with ``--json`` (wall time is reported on
stderr only, so identical argv always produces byte-identical stdout).

Exit codes: 0 = all checks pass, 1 = mathematical mismatch, 2 = usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from permbinom import classify, hermite, symalg
from permbinom.ffield import make_field, parse_field_descriptor
from permbinom.symalg import poly_json, poly_str

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _field_from_arg(spec: str):
    p, e = parse_field_descriptor(spec)
    return make_field(p, e)


def _emit(args, payload: dict, text_lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _report(args, command: str, config: dict, results: dict, status: str) -> dict:
    return {
        "command": command,
        "config": config,
        "results": results,
        "status": status,
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    res = classify.sweep(q_max=args.max_q, method=args.method, jobs=args.jobs)
    status = "pass" if not res.disagreements else "fail"
    payload = _report(
        args,
        "verify",
        {"max_q": args.max_q, "method": args.method, "seed": args.seed},
        res.summary(),
        status,
    )
    lines = [
        f"swept {len(res.verdicts)} (q, a) pairs for prime powers q <= {args.max_q}",
        "pp counts per q: "
        + ", ".join(f"{q}:{c}" for q, c in sorted(res.pp_counts.items()) if c),
        f"{len(res.disagreements)} disagreements",
    ]
    if args.verdicts and not args.json:
        for v in res.verdicts:
            print(v.to_json())
    _emit(args, payload, lines)
    return EXIT_OK if status == "pass" else EXIT_MISMATCH


def cmd_check(args) -> int:
    ctx = _field_from_arg(args.q)
    a = args.a
    if not 0 < a < ctx.q2:
        print(f"error: a = {a} is not a nonzero element of F_{ctx.q2}", file=sys.stderr)
        return EXIT_USAGE
    v = classify.PPVerdict(
        q=ctx.q,
        p=ctx.p,
        e=ctx.e,
        a=a,
        brute=hermite.brute_pp_test(ctx, a),
        hermite=hermite.hermite_pp_test(ctx, a),
        predicted=classify.theorem_predicate(ctx, a),
    )
    payload = _report(args, "check", {"q": args.q, "a": a}, v.to_dict(),
                      "pass" if v.agree else "fail")
    _emit(args, payload, [
        f"q = {ctx.q} (F_{ctx.q2}), a = {a}",
        f"brute = {v.brute}, hermite = {v.hermite}, predicted = {v.predicted}",
        f"agree = {v.agree}",
    ])
    return EXIT_OK if v.agree else EXIT_MISMATCH


def cmd_hermite_profile(args) -> int:
    ctx = _field_from_arg(args.q)
    a = args.a
    if not 0 < a < ctx.q2:
        print(f"error: a = {a} is not a nonzero element of F_{ctx.q2}", file=sys.stderr)
        return EXIT_USAGE
    q = ctx.q
    sums = {alpha: hermite.s_q(ctx, a, alpha) for alpha in range(q)}
    root_ok = (
        ctx.pow(a, (q + 1) // 3) != 1
        if (q + 1) % 3 == 0
        else not hermite.has_nonzero_root(ctx, a)
    )
    is_pp = root_ok and all(v == 0 for v in sums.values())
    payload = _report(
        args,
        "hermite-profile",
        {"q": args.q, "a": a},
        {
            "coefficient_sums": {str(k): v for k, v in sums.items()},
            "only_root_zero": root_ok,
            "is_pp": is_pp,
        },
        "pass",
    )
    lines = [f"q = {q}, a = {a}", f"only root zero: {root_ok}"]
    lines += [f"  S({alpha}) = {v}" for alpha, v in sums.items()]
    lines.append(f"hermite verdict: {'PP' if is_pp else 'not a PP'}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_gpoly(args) -> int:
    try:
        rec = symalg.g_poly(args.alpha)
    except symalg.BadAlpha as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = _report(
        args,
        "gpoly",
        {"alpha": args.alpha},
        {
            "alpha": rec.alpha,
            "d_alpha": rec.d_alpha,
            "q_bound": rec.q_bound,
            "g": poly_json(rec.g),
            "bracket": poly_json(rec.bracket),
        },
        "pass",
    )
    _emit(args, payload, [poly_str(rec.g)])
    return EXIT_OK


def cmd_resultant(args) -> int:
    try:
        f = symalg.g_poly(args.left).g
        g = symalg.g_poly(args.right).g
    except symalg.BadAlpha as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    res = symalg.resultant_z(list(f), list(g))
    results = {"left": args.left, "right": args.right, "resultant": str(res)}
    lines = [f"Res(g_{args.left}, g_{args.right}) = {res}"]
    if args.factor:
        fact = symalg.factor_trial(res)
        results["factorization"] = {str(p): m for p, m in sorted(fact.factors.items())}
        results["complete"] = fact.complete
        pretty = " * ".join(
            f"{p}^{m}" if m > 1 else str(p) for p, m in sorted(fact.factors.items())
        )
        lines.append(f"  = {pretty}" + ("" if fact.complete else f" * C ({fact.cofactor})"))
    payload = _report(args, "resultant", {"left": args.left, "right": args.right},
                      results, "pass")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_gcdchain(args) -> int:
    p = args.p
    polys = [list(symalg.g_poly(alpha).g) for alpha in (2, 5, 8)]
    try:
        gcd = symalg.gcd_mod_p(polys, p)
    except symalg.AllZero as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    roots = [r for r in range(p) if symalg.eval_mod_p(gcd, r, p) == 0]
    evals = {}
    for alpha in (11, 14):
        gx = list(symalg.g_poly(alpha).g)
        for r in roots:
            evals[f"g_{alpha}({r - p if r > p // 2 else r})"] = symalg.eval_mod_p(gx, r, p)
    payload = _report(
        args,
        "gcdchain",
        {"p": p},
        {"gcd": poly_json(gcd), "roots": roots, "evaluations": evals},
        "pass",
    )
    lines = [f"gcd(g_2, g_5, g_8) mod {p} = {poly_str(gcd, 'x')}"]
    lines += [f"  {k} mod {p} = {v}" for k, v in evals.items()]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_sporadic(args) -> int:
    try:
        count, members = classify.sporadic_census(args.q)
    except classify.UnsupportedQ as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = _report(args, "sporadic", {"q": args.q},
                      {"count": count, "elements": members}, "pass")
    _emit(args, payload, [
        f"q = {args.q}: {count} values of a give a permutation",
        "a = " + " ".join(str(m) for m in members),
    ])
    return EXIT_OK


def cmd_pipeline(args) -> int:
    try:
        report = classify.elimination_pipeline()
    except classify.FixtureMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    chains = {
        str(p): {
            "gcd": poly_json(c.gcd),
            "roots": list(c.roots),
            "evaluations": {f"g_{alpha}({r})": v for (alpha, r), v in c.evaluations.items()},
            "conclusion": c.conclusion,
        }
        for p, c in report.chains.items()
    }
    payload = _report(
        args,
        "pipeline",
        {},
        {
            "resultant": str(report.resultant),
            "factorization": {str(p): m for p, m in sorted(report.factorization.factors.items())},
            "surviving_primes": list(report.surviving_primes),
            "chains": chains,
            "candidate_qs": list(report.candidate_qs),
        },
        "pass",
    )
    lines = [
        f"Res(g_2, g_5) = {report.resultant}",
        "factors: " + " * ".join(
            f"{p}^{m}" if m > 1 else str(p)
            for p, m in sorted(report.factorization.factors.items())
        ),
        f"surviving primes: {list(report.surviving_primes)}",
    ]
    for p, c in report.chains.items():
        lines.append(f"p = {p}: gcd = {poly_str(list(c.gcd), 'x')}; {c.conclusion}")
    lines.append(f"candidate q beyond the direct search: {list(report.candidate_qs)}")
    _emit(args, payload, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permbinom",
        description="verify the classification of the permutation binomials "
        "a*x + x^(3q-2) over F_{q^2}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("verify", cmd_verify, help="exhaustive sweep: brute/hermite vs predicate")
    sp.add_argument("--max-q", type=int, default=classify.DEFAULT_Q_MAX, dest="max_q")
    sp.add_argument("--method", choices=["brute", "hermite", "both"], default="both")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--verdicts", action="store_true",
                    help="also stream one JSON line per (q, a)")

    sp = add("check", cmd_check, help="single (q, a) verdict")
    sp.add_argument("--q", required=True, help='base field as "p^e", e.g. 2^3')
    sp.add_argument("--a", required=True, type=int, help="element encoding (base-p integer)")

    sp = add("hermite-profile", cmd_hermite_profile,
             help="coefficient sums S(alpha) for a single (q, a)")
    sp.add_argument("--q", required=True)
    sp.add_argument("--a", required=True, type=int)

    sp = add("gpoly", cmd_gpoly, help="print the elimination polynomial g_alpha")
    sp.add_argument("--alpha", required=True, type=int)

    sp = add("resultant", cmd_resultant, help="resultant of two g polynomials")
    sp.add_argument("--left", type=int, default=2)
    sp.add_argument("--right", type=int, default=5)
    sp.add_argument("--factor", action="store_true")

    sp = add("gcdchain", cmd_gcdchain, help="gcd(g_2, g_5, g_8) mod p and evaluations")
    sp.add_argument("--p", required=True, type=int)

    sp = add("sporadic", cmd_sporadic, help="census of a values for a target q")
    sp.add_argument("--q", required=True, type=int)

    add("pipeline", cmd_pipeline, help="full elimination pipeline with fixture checks")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    t0 = time.perf_counter()
    code = args.func(args)
    print(f"[{time.perf_counter() - t0:.3f}s]", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
