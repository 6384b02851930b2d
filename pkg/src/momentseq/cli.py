"""Command-line front end: every subcommand prints one JSON report.

Exit codes: 0 success, 1 a mathematical violation or failed verification,
2 a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone
from math import factorial

from . import __version__, analytic, combinatorics, contfrac, hankel, scan
from .errors import MomentSeqError
from .exact import format_exact, parse_exact
from .sequences import NAMED_SEQUENCES, given, named_sequence

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def parse_range(text: str) -> list:
    """"5" -> [5]; "0..8" -> [0, ..., 8]; "1,3,5" -> [1, 3, 5]."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N, A..B or A,B,C") from None


def _values(text: str) -> list:
    return [parse_exact(v.strip()) for v in text.split(",") if v.strip()]


def _sequence(args, count: int):
    if getattr(args, "values", None):
        return given("values", _values(args.values))
    if not args.seq:
        raise InputError("give --seq NAME or --values a0,a1,...")
    try:
        return named_sequence(args.seq, count)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (payload, ok)


def cmd_gen(args):
    s = _sequence(args, args.count)
    return s.to_json(), True


def cmd_hankel(args):
    m, n = args.shift, args.size
    if args.psd:
        s = _sequence(args, m + 2 * n)
        rep = hankel.psd_leading_minors(s, m, n)
        return {"m": m, "nmax": n, **rep.to_json()}, rep.ok
    if args.tp:
        s = _sequence(args, 2 * args.window)
        rep = hankel.total_positivity(s, args.window, args.max_order)
        return rep.to_json(), rep.ok
    if args.pf:
        s = _sequence(args, args.window)
        rep = hankel.toeplitz_pf_check(s, args.window, args.max_order, args.strict)
        return rep.to_json(), rep.ok
    if args.log_shape:
        s = _sequence(args, max(args.count, 3))
        return {"signs": hankel.log_shape(s)}, True
    if args.table:
        s = _sequence(args, args.m_max + 2 * n)
        table = hankel.hankel_table(s, range(args.m_max + 1), n)
        return {"determinants": {str(k): [format_exact(d) for d in v] for k, v in table.items()}}, True
    s = _sequence(args, m + 2 * n)
    return {"m": m, "n": n, "determinant": format_exact(hankel.hankel_det(s, m, n))}, True


def _fraction_from_args(args, kind):
    if args.family:
        fam = contfrac.cf_family(args.family)
        if fam.kind.lower() != kind:
            raise InputError(f"family {fam.name} is a {fam.kind}-fraction")
        return fam.build(args.depth)
    alpha0 = parse_exact(args.alpha0)
    if kind == "s":
        return contfrac.SFraction(alpha0, _values(args.alphas or ""))
    return contfrac.JFraction(alpha0, _values(args.gammas or ""), _values(args.betas or ""))


def _kind_of(args):
    if args.family:
        return contfrac.cf_family(args.family).kind.lower()
    return args.kind


def cmd_cf(args):
    verb = args.verb
    if verb == "extract":
        k = args.terms
        if args.kind == "s":
            cf = contfrac.sfrac_extract(_sequence(args, k + 1), k)
        else:
            cf = contfrac.jfrac_extract(_sequence(args, 2 * k + 2), k)
        return cf.to_json(), True
    if verb == "expand":
        kind = _kind_of(args)
        cf = _fraction_from_args(args, kind)
        expand = contfrac.sfrac_expand if kind == "s" else contfrac.jfrac_expand
        return {"fraction": cf.to_json(), "series": format_exact(expand(cf, args.order))}, True
    if verb == "contract":
        sf = _fraction_from_args(args, "s")
        return contfrac.contract(sf).to_json(), True
    if verb == "invert-contraction":
        jf = _fraction_from_args(args, "j")
        out = contfrac.expand_to_sfrac(jf)
        status = "obstruction" if isinstance(out, contfrac.ContractionObstruction) else "solved"
        return {"status": status, **out.to_json()}, True
    if verb == "shift":
        jf = _fraction_from_args(args, "j")
        return contfrac.jfrac_binomial_shift(jf, parse_exact(args.c)).to_json(), True
    if verb == "aerate":
        sf = _fraction_from_args(args, "s")
        return contfrac.sfrac_to_aerated_jfrac(sf).to_json(), True
    if verb == "audit":
        names = [args.family] if args.family else sorted(contfrac.CF_FAMILIES)
        rows = [contfrac.positivity_audit(contfrac.cf_family(n), args.depth) for n in names]
        return {"audits": rows}, all(r["holds"] for r in rows)
    raise InputError(f"unknown cf verb {verb}")


def cmd_enumerate(args):
    rows = []
    for n in args.n:
        if args.kind == "alternating":
            rows.append({"n": n, "count": combinatorics.alt_perm_count(n, args.bound or 10)})
        elif args.kind == "snakes":
            rows.append({"n": n, "count": combinatorics.snake_count(n, args.bound or 8)})
        else:
            rp = combinatorics.alt_records_poly(n, args.bound or 10)
            rows.append({"n": n, "count": rp.total(), "record_polynomial": list(rp.coeffs)})
    return {"kind": args.kind, "rows": rows}, True


def cmd_verify(args):
    what = args.what
    if what == "integral":
        d = analytic.density(args.density)
        x = parse_exact(args.x) if args.x else None
        recs = [analytic.moment_integral(d, n, args.tol, x=x) for n in args.n]
        return {"records": [r.to_json() for r in recs]}, all(r.passed for r in recs)
    if what == "lerch":
        recs = [r for n in args.n for r in analytic.lerch_euler_check(n, args.tol)]
        return {"records": [r.to_json() for r in recs]}, all(r.passed for r in recs)
    if what == "partial-fractions":
        fn = analytic.partial_frac_euler if args.seq == "euler" else analytic.partial_frac_springer
        value = analytic.euler_value if args.seq == "euler" else analytic.springer_value
        rows, ok = [], True
        for n in args.n:
            pf = fn(n, args.K)
            target = value(n) / factorial(n)
            rec = analytic._record(f"{args.seq}-partial-fraction[n={n}]", target, pf.corrected, args.tol)
            within = abs(pf.value - float(target)) <= pf.error_bound
            ok = ok and rec.passed and within
            rows.append({**pf.to_json(), **rec.to_json(), "raw_within_bound": within})
        return {"records": rows}, ok
    if what == "asymptotic":
        ns = args.n
        errs = {str(n): analytic.float_repr(analytic.asymptotic_check(args.seq, n)) for n in ns}
        ratios = [analytic.float_repr(r) for r in analytic.asymptotic_ratios(args.seq, ns[0], ns[-1])] \
            if len(ns) > 1 else []
        return {"seq": args.seq, "relative_errors": errs, "ratios": ratios}, True
    if what == "carleman":
        s = _sequence(args, args.N + 1)
        rep = analytic.carleman_diagnostic(s, args.N)
        rep["stieltjes_partial_sums"] = [analytic.float_repr(v) for v in rep["stieltjes_partial_sums"]]
        rep["hamburger_partial_sums"] = [analytic.float_repr(v) for v in rep["hamburger_partial_sums"]]
        rep["fit"] = {k: analytic.float_repr(v) for k, v in rep["fit"].items()}
        return rep, True
    raise InputError(f"unknown verify target {what}")


def cmd_scan(args):
    if args.what == "logconvexity":
        top = args.max
        res = scan.scan_logconvexity(args.n_max or top, args.j_max or top, args.k_max or top, args.jobs)
        return res.to_json(), res.status == "all-hold"
    survey = scan.hankel_sign_survey(args.m_max, args.n_max)
    survey["signs"] = {str(k): v for k, v in survey["signs"].items()}
    for key in ("even_rows_have_negative", "odd_rows_positive"):
        survey[key] = {str(k): v for k, v in survey[key].items()}
    return survey, survey["ok"]


def run_seed_suite(args):
    from .acceptance import run_all

    results = run_all()
    return {"criteria": [r.to_json() for r in results]}, all(r.passed for r in results)


# ---------------------------------------------------------------------------
# parser


def _add_seq(p):
    p.add_argument("--seq", choices=sorted(NAMED_SEQUENCES), help="named sequence")
    p.add_argument("--values", help="explicit terms, comma separated (p/q allowed)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="momentseq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"momentseq {__version__}")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--jobs", default="auto", help="worker processes for scans (default: auto)")
    parser.add_argument("--seed-suite", action="store_true", help="run the full acceptance battery")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("gen", help="generate a named sequence")
    _add_seq(p)
    p.add_argument("--count", type=int, default=11)
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("hankel", help="Hankel determinants and positivity tests")
    _add_seq(p)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--size", type=int, default=3)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--det", action="store_true", help="exact determinant (default)")
    mode.add_argument("--psd", action="store_true", help="leading principal minors up to --size")
    mode.add_argument("--tp", action="store_true", help="minors of the top-left window")
    mode.add_argument("--pf", action="store_true", help="Toeplitz (Polya frequency) minors")
    mode.add_argument("--log-shape", action="store_true", help="signs of a_n a_n+2 - a_n+1^2")
    mode.add_argument("--table", action="store_true", help="determinants for shifts 0..--m-max")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--max-order", type=int, default=2)
    p.add_argument("--strict", action="store_true", help="with --pf, require strict positivity on or above the diagonal")
    p.add_argument("--count", type=int, default=12, help="terms for --log-shape")
    p.add_argument("--m-max", type=int, default=4)
    p.set_defaults(handler=cmd_hankel)

    p = sub.add_parser("cf", help="continued fractions")
    p.add_argument("verb", choices=("expand", "extract", "contract", "invert-contraction", "shift",
                                    "aerate", "audit"))
    _add_seq(p)
    p.add_argument("--kind", choices=("s", "j"), default="s")
    p.add_argument("--family", choices=sorted(contfrac.CF_FAMILIES))
    p.add_argument("--terms", type=int, default=6, help="extraction depth k")
    p.add_argument("--depth", type=int, default=6, help="levels built from a --family")
    p.add_argument("--order", type=int, default=10, help="series order for expand")
    p.add_argument("--alpha0", default="1")
    p.add_argument("--alphas")
    p.add_argument("--gammas")
    p.add_argument("--betas")
    p.add_argument("--c", default="1", help="binomial shift parameter")
    p.set_defaults(handler=cmd_cf)

    p = sub.add_parser("enumerate", help="brute-force permutation counts")
    p.add_argument("kind", choices=("alternating", "records", "snakes"))
    p.add_argument("--n", type=parse_range, default=parse_range("0..8"))
    p.add_argument("--bound", type=int, help="override the enumeration bound")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("verify", help="numerical checks of analytic identities")
    p.add_argument("what", choices=("integral", "lerch", "partial-fractions", "asymptotic", "carleman"))
    p.add_argument("--density", default="E2n-sech", choices=list(analytic.DENSITIES))
    p.add_argument("--n", type=parse_range, default=parse_range("1..5"))
    p.add_argument("--x", help="parameter for the secpow-gamma density")
    p.add_argument("--tol", type=float, default=analytic.DEFAULT_TOL)
    p.add_argument("--seq", default="euler")
    p.add_argument("--values")
    p.add_argument("--K", type=int, default=10 ** 5)
    p.add_argument("--N", type=int, default=50)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("scan", help="exact scans")
    p.add_argument("what", choices=("logconvexity", "hankel-signs"))
    p.add_argument("--max", type=int, default=120)
    p.add_argument("--n-max", type=int)
    p.add_argument("--j-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--m-max", type=int, default=8)
    p.set_defaults(handler=cmd_scan)
    return parser


def _normalized(args) -> dict:
    skip = {"handler"}
    return {k: (v if isinstance(v, (int, float, str, bool, list, type(None))) else str(v))
            for k, v in sorted(vars(args).items()) if k not in skip}


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    results = report["results"]
    if fmt == "text":
        lines = [f"status: {report['status']}"]
        for key, value in results.items():
            lines.append(f"{key}: {value if not isinstance(value, (list, dict)) else json.dumps(value)}")
        return "\n".join(lines)
    buf = io.StringIO()
    writer = csv.writer(buf)
    rows = next((v for v in results.values() if isinstance(v, list) and v and isinstance(v[0], dict)), None)
    if rows:
        header = sorted({k for row in rows for k in row})
        writer.writerow(header)
        for row in rows:
            writer.writerow([json.dumps(row[k]) if isinstance(row.get(k), (list, dict)) else row.get(k, "")
                             for k in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in results.items():
            writer.writerow([key, json.dumps(value) if isinstance(value, (list, dict)) else value])
    return buf.getvalue().rstrip("\n")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_suite:
        handler, command = run_seed_suite, "seed-suite"
    elif args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    else:
        handler, command = args.handler, args.command
    try:
        payload, ok = handler(args)
    except (InputError, MomentSeqError, ValueError) as exc:
        print(f"momentseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "tool": "momentseq",
        "version": __version__,
        "command": command,
        "parameters": _normalized(args),
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "status": "pass" if ok else "violation",
        "results": payload,
    }
    print(_render(report, args.format), file=stdout)
    return EXIT_OK if ok else EXIT_VIOLATION


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
