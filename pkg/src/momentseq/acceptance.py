"""The twelve-item acceptance battery, shared by the test-suite and ``--seed-suite``.

Each check returns a :class:`CheckResult`; none of them raise on a failed
comparison, so a report always lists every item.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import analytic, combinatorics, contfrac, hankel, scan
from .contfrac import (
    CF_FAMILIES,
    JFraction,
    SFraction,
    aerate_series,
    contract,
    expand_to_sfrac,
    jfrac_binomial_shift,
    jfrac_expand,
    jfrac_extract,
    sfrac_expand,
    sfrac_extract,
    sfrac_to_aerated_jfrac,
)
from .exact import RatPolynomial
from .sequences import (
    apery_numbers,
    given,
    named_sequence,
    quarter_period_sign,
    secant_power_polys,
    subsequence,
)

EULER_PREFIX = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
SPRINGER_PREFIX = [1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523]

QUADRATURE_TOL = 1e-10
IDENTITY_TOL = 1e-9
SCAN_BOUND = 120


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.title} ({self.seconds:.2f}s): {self.detail}"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _check_sequences():
    e = [int(t) for t in named_sequence("euler", 11).terms]
    s = [int(t) for t in named_sequence("springer", 11).terms]
    direct = [sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1)) for n in range(3)]
    a = [int(t) for t in apery_numbers(3).terms]
    ok = e == EULER_PREFIX and s == SPRINGER_PREFIX and a == direct == [1, 5, 73]
    return ok, f"euler={e[-1]} springer={s[-1]} apery={a}"


def _check_hankel():
    d_e = hankel.hankel_det(named_sequence("euler", 5), 0, 3)
    d_s = hankel.hankel_det(named_sequence("springer", 6), 1, 3)
    d_7 = hankel.hankel_det(named_sequence("secant-over-factorial-squared", 13), 0, 7)
    ok = d_e == -1 and d_s == -96 and d_7 < 0
    return ok, f"D3(E)={d_e} D3^(1)(S)={d_s} D7(E2n/n!^2)~{float(d_7):.4e}"


def _expected_families():
    x = RatPolynomial.x()
    k6 = range(1, 7)
    return [
        ("secant", "s", "secant", 6, [Fraction(n * n) for n in k6], None),
        ("tangent", "s", "tangent", 6, [Fraction(n * (n + 1)) for n in k6], None),
        ("secpow", "s", "secpow", 5, [n * (x + (n - 1)) for n in range(1, 6)], None),
        ("springer-even", "s", "springer-even", 6,
         [Fraction((4 * k - 3) * (4 * k - 1)) if n % 2 else Fraction((4 * k) ** 2)
          for n in k6 for k in [(n + 1) // 2]], None),
        ("euler-shifted", "j", "euler-shifted", 6,
         [Fraction(n + 1) for n in range(7)], [Fraction(n * (n + 1), 2) for n in k6]),
        ("springer", "j", "springer", 6,
         [Fraction(2 * n + 1) for n in range(7)], [Fraction(2 * n * n) for n in k6]),
        ("euler-tilde-shifted", "j", "euler-tilde-shifted", 6,
         [Fraction(1, 2)] + [Fraction(0)] * 6, [Fraction(1, 16 * n * n - 4) for n in k6]),
        ("springer-odd", "j", "springer-odd", 6,
         [Fraction(32 * n * n + 32 * n + 11) for n in range(7)],
         [Fraction((4 * n - 1) * (4 * n) ** 2 * (4 * n + 1)) for n in k6]),
    ]


def _check_extraction():
    bad = []
    for label, kind, seq, k, first, second in _expected_families():
        if kind == "s":
            sf = sfrac_extract(named_sequence(seq, k + 1), k)
            ok = list(sf.alphas) == first
        else:
            jf = jfrac_extract(named_sequence(seq, 2 * k + 2), k)
            ok = list(jf.gammas) == first and list(jf.betas) == second
        if not ok:
            bad.append(label)
    return not bad, "all families recovered" if not bad else f"mismatch: {bad}"


def _check_contraction():
    s_alphas = CF_FAMILIES["euler-tilde-shifted-s"].build(6)
    jf = contract(s_alphas)
    ok_j = (list(jf.gammas) == [Fraction(1, 2), 0, 0]
            and list(jf.betas) == [Fraction(1, 12), Fraction(1, 60), Fraction(1, 140)])
    obstruction = expand_to_sfrac(CF_FAMILIES["euler-shifted"].build(4))
    ok_o = (isinstance(obstruction, contfrac.ContractionObstruction) and obstruction.index == 6
            and obstruction.partial_alphas[4] == 0)
    detail = f"contracted gammas={[str(g) for g in jf.gammas]}; obstruction at alpha_{getattr(obstruction, 'index', '?')}"
    return ok_j and ok_o, detail


def _check_binomial_shift():
    N = 12
    # Springer: aerate the secant S-fraction scaled by -4, then shift gamma by 1
    scaled = SFraction(1, [-4 * n * n for n in range(1, N + 1)])
    signed_springer = jfrac_binomial_shift(sfrac_to_aerated_jfrac(scaled), 1)
    got_s = list(jfrac_expand(signed_springer, N).coeffs)
    springer = named_sequence("springer", N + 1).terms
    want_s = [quarter_period_sign(n) * springer[n] for n in range(N + 1)]
    ok_s = got_s == want_s and all(g == 1 for g in signed_springer.gammas)
    # Euler: the signed J-fraction, checked against a binomial-shift round trip
    fam = CF_FAMILIES["euler-shifted-signed"].build(N)
    got_e = list(jfrac_expand(fam, N).coeffs)
    euler = named_sequence("euler", N + 2).terms
    want_e = [quarter_period_sign(n) * euler[n + 1] for n in range(N + 1)]
    back = jfrac_binomial_shift(jfrac_binomial_shift(fam, -1), 1)
    ok_e = got_e == want_e and back == fam
    return ok_s and ok_e, f"springer-signed ok={ok_s}, euler-signed ok={ok_e} through n={N}"


def _check_combinatorics():
    e = named_sequence("euler", 11).terms
    s = named_sequence("springer", 9).terms
    alt = all(combinatorics.alt_perm_count(n) == e[n] for n in range(11))
    snakes = all(combinatorics.snake_count(n) == s[n] for n in range(9))
    polys = secant_power_polys(6).terms
    records = True
    for n in range(11):
        rp = combinatorics.alt_records_poly(n).as_polynomial()
        if n % 2 == 0:
            want = polys[n // 2]
        else:
            shifted = polys[n // 2].coeffs
            want = RatPolynomial.x() * sum(
                (c * (1 + RatPolynomial.x()) ** i for i, c in enumerate(shifted)), RatPolynomial())
        records = records and rp == want
    return alt and snakes and records, f"alternating={alt} snakes={snakes} records={records}"


def _quadrature_cases():
    cases = []
    for name, d in analytic.DENSITIES.items():
        if name == "secpow-gamma":
            continue
        lo = 1 if name == "En-sinh" else d.min_n
        cases += [(name, n, None) for n in range(lo, 9)]
    cases += [("secpow-gamma", n, x) for x in (1, 2, 3) for n in range(9)]
    return cases


def _check_quadrature():
    failures = []
    worst = 0.0
    for name, n, x in _quadrature_cases():
        try:
            rec = analytic.moment_integral(analytic.DENSITIES[name], n, QUADRATURE_TOL, x=x)
        except Exception as exc:  # a failure to converge is a failed item, not a crash
            failures.append(f"{name}[{n}]: {exc}")
            continue
        worst = max(worst, rec.relative_error)
        if not rec.passed:
            failures.append(rec.label)
    return not failures, f"{len(_quadrature_cases())} integrals, worst rel err {worst:.2e}" + (
        f"; failed {failures}" if failures else "")


def _check_partial_fractions_lerch():
    worst = 0.0
    ok = True
    for n in range(6):
        for rec in analytic.lerch_euler_check(n, IDENTITY_TOL):
            worst = max(worst, rec.relative_error)
            ok = ok and rec.passed
    for n in range(1, 6):
        for fn, value in ((analytic.partial_frac_euler, analytic.euler_value),
                          (analytic.partial_frac_springer, analytic.springer_value)):
            pf = fn(n, 10 ** 5)
            target = float(value(n) / factorial(n))
            rel = abs(pf.corrected - target) / target
            worst = max(worst, rel)
            ok = ok and rel <= IDENTITY_TOL and abs(pf.value - target) <= pf.error_bound
    return ok, f"worst rel err {worst:.2e}"


def _check_asymptotics():
    details = []
    ok = True
    for seq in ("euler", "springer"):
        err10 = analytic.asymptotic_check(seq, 10)
        ratios = analytic.asymptotic_ratios(seq, 8, 14)
        ok = ok and err10 < 1e-3 and all(2.5 <= r <= 3.5 for r in ratios)
        details.append(f"{seq}: err(10)={err10:.2e} ratios in [{min(ratios):.3f}, {max(ratios):.3f}]")
    return ok, "; ".join(details)


def _check_scan():
    res = scan.scan_logconvexity(SCAN_BOUND, SCAN_BOUND, SCAN_BOUND, jobs="auto")
    return res.status == "all-hold", f"{res.checked} triples, {res.status}"


STIELTJES_DECLARED = ("secant", "tangent", "springer-even", "springer-odd",
                      "secant-over-factorial", "euler-tilde-odd")


def _check_positivity():
    problems = []
    for name in STIELTJES_DECLARED:
        s = named_sequence(name, 12)
        for m in (0, 1):
            if not hankel.psd_leading_minors(s, m, 5).ok:
                problems.append(f"{name}@{m}")
    expected_violations = [(named_sequence("euler-tilde-even", 10), 0, 5, "euler-tilde-even"),
                           (named_sequence("euler", 6), 0, 3, "euler"),
                           (named_sequence("springer", 6), 1, 3, "springer@1")]
    tilde = named_sequence("euler-tilde", 4 + 3 * 7 + 1)
    for n0 in (0, 2, 4):
        for j in (1, 2, 3):
            expected_violations.append((subsequence(tilde, n0, j, 7), 0, 4, f"tilde[{n0}::{j}]"))
    for s, m, nmax, label in expected_violations:
        if hankel.psd_leading_minors(s, m, nmax).ok:
            problems.append(f"no violation for {label}")
    return not problems, "all claims reproduced" if not problems else f"problems: {problems}"


def random_sfraction(rng: random.Random, k: int) -> SFraction:
    return SFraction(1, [Fraction(rng.randint(1, 30), rng.randint(1, 12)) for _ in range(k)])


def random_jfraction(rng: random.Random, k: int) -> JFraction:
    return JFraction(1, [Fraction(rng.randint(0, 30), rng.randint(1, 12)) for _ in range(k + 1)],
                     [Fraction(rng.randint(1, 30), rng.randint(1, 12)) for _ in range(k)])


def round_trip_failures(sf: SFraction = None, jf: JFraction = None) -> list:
    """Run every round-trip identity that applies; return descriptions of failures."""
    bad = []
    if sf is not None:
        k = len(sf.alphas)
        series = sfrac_expand(sf, k)
        if sfrac_extract(given("s", series.coeffs), k) != sf:
            bad.append("sfrac extract.expand")
        N = min(k, 12)
        if jfrac_expand(contract(sf), N).coeffs != sfrac_expand(sf, N).coeffs:
            bad.append("contraction consistency")
        if all(a != 0 for a in sf.alphas):
            back = expand_to_sfrac(contract(sf))
            if not isinstance(back, SFraction) or back.alphas != sf.alphas:
                bad.append("expand_to_sfrac.contract")
        aerated = jfrac_expand(sfrac_to_aerated_jfrac(sf), 2 * k).coeffs
        if aerated != aerate_series(series).coeffs:
            bad.append("aeration")
    if jf is not None:
        k = len(jf.betas)
        series = jfrac_expand(jf, 2 * k + 1)
        if jfrac_extract(given("j", series.coeffs), k) != JFraction(jf.alpha0, jf.gammas[: k + 1], jf.betas):
            bad.append("jfrac extract.expand")
    return bad


def _check_round_trips():
    failures = []
    for fam in CF_FAMILIES.values():
        poly = fam.name == "secpow"
        k = 5 if poly else 8
        if fam.kind == "S":
            bad = round_trip_failures(sf=fam.build(k if poly else 2 * k))
            bad += round_trip_failures(jf=contract(fam.build(2 * k + 1)))
        else:
            bad = round_trip_failures(jf=fam.build(k))
        failures += [f"{fam.name}: {b}" for b in bad]
    rng = random.Random(20180731)
    for i in range(200):
        k = rng.randint(1, 8)
        bad = round_trip_failures(sf=random_sfraction(rng, 2 * k)) + round_trip_failures(
            jf=random_jfraction(rng, k))
        failures += [f"random#{i}: {b}" for b in bad]
    return not failures, f"{len(CF_FAMILIES)} families + 200 random" + (
        f"; failed {failures[:5]}" if failures else "")


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "sequence fidelity", _check_sequences),
    (2, "Hankel fixtures", _check_hankel),
    (3, "continued-fraction extraction", _check_extraction),
    (4, "contraction identities", _check_contraction),
    (5, "binomial-shift pipeline", _check_binomial_shift),
    (6, "combinatorial oracles", _check_combinatorics),
    (7, "moment quadrature", _check_quadrature),
    (8, "partial-fraction and Lerch identities", _check_partial_fractions_lerch),
    (9, "asymptotics", _check_asymptotics),
    (10, "conjecture scan", _check_scan),
    (11, "positivity claims", _check_positivity),
    (12, "round-trip properties", _check_round_trips),
]


def run_criterion(number: int) -> CheckResult:
    _, title, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    return CheckResult(number, title, bool(passed), detail, time.perf_counter() - start)


def run_all() -> list:
    return [run_criterion(n) for n, _, _ in CRITERIA]
