"""Floating-point checks of the analytic moment representations.

Exact targets always come from :mod:`momentseq.sequences`; this module only
produces numbers to compare against them.  Quadrature is tanh-sinh
(``mpmath.quad``) on a finite interval whose cutoff is chosen from a
rigorous envelope of each integrand's tail.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

import mpmath as mp

from .errors import DomainError, NonPositiveTerm, QuadratureFailure
from .exact import format_exact, poly_eval
from .sequences import SequenceHandle, euler_numbers, secant_power_polys, springer_numbers

WORKING_DPS = 30
DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class VerificationRecord:
    label: str
    target: Fraction
    computed: float
    relative_error: float
    tolerance: float
    details: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.relative_error <= self.tolerance else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "target": format_exact(self.target),
            "computed": float_repr(self.computed),
            "relative_error": float_repr(self.relative_error),
            "tolerance": float_repr(self.tolerance),
            "status": self.status,
            **{k: float_repr(v) if isinstance(v, float) else v for k, v in self.details.items()},
        }


def float_repr(x: float) -> str:
    """Fixed 17-significant-digit rendering, so reports are byte-stable."""
    return format(float(x), ".17g")


def _record(label, target, computed, tol, **details) -> VerificationRecord:
    target = Fraction(target)
    computed = float(computed)
    if target == 0:
        err = abs(computed)
    else:
        err = abs(computed - float(target)) / abs(float(target))
    return VerificationRecord(label, target, computed, err, tol, details)


# ---------------------------------------------------------------------------
# exact targets


@lru_cache(maxsize=None)
def _euler(count: int) -> tuple:
    return euler_numbers(count).terms


@lru_cache(maxsize=None)
def _springer(count: int) -> tuple:
    return springer_numbers(count).terms


def euler_value(n: int) -> Fraction:
    return _euler(max(n + 1, 40))[n]


def springer_value(n: int) -> Fraction:
    return _springer(max(n + 1, 40))[n]


def secpow_value(n: int, x) -> Fraction:
    return poly_eval(secant_power_polys(n + 1).terms[n], x)


# ---------------------------------------------------------------------------
# densities


def _exp_tail(C, power, rate):
    """Bound for  int_Y^inf C y^(k + power) e^(-rate y) dy  as a function of (Y, k)."""

    def tail(Y, k):
        s = k + power + 1
        return C * mp.gammainc(s, rate * Y) / mp.mpf(rate) ** s

    return tail


def _gauss_tail(C, a):
    """Bound for  int_Y^inf C y^k e^(-a y^2) dy."""

    def tail(Y, k):
        s = mp.mpf(k + 1) / 2
        return C * mp.gammainc(s, a * Y * Y) / (2 * mp.mpf(a) ** s)

    return tail


def theta_like_kernel(y) -> mp.mpf:
    """sum_{k>=0} (-1)^k exp(-(k+1/2)^2 pi^2 y^2 / 2).

    The terms decrease in k, so each even-k term dominates its successor and
    the first omitted term bounds the truncation error.  Near y = 0 the sum
    needs O(1/y) terms; there the Euler-Boole expansion is used instead.
    """
    a = mp.pi ** 2 * y * y / 2
    if abs(y) < mp.mpf("0.01"):
        # 1/2 sum_j |E_2j| (a/4)^j / j!, truncated after j = 3 (error < a^4)
        b = a / 4
        return (1 + b + 5 * b ** 2 / 2 + 61 * b ** 3 / 6) / 2
    total = mp.mpf(0)
    k = 0
    eps = mp.mpf(10) ** (-WORKING_DPS)
    while True:
        term = mp.exp(-a * (k + mp.mpf(1) / 2) ** 2)
        if term < eps:
            return total
        total += term if k % 2 == 0 else -term
        k += 1


@dataclass(frozen=True)
class DensitySpec:
    """A weight w on its support with moments  int y^n w(y) dy = target(n).

    ``integrand(y, n, x)`` returns y^n w(y); ``tail(Y, n, x)`` bounds the
    integral of |integrand| beyond |y| = Y on each side used.
    """

    id: str
    integrand: Callable
    target: Callable
    support: tuple
    symmetry: str = "none"
    tail: Optional[Callable] = None
    min_n: int = 0
    description: str = ""


def _E2n_sech(y, n, x=None):
    return y ** (2 * n) * mp.sech(mp.pi * y / 2)


def _E2n1_csch(y, n, x=None):
    return y ** (2 * n) * y * mp.csch(mp.pi * y / 2)


def _En_sinh(y, n, x=None):
    return y ** n * mp.exp(mp.pi * y / 2) / mp.sinh(mp.pi * y)


def _En1_sinh(y, n, x=None):
    return y ** n * y * mp.exp(mp.pi * y / 2) / mp.sinh(mp.pi * y)


def _Sn_cosh(y, n, x=None):
    return y ** n * mp.exp(mp.pi * y / 4) / mp.cosh(mp.pi * y / 2) / (2 * mp.sqrt(2))


def _S2n_cosh(y, n, x=None):
    return y ** (2 * n) * mp.cosh(mp.pi * y / 4) / mp.cosh(mp.pi * y / 2) / mp.sqrt(2)


def _S2n1_sinh(y, n, x=None):
    return y ** (2 * n) * y * mp.sinh(mp.pi * y / 4) / mp.cosh(mp.pi * y / 2) / mp.sqrt(2)


def _beta_folded(u, n, x=None):
    # int_0^4 x^n / (pi sqrt(x (4-x))) dx folded onto [0, 2] so that both
    # endpoint singularities sit at u = 0 where u is represented exactly
    w = mp.sqrt(u * (4 - u))
    return (u ** n + (4 - u) ** n) / (mp.pi * w)


def _theta(y, n, x=None):
    return 2 ** (n + 1) / mp.sqrt(2 * mp.pi) * y ** (2 * n) * theta_like_kernel(y)


def _gamma_modulus(s, n, x):
    x = mp.mpf(x.numerator) / x.denominator
    g = mp.gamma((x + 1j * s) / 2)
    return 2 ** (x - 1) / (mp.pi * mp.gamma(x)) * s ** (2 * n) * (g.real ** 2 + g.imag ** 2)


def _gamma_tail(Y, n, x):
    # |Gamma(x/2 + i s/2)|^2 <= 2 * 2 pi (s/2)^(x-1) e^(-pi s/2) for large s (Stirling, factor 2 slack)
    xf = mp.mpf(x.numerator) / x.denominator
    C = 2 ** (xf - 1) / (mp.pi * mp.gamma(xf)) * 4 * mp.pi * 2 ** (1 - xf)
    return _exp_tail(C, xf - 1, mp.pi / 2)(Y, 2 * n)


_SQ2 = math.sqrt(2)
_EPS = 2.0 ** -52

DENSITIES = {
    d.id: d
    for d in (
        DensitySpec("E2n-sech", _E2n_sech, lambda n, x=None: euler_value(2 * n), ("half-line",),
                    "even", lambda Y, n, x=None: _exp_tail(2, 0, mp.pi / 2)(Y, 2 * n),
                    description="E_2n = int_0^inf y^2n sech(pi y/2) dy"),
        DensitySpec("E2n+1-csch", _E2n1_csch, lambda n, x=None: euler_value(2 * n + 1), ("half-line",),
                    "odd", lambda Y, n, x=None: _exp_tail(2.1, 1, mp.pi / 2)(Y, 2 * n),
                    description="E_2n+1 = int_0^inf y^2n y csch(pi y/2) dy"),
        DensitySpec("En-sinh", _En_sinh, lambda n, x=None: euler_value(n), ("real-line",), "none",
                    lambda Y, n, x=None: 2 * _exp_tail(2.1, 0, mp.pi / 2)(Y, n), min_n=1,
                    description="E_n = int y^n e^(pi y/2)/sinh(pi y) dy, n >= 1"),
        DensitySpec("En+1-sinh", _En1_sinh, lambda n, x=None: euler_value(n + 1), ("real-line",), "none",
                    lambda Y, n, x=None: 2 * _exp_tail(2.1, 1, mp.pi / 2)(Y, n),
                    description="E_n+1 = int y^n y e^(pi y/2)/sinh(pi y) dy"),
        DensitySpec("E2n/n!-theta", _theta, lambda n, x=None: euler_value(2 * n) / factorial(n),
                    ("real-line",), "even",
                    lambda Y, n, x=None: 2 * _gauss_tail(
                        2 ** (n + 1) / math.sqrt(2 * math.pi), mp.pi ** 2 / 8)(Y, 2 * n),
                    description="E_2n/n! via the alternating Gaussian (theta-like) density"),
        DensitySpec("Sn-cosh", _Sn_cosh, lambda n, x=None: springer_value(n), ("real-line",), "none",
                    lambda Y, n, x=None: 2 * _exp_tail(1 / _SQ2, 0, mp.pi / 4)(Y, n),
                    description="S_n = (1/2sqrt2) int y^n e^(pi y/4)/cosh(pi y/2) dy"),
        DensitySpec("S2n-cosh", _S2n_cosh, lambda n, x=None: springer_value(2 * n), ("half-line",),
                    "even", lambda Y, n, x=None: _exp_tail(_SQ2, 0, mp.pi / 4)(Y, 2 * n),
                    description="S_2n = (1/sqrt2) int_0^inf y^2n cosh(pi y/4)/cosh(pi y/2) dy"),
        DensitySpec("S2n+1-sinh", _S2n1_sinh, lambda n, x=None: springer_value(2 * n + 1), ("half-line",),
                    "odd", lambda Y, n, x=None: _exp_tail(_SQ2, 1, mp.pi / 4)(Y, 2 * n),
                    description="S_2n+1 = (1/sqrt2) int_0^inf y^2n y sinh(pi y/4)/cosh(pi y/2) dy"),
        DensitySpec("central-binomial", _beta_folded, lambda n, x=None: Fraction(comb(2 * n, n)),
                    ("interval", 0, 2), description="C(2n,n) = (1/pi) int_0^4 x^n (x(4-x))^(-1/2) dx"),
        DensitySpec("secpow-gamma", _gamma_modulus, lambda n, x: secpow_value(n, x), ("half-line",),
                    "none", _gamma_tail,
                    description="E_2n(x) = 2^(x-1)/(pi Gamma(x)) int_0^inf s^2n |Gamma((x+is)/2)|^2 ds"),
    )
}


def density(name: str) -> DensitySpec:
    try:
        return DENSITIES[name]
    except KeyError:
        raise ValueError(f"unknown density {name!r}; known: {', '.join(DENSITIES)}") from None


def _cutoff(d: DensitySpec, n: int, x, budget) -> mp.mpf:
    Y = mp.mpf(4)
    while d.tail(Y, n, x) > budget:
        Y *= 1.25
        if Y > 1e4:
            raise QuadratureFailure(f"{d.id}: no cutoff reaches tail budget {budget}")
    return Y


def moment_integral(d: DensitySpec, n: int, tol: float = DEFAULT_TOL, x=None) -> VerificationRecord:
    """Integrate y^n against the density and compare with the exact target."""
    if n < d.min_n:
        raise DomainError(f"{d.id} needs n >= {d.min_n} (n = 0 is a principal-value integral)")
    if x is not None:
        x = Fraction(x)
    target = d.target(n, x) if x is not None else d.target(n)
    with mp.workdps(WORKING_DPS):
        f = lambda y: d.integrand(y, n, x)
        tail = mp.mpf(0)
        kind = d.support[0]
        if kind == "interval":
            pts = [d.support[1], d.support[2]]
            Y = None
        else:
            Y = _cutoff(d, n, x, mp.mpf(tol) / 10 * abs(float(target)))
            tail = d.tail(Y, n, x)
            pts = [0, Y] if kind == "half-line" else [-Y, 0, Y]
        value, err = mp.quad(f, pts, error=True, maxdegree=10)
        value = float(value)
    estimate = float(err) + float(tail)
    if estimate > tol * abs(float(target)):
        raise QuadratureFailure(f"{d.id}, n={n}: error estimate {estimate:.3g} exceeds tolerance")
    details = {"density": d.id, "n": n, "error_estimate": estimate}
    if Y is not None:
        details["cutoff"] = float(Y)
    if x is not None:
        details["x"] = format_exact(x)
    return _record(f"{d.id}[n={n}]", target, value, tol, **details)


def secpow_gamma_moment(x, n: int, tol: float = DEFAULT_TOL) -> VerificationRecord:
    x = Fraction(x)
    if x <= 0:
        raise DomainError("x must be positive")
    return moment_integral(DENSITIES["secpow-gamma"], n, tol, x=x)


def gamma_kernel_audit(points=(0.5, 1.0, 3.0, 7.5, 15.0)) -> dict:
    """Compare |Gamma((x+is)/2)|^2 against closed forms at x = 1 and x = 2."""
    worst = 0.0
    with mp.workdps(WORKING_DPS):
        for s in points:
            s = mp.mpf(s)
            g1 = abs(mp.gamma((1 + 1j * s) / 2)) ** 2
            g2 = abs(mp.gamma((2 + 1j * s) / 2)) ** 2
            c1 = mp.pi / mp.cosh(mp.pi * s / 2)
            c2 = (mp.pi * s / 2) / mp.sinh(mp.pi * s / 2)
            worst = max(worst, float(abs(g1 / c1 - 1)), float(abs(g2 / c2 - 1)))
    return {"max_relative_deviation": worst, "points": list(points)}


# ---------------------------------------------------------------------------
# Lerch transcendent


def _cvz_alternating(term: Callable[[int], float], tol: float) -> float:
    """sum_{k>=0} (-1)^k term(k) for term a moment sequence (Cohen-Villegas-Zagier)."""
    n = max(4, math.ceil(math.log(4 / tol) / math.log(3 + math.sqrt(8))) + 2)
    d = (3 + math.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b, c, s = -1.0, -d, 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return s / d


_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510)]


def _hurwitz(s: float, a: float, tol: float) -> float:
    """sum_{k>=0} (k+a)^(-s): direct sum to N, then Euler-Maclaurin for the tail."""
    N = max(10, int(2 * s) + 10)
    head = math.fsum((k + a) ** -s for k in range(N))
    x = N + a
    tail = x ** (1 - s) / (s - 1) + x ** -s / 2
    rising = s  # s (s+1) ... (s+2j-2)
    for j, b in enumerate(_BERNOULLI, start=1):
        corr = float(b) / factorial(2 * j) * rising * x ** (-s - 2 * j + 1)
        tail += corr
        if abs(corr) < tol * 1e-3 * (head + tail):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return head + tail


def lerch_phi(z: int, s: float, a: float, tol: float = 1e-15) -> float:
    """Phi(z, s, a) = sum_k z^k / (k + a)^s for z in {-1, +1}."""
    if a <= 0 or tol <= 0:
        raise DomainError("need a > 0 and tol > 0")
    if z == 1:
        if s <= 1:
            raise DomainError("Phi(1, s, a) diverges for s <= 1")
        return _hurwitz(float(s), float(a), tol)
    if z == -1:
        if s <= 0:
            raise DomainError("need s > 0")
        return _cvz_alternating(lambda k: (k + a) ** -s, tol)
    raise DomainError("only z = -1 and z = +1 are supported")


def lerch_euler_check(n: int, tol: float = 1e-9) -> list:
    """E_2n/(2n)! = 2 Phi(-1,2n+1,1/2)/pi^(2n+1) and E_2n+1/(2n+1)! = 2 Phi(1,2n+2,1/2)/pi^(2n+2)."""
    even = 2 * lerch_phi(-1, 2 * n + 1, 0.5) / math.pi ** (2 * n + 1)
    odd = 2 * lerch_phi(1, 2 * n + 2, 0.5) / math.pi ** (2 * n + 2)
    return [
        _record(f"lerch-even[n={n}]", euler_value(2 * n) / factorial(2 * n), even, tol),
        _record(f"lerch-odd[n={n}]", euler_value(2 * n + 1) / factorial(2 * n + 1), odd, tol),
    ]


# ---------------------------------------------------------------------------
# partial fractions


@dataclass(frozen=True)
class PartialFractionSum:
    n: int
    K: int
    value: float  # the symmetric partial sum over |k| <= K
    tail_bound: float  # bound on the omitted terms
    rounding_bound: float  # bound on floating-point error in the summed terms
    corrected: float  # value plus the tail evaluated through Lerch/Hurwitz sums

    @property
    def error_bound(self) -> float:
        """Bound on |value - limit|."""
        return self.tail_bound + self.rounding_bound

    def to_json(self) -> dict:
        return {"n": self.n, "K": self.K, "value": float_repr(self.value),
                "tail_bound": float_repr(self.tail_bound),
                "error_bound": float_repr(self.error_bound), "corrected": float_repr(self.corrected)}


def partial_frac_euler(n: int, K: int) -> PartialFractionSum:
    """2 sum_{|k|<=K} (2/((4k+1)pi))^(n+1), which tends to E_n/n!."""
    if n < 1:
        raise DomainError("n = 0 needs the symmetric limit; use n >= 1")
    p = n + 1
    c = 2 / math.pi
    terms = [(c / (4 * k + 1)) ** p for k in range(-K, K + 1)]
    value = 2 * math.fsum(terms)
    rounding = 2 * (p + 2) * _EPS * math.fsum(abs(t) for t in terms)
    # |terms| beyond K are at most (c/(4k-1))^p on each side; compare with an integral
    tail_bound = 4 * c ** p * (4 * K + 3) ** (-n) / (4 * n) + 4 * c ** p * (4 * K + 3) ** (-p)
    # exact tails: sum_{k>K} (c/(4k+1))^p = (c/4)^p zeta(p, K+1+1/4), and the
    # negative side contributes (-1)^p (c/4)^p zeta(p, K+1-1/4)
    q = (c / 4) ** p
    tail = q * lerch_phi(1, p, K + 1.25) + (-1) ** p * q * lerch_phi(1, p, K + 0.75)
    return PartialFractionSum(n, K, value, tail_bound, rounding, value + 2 * tail)


def partial_frac_springer(n: int, K: int) -> PartialFractionSum:
    """(1/sqrt2) sum_{|k|<=K} (-1)^k ((k+1/4) pi)^(-(n+1)), which tends to S_n/n!."""
    if n < 1:
        raise DomainError("n = 0 needs the symmetric limit; use n >= 1")
    p = n + 1
    terms = [(-1) ** (k % 2) * ((k + 0.25) * math.pi) ** -p for k in range(-K, K + 1)]
    value = math.fsum(terms) / _SQ2
    rounding = (p + 3) * _EPS * math.fsum(abs(t) for t in terms)
    # alternating tails with decreasing magnitudes: bounded by their first terms
    tail_bound = (((K + 1.25) * math.pi) ** -p + ((K + 0.75) * math.pi) ** -p) / _SQ2
    sign = -1 if (K + 1) % 2 else 1
    pi_p = math.pi ** -p
    right = sign * pi_p * lerch_phi(-1, p, K + 1.25)
    left = sign * (-1) ** p * pi_p * lerch_phi(-1, p, K + 0.75)
    return PartialFractionSum(n, K, value, tail_bound, rounding, value + (right + left) / _SQ2)


# ---------------------------------------------------------------------------
# asymptotics


def _leading(seq: str, n: int):
    if seq == "euler":
        return 4 / mp.pi * (2 / mp.pi) ** n * mp.factorial(n)
    if seq == "springer":
        return 2 * mp.sqrt(2) / mp.pi * (4 / mp.pi) ** n * mp.factorial(n)
    raise ValueError("seq must be 'euler' or 'springer'")


def asymptotic_check(seq: str, n: int) -> float:
    """|a_n - leading term| / a_n, evaluated at 60 digits."""
    if n < 1:
        raise DomainError("n must be positive")
    exact = euler_value(n) if seq == "euler" else springer_value(n)
    with mp.workdps(60):
        a = mp.mpf(exact.numerator)
        return float(abs(a - _leading(seq, n)) / a)


def asymptotic_ratios(seq: str, n_from: int, n_to: int) -> list:
    """err(n) / err(n+1) for n_from <= n < n_to."""
    errs = [asymptotic_check(seq, n) for n in range(n_from, n_to + 1)]
    return [errs[i] / errs[i + 1] for i in range(len(errs) - 1)]


# ---------------------------------------------------------------------------
# Carleman diagnostic


def _log(value) -> float:
    value = Fraction(value)
    return math.log(value.numerator) - math.log(value.denominator)


def carleman_diagnostic(s: SequenceHandle, N: int) -> dict:
    """Partial sums of Carleman's series and a growth fit  a_n ~ A B^n n!.

    Diagnostic only: finite partial sums can suggest, never certify, divergence.
    """
    s.require(N + 1, "Carleman diagnostic")
    for i, t in enumerate(s.terms[: N + 1]):
        if t <= 0:
            raise NonPositiveTerm(i, t)
    logs = [_log(t) for t in s.terms[: N + 1]]
    stieltjes, acc = [], 0.0
    for n in range(1, N + 1):
        acc += math.exp(-logs[n] / (2 * n))
        stieltjes.append(acc)
    hamburger, acc = [], 0.0
    for n in range(1, N // 2 + 1):
        acc += math.exp(-logs[2 * n] / (2 * n))
        hamburger.append(acc)
    ns = list(range(1, N + 1))
    ys = [logs[n] - math.lgamma(n + 1) for n in ns]
    slope, intercept = statistics.linear_regression(ns, ys)
    return {
        "diagnostic_only": True,
        "N": N,
        "stieltjes_partial_sums": stieltjes,
        "hamburger_partial_sums": hamburger,
        "fit": {"A": math.exp(intercept), "B": math.exp(slope)},
    }
