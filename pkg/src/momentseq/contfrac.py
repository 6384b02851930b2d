"""Stieltjes- and Jacobi-type continued fractions over exact rings.

Conventions, with ``t`` the series variable::

    S-fraction:  alpha0 / (1 - alpha_1 t / (1 - alpha_2 t / (1 - ...)))
    J-fraction:  alpha0 / (1 - gamma_0 t - beta_1 t^2 / (1 - gamma_1 t - beta_2 t^2 / ...))

Coefficients may be :class:`~fractions.Fraction` or
:class:`~momentseq.exact.RatPolynomial`.  Expansion counts weighted
Dyck/Motzkin paths, so it never divides and works in any ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import (
    Breakdown,
    InsufficientCoefficients,
    SingularHankel,
    VerificationFailure,
)
from .exact import RatPolynomial, TruncatedSeries, as_rational, exact_div, format_exact, series_reciprocal
from .hankel import hankel_det
from .sequences import SequenceHandle, binomial_transform_terms


def _ring(value):
    return value if isinstance(value, RatPolynomial) else as_rational(value)


@dataclass(frozen=True)
class SFraction:
    alpha0: object
    alphas: tuple

    def __init__(self, alpha0, alphas=()):
        object.__setattr__(self, "alpha0", _ring(alpha0))
        object.__setattr__(self, "alphas", tuple(_ring(a) for a in alphas))

    def alpha(self, n: int):
        """alpha_n for n >= 1."""
        return self.alphas[n - 1]

    def to_json(self) -> dict:
        return {
            "kind": "S",
            "alpha0": format_exact(self.alpha0),
            "alphas": [format_exact(a) for a in self.alphas],
        }


@dataclass(frozen=True)
class JFraction:
    """gammas = (gamma_0, ..., gamma_k); betas = (beta_1, ...) of length k or k + 1."""

    alpha0: object
    gammas: tuple
    betas: tuple

    def __init__(self, alpha0, gammas=(), betas=()):
        gammas = tuple(_ring(g) for g in gammas)
        betas = tuple(_ring(b) for b in betas)
        if len(betas) not in (len(gammas), len(gammas) - 1):
            raise ValueError(
                f"{len(gammas)} gammas need {max(len(gammas) - 1, 0)} or {len(gammas)} betas, got {len(betas)}"
            )
        object.__setattr__(self, "alpha0", _ring(alpha0))
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas", betas)

    def beta(self, n: int):
        return self.betas[n - 1]

    @property
    def determined_order(self) -> int:
        """Largest series index fixed by the stored coefficients."""
        return min(2 * len(self.gammas), 2 * len(self.betas) + 1)

    def to_json(self) -> dict:
        return {
            "kind": "J",
            "alpha0": format_exact(self.alpha0),
            "gammas": [format_exact(g) for g in self.gammas],
            "betas": [format_exact(b) for b in self.betas],
        }


@dataclass(frozen=True)
class ContractionObstruction:
    """No S-fraction contracts to the given J-fraction: solving for ``alpha_index`` fails."""

    index: int
    partial_alphas: tuple
    reason: str

    def to_json(self) -> dict:
        return {
            "obstruction_index": self.index,
            "partial_alphas": [format_exact(a) for a in self.partial_alphas],
            "reason": self.reason,
        }


# ---------------------------------------------------------------------------
# expansion


def _coeff(seq, i, zero, strict, needed):
    if i < len(seq):
        return seq[i]
    if strict:
        raise InsufficientCoefficients(needed, len(seq))
    return zero


def _path_sum(N, alpha0, level, down, max_height):
    """Series coefficients 0..N of sum over Motzkin paths of length n.

    ``level(h)`` weights a flat step at height h and ``down(h)`` a step
    from h to h-1; up steps have weight 1.
    """
    zero = alpha0 * 0
    dp = [alpha0] + [zero] * max_height
    out = [alpha0]
    for n in range(1, N + 1):
        nxt = [zero] * (max_height + 1)
        top = min(n, max_height)
        for h in range(top + 1):
            acc = zero
            if h >= 1 and dp[h - 1] != 0:
                acc = acc + dp[h - 1]
            if dp[h] != 0:
                w = level(h)
                if w != 0:
                    acc = acc + w * dp[h]
            if h + 1 <= max_height and dp[h + 1] != 0:
                w = down(h + 1)
                if w != 0:
                    acc = acc + w * dp[h + 1]
            nxt[h] = acc
        dp = nxt
        out.append(dp[0])
    return out


def sfrac_expand(sf: SFraction, N: int, strict: bool = False) -> TruncatedSeries:
    """Series coefficients 0..N of the S-fraction.

    Coefficient n uses alpha_1..alpha_n only.  Missing alphas count as zero
    (the finite truncation) unless ``strict`` is set.
    """
    if strict and len(sf.alphas) < N:
        raise InsufficientCoefficients(N, len(sf.alphas))
    zero = sf.alpha0 * 0
    # an S-fraction in t is the even part of the J-fraction with gamma = 0 in sqrt(t)
    full = _path_sum(
        2 * N, sf.alpha0, lambda h: zero,
        lambda h: _coeff(sf.alphas, h - 1, zero, False, N), N,
    )
    return TruncatedSeries(full[0::2])


def jfrac_expand(jf: JFraction, N: int, strict: bool = False) -> TruncatedSeries:
    """Series coefficients 0..N of the J-fraction (missing coefficients count as zero)."""
    if strict and jf.determined_order < N:
        raise InsufficientCoefficients(N, jf.determined_order)
    zero = jf.alpha0 * 0
    coeffs = _path_sum(
        N, jf.alpha0,
        lambda h: _coeff(jf.gammas, h, zero, False, 0),
        lambda h: _coeff(jf.betas, h - 1, zero, False, 0),
        N // 2 + 1,
    )
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# extraction


def _series_div_scalar(f: TruncatedSeries, c) -> TruncatedSeries:
    return f.map(lambda a: exact_div(a, c))


def sfrac_extract(s: SequenceHandle, k: int) -> SFraction:
    """alpha_0..alpha_k from a_0..a_k by repeatedly peeling ``f -> (1 - 1/f)/t``.

    A vanishing alpha followed by a nonzero remainder means no S-fraction
    exists at that depth and raises :class:`Breakdown`.  A vanishing
    remainder means the fraction terminates; later alphas are reported as 0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    s.require(k + 1, f"S-fraction of depth {k}")
    a = s.terms[: k + 1]
    alpha0 = a[0]
    if alpha0 == 0:
        raise Breakdown(0)
    g = _series_div_scalar(TruncatedSeries(a), alpha0)
    alphas = []
    for level in range(1, k + 1):
        h = (1 - series_reciprocal(g)).shift_down()
        lead = h[0]
        if lead == 0:
            if any(c != 0 for c in h.coeffs):
                raise Breakdown(level)
            alphas.extend([lead] * (k - level + 1))
            break
        alphas.append(lead)
        if level < k:
            g = _series_div_scalar(h, lead)
    return SFraction(alpha0, alphas)


def _lin(p, q, c):
    """Coefficient lists: p + c*q."""
    n = max(len(p), len(q))
    zero = (p[0] if p else q[0]) * 0
    out = []
    for i in range(n):
        x = p[i] if i < len(p) else zero
        if i < len(q):
            x = x + c * q[i]
        out.append(x)
    return out


def _functional(moments, p, weight_shift=0):
    """L(x^shift * p(x)) with L(x^n) = moments[n]."""
    acc = moments[0] * 0
    for i, c in enumerate(p):
        if c != 0:
            acc = acc + c * moments[i + weight_shift]
    return acc


def _square(p):
    zero = p[0] * 0
    out = [zero] * (2 * len(p) - 1)
    for i, x in enumerate(p):
        if x == 0:
            continue
        for j, y in enumerate(p):
            if y != 0:
                out[i + j] = out[i + j] + x * y
    return out


def jfrac_extract(s: SequenceHandle, k: int, cross_check: bool = True) -> JFraction:
    """gamma_0..gamma_k and beta_1..beta_k via monic orthogonal polynomials.

    With L(x^n) = a_n and P_{n+1} = (x - gamma_n) P_n - beta_n P_{n-1}:
    gamma_n = L(x P_n^2) / L(P_n^2) and beta_n = L(P_n^2) / L(P_{n-1}^2).
    gamma_k reads a_{2k+1}, so 2k+2 terms are needed.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    s.require(2 * k + 2, f"J-fraction of depth {k}")
    mom = s.terms[: 2 * k + 2]
    one = mom[0] * 0 + 1
    zero = mom[0] * 0
    prev, cur = [], [one]
    norm_prev = None
    gammas, betas = [], []
    for n in range(k + 1):
        norm = _functional(mom, _square(cur))
        if norm == 0:
            raise SingularHankel(n + 1)
        gamma = exact_div(_functional(mom, _square(cur), 1), norm)
        gammas.append(gamma)
        if n >= 1:
            betas.append(exact_div(norm, norm_prev))
        if n == k:
            break
        beta = betas[-1] if n >= 1 else zero
        nxt = [zero] + cur  # x * P_n
        nxt = _lin(nxt, cur, -gamma)
        if prev:
            nxt = _lin(nxt, prev, -beta)
        prev, cur, norm_prev = cur, nxt, norm
    jf = JFraction(mom[0], gammas, betas)
    if cross_check:
        _check_extraction(s, jf, k)
    return jf


def _check_extraction(s: SequenceHandle, jf: JFraction, k: int):
    got = jfrac_expand(jf, 2 * k + 1).coeffs
    if tuple(got) != tuple(s.terms[: 2 * k + 2]):
        raise VerificationFailure("J-fraction does not reproduce its input moments")
    if k > 4:
        return
    # beta_n = Delta_{n+1} Delta_{n-1} / Delta_n^2
    dets = [1] + [hankel_det(s, 0, n, cross_check=False) for n in range(1, k + 2)]
    for n in range(1, k + 1):
        expected = exact_div(dets[n + 1] * dets[n - 1], dets[n] * dets[n])
        if expected != jf.beta(n):
            raise VerificationFailure(f"beta_{n} disagrees with the Hankel determinant ratio")


# ---------------------------------------------------------------------------
# contraction


def contract(sf: SFraction) -> JFraction:
    """Even contraction: gamma_0 = alpha_1, gamma_n = alpha_2n + alpha_2n+1, beta_n = alpha_2n-1 alpha_2n."""
    a = sf.alphas
    m = len(a)
    gammas = []
    if m >= 1:
        gammas.append(a[0])
    n = 1
    while 2 * n + 1 <= m:
        gammas.append(a[2 * n - 1] + a[2 * n])
        n += 1
    betas = [a[2 * n - 2] * a[2 * n - 1] for n in range(1, m // 2 + 1)]
    return JFraction(sf.alpha0, gammas, betas)


def expand_to_sfrac(jf: JFraction) -> Union[SFraction, ContractionObstruction]:
    """Solve the contraction equations for the alphas, one at a time.

    alpha_1 = gamma_0, alpha_2n = beta_n / alpha_2n-1, alpha_2n+1 = gamma_n - alpha_2n.
    Division of a nonzero beta by a zero alpha is an obstruction.  When both
    vanish the alpha is not determined and 0 is chosen.
    """
    alphas = []
    if not jf.gammas:
        return SFraction(jf.alpha0, ())
    alphas.append(jf.gammas[0])
    for n in range(1, len(jf.betas) + 1):
        beta, prev = jf.beta(n), alphas[-1]
        if prev == 0:
            if beta != 0:
                return ContractionObstruction(2 * n, tuple(alphas), "zero divisor with nonzero beta")
            even = beta
        else:
            try:
                even = exact_div(beta, prev)
            except ArithmeticError:
                return ContractionObstruction(2 * n, tuple(alphas), "quotient leaves the coefficient ring")
        alphas.append(even)
        if n < len(jf.gammas):
            alphas.append(jf.gammas[n] - even)
    return SFraction(jf.alpha0, alphas)


def jfrac_binomial_shift(jf: JFraction, c, verify: bool = True) -> JFraction:
    """gamma_n -> gamma_n + c; the expansion undergoes the binomial transform with parameter c."""
    c = as_rational(c)
    shifted = JFraction(jf.alpha0, [g + c for g in jf.gammas], jf.betas)
    if verify:
        N = jf.determined_order
        lhs = list(jfrac_expand(shifted, N).coeffs)
        rhs = binomial_transform_terms(list(jfrac_expand(jf, N).coeffs), c)
        if lhs != rhs:
            raise VerificationFailure("binomial shift does not match the binomial transform")
    return shifted


def sfrac_to_aerated_jfrac(sf: SFraction) -> JFraction:
    """J-fraction of sum a_n t^{2n}: gamma_n = 0, beta_n = alpha_n."""
    zero = sf.alpha0 * 0
    return JFraction(sf.alpha0, [zero] * len(sf.alphas), sf.alphas)


def aerate_series(f: TruncatedSeries) -> TruncatedSeries:
    out = []
    for i, c in enumerate(f.coeffs):
        if i:
            out.append(c * 0)
        out.append(c)
    return TruncatedSeries(out)


# ---------------------------------------------------------------------------
# named coefficient families


@dataclass(frozen=True)
class CFFamily:
    name: str
    kind: str  # "S" or "J"
    alpha0: object
    gamma: Optional[Callable[[int], object]] = None  # n >= 0
    beta: Optional[Callable[[int], object]] = None  # n >= 1
    alpha: Optional[Callable[[int], object]] = None  # n >= 1
    sequence: Optional[str] = None  # named sequence whose generating function this is
    positivity: str = ""  # claimed sign pattern of the coefficients
    description: str = ""

    def build(self, k: int):
        """S: alpha_1..alpha_k.  J: gamma_0..gamma_k and beta_1..beta_k."""
        if self.kind == "S":
            return SFraction(self.alpha0, [self.alpha(n) for n in range(1, k + 1)])
        return JFraction(
            self.alpha0, [self.gamma(n) for n in range(k + 1)], [self.beta(n) for n in range(1, k + 1)]
        )


def _x_poly(a, b):
    return RatPolynomial((a, b))


def _euler_signed_beta(n: int) -> Fraction:
    k = (n + 1) // 2
    return Fraction(-k * (4 * k - 1)) if n % 2 else Fraction(-k * (4 * k + 1))


def _lambert_alpha(n):
    return Fraction(1, 4 * n * n - 1)


def _tilde_shifted_alpha(n):
    k = (n + 1) // 2
    sign = 1 if k % 2 else -1
    return Fraction(sign, 4 * k - 2) if n % 2 else Fraction(sign, 4 * k + 2)


def _springer_even_alpha(n):
    k = (n + 1) // 2
    return Fraction((4 * k - 3) * (4 * k - 1)) if n % 2 else Fraction((4 * k) ** 2)


CF_FAMILIES = {
    f.name: f
    for f in (
        CFFamily("secant", "S", Fraction(1), alpha=lambda n: Fraction(n * n),
                 sequence="secant", positivity="alpha>=0",
                 description="sum E_2n t^n, alpha_n = n^2"),
        CFFamily("tangent", "S", Fraction(1), alpha=lambda n: Fraction(n * (n + 1)),
                 sequence="tangent", positivity="alpha>=0",
                 description="sum E_2n+1 t^n, alpha_n = n(n+1)"),
        CFFamily("lambert", "S", Fraction(1), alpha=_lambert_alpha,
                 sequence="euler-tilde-odd", positivity="alpha>=0",
                 description="sum E_2n+1/(2n+1)! t^n, alpha_n = 1/(4n^2-1)"),
        CFFamily("euler-tilde-shifted-s", "S", Fraction(1), alpha=_tilde_shifted_alpha,
                 sequence="euler-tilde-shifted", positivity="some alpha<0",
                 description="sum E_n+1/(n+1)! t^n, alternating-sign alphas"),
        CFFamily("springer-even", "S", Fraction(1), alpha=_springer_even_alpha,
                 sequence="springer-even", positivity="alpha>=0",
                 description="sum S_2n t^n, alpha_2k-1 = (4k-3)(4k-1), alpha_2k = (4k)^2"),
        CFFamily("secpow", "S", RatPolynomial((1,)), alpha=lambda n: _x_poly(n * (n - 1), n),
                 sequence="secpow", positivity="alpha>=0 for x>=0",
                 description="sum E_2n(x) t^n, alpha_n = n(x+n-1)"),
        CFFamily("euler-tilde-shifted", "J", Fraction(1),
                 gamma=lambda n: Fraction(1, 2) if n == 0 else Fraction(0),
                 beta=lambda n: Fraction(1, 16 * n * n - 4),
                 sequence="euler-tilde-shifted", positivity="beta>=0",
                 description="sum E_n+1/(n+1)! t^n"),
        CFFamily("euler-shifted", "J", Fraction(1), gamma=lambda n: Fraction(n + 1),
                 beta=lambda n: Fraction(n * (n + 1), 2),
                 sequence="euler-shifted", positivity="beta>=0",
                 description="sum E_n+1 t^n, gamma_n = n+1, beta_n = n(n+1)/2"),
        CFFamily("euler-shifted-signed", "J", Fraction(1),
                 gamma=lambda n: Fraction(1 - n % 2), beta=_euler_signed_beta,
                 sequence="euler-shifted-signed", positivity="some beta<0",
                 description="sum (-1)^(n(n-1)/2) E_n+1 t^n"),
        CFFamily("springer", "J", Fraction(1), gamma=lambda n: Fraction(2 * n + 1),
                 beta=lambda n: Fraction(2 * n * n),
                 sequence="springer", positivity="beta>=0",
                 description="sum S_n t^n, gamma_n = 2n+1, beta_n = 2n^2"),
        CFFamily("springer-odd", "J", Fraction(1), gamma=lambda n: Fraction(32 * n * n + 32 * n + 11),
                 beta=lambda n: Fraction((4 * n - 1) * (4 * n) ** 2 * (4 * n + 1)),
                 sequence="springer-odd", positivity="beta>=0",
                 description="sum S_2n+1 t^n"),
        CFFamily("springer-signed", "J", Fraction(1), gamma=lambda n: Fraction(1),
                 beta=lambda n: Fraction(-4 * n * n),
                 sequence="springer-signed", positivity="some beta<0",
                 description="sum (-1)^(n(n-1)/2) S_n t^n, gamma_n = 1, beta_n = -4n^2"),
    )
}


def cf_family(name: str) -> CFFamily:
    try:
        return CF_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(CF_FAMILIES))}") from None


def _is_negative(c) -> bool:
    if isinstance(c, RatPolynomial):
        # negative for some large x >= 0 iff the leading coefficient is negative
        return c.degree >= 0 and c.coeffs[-1] < 0
    return c < 0


def positivity_audit(family: CFFamily, k: int = 8) -> dict:
    """Recompute the sign claim of a family from its first k levels."""
    cf = family.build(k)
    if family.kind == "S":
        coeffs = {"alpha": list(cf.alphas)}
    else:
        coeffs = {"gamma": list(cf.gammas), "beta": list(cf.betas)}
    negatives = {name: [i for i, c in enumerate(v) if _is_negative(c)] for name, v in coeffs.items()}
    if family.positivity.startswith("some"):
        which = family.positivity.split()[1].split("<")[0]
        holds = bool(negatives[which])
    else:
        which = family.positivity.split(">=")[0]
        holds = not negatives[which]
    return {"family": family.name, "claim": family.positivity, "holds": holds, "levels": k}


def family_sequence_terms(family: CFFamily, N: int) -> list:
    cf = family.build(N)
    expand = sfrac_expand if family.kind == "S" else jfrac_expand
    return list(expand(cf, N).coeffs)

