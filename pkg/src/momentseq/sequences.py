"""Exact generators for the Euler/Springer family and the moment-preserving transforms.

Every generator returns a :class:`SequenceHandle`: an immutable, named
prefix of a sequence that remembers where it came from.  Transforms record
their parent, so a handle can print its full derivation chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from .errors import InsufficientTerms
from .exact import (
    RatPolynomial,
    as_rational,
    cos_series,
    egf_coefficients,
    format_exact,
    series_mul,
    series_reciprocal,
    sin_series,
)

SCALE_MODES = (
    "div-factorial",
    "mul-factorial",
    "div-factorial-squared",
    "mul-factorial-squared",
    "div-double-index-factorial",
    "mul-double-index-factorial",
)

_SCALE_INVERSE = {
    "div-factorial": "mul-factorial",
    "mul-factorial": "div-factorial",
    "div-factorial-squared": "mul-factorial-squared",
    "mul-factorial-squared": "div-factorial-squared",
    "div-double-index-factorial": "mul-double-index-factorial",
    "mul-double-index-factorial": "div-double-index-factorial",
}


@dataclass(frozen=True)
class Provenance:
    kind: str  # recurrence | series-extraction | formula | enumeration | transform
    parent: Optional["SequenceHandle"] = None
    params: tuple = ()

    def describe(self) -> str:
        if self.kind != "transform":
            return self.kind
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"transform({args})"


@dataclass(frozen=True)
class SequenceHandle:
    name: str
    terms: tuple
    provenance: Provenance = Provenance("given")
    builder: Optional[Callable[[int], "SequenceHandle"]] = field(
        default=None, compare=False, repr=False
    )

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __iter__(self):
        return iter(self.terms)

    def require(self, count: int, what: Optional[str] = None):
        if len(self.terms) < count:
            raise InsufficientTerms(count, len(self.terms), what or self.name)

    def prefix(self, count: int) -> "SequenceHandle":
        self.require(count)
        return SequenceHandle(self.name, self.terms[:count], self.provenance, self.builder)

    def extend(self, count: int) -> "SequenceHandle":
        """Return a handle with at least ``count`` terms; the existing prefix is unchanged."""
        if count <= len(self.terms):
            return self
        if self.builder is None:
            raise InsufficientTerms(count, len(self.terms), self.name)
        longer = self.builder(count)
        assert longer.terms[: len(self.terms)] == self.terms
        return longer

    def derivation(self) -> list:
        chain = []
        node = self
        while node is not None:
            chain.append(f"{node.name} <- {node.provenance.describe()}")
            node = node.provenance.parent
        return chain

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "provenance": self.derivation(),
            "terms": [format_exact(t) for t in self.terms],
        }


def given(name: str, terms, kind: str = "given") -> SequenceHandle:
    return SequenceHandle(name, tuple(_exact(t) for t in terms), Provenance(kind))


def _exact(t):
    return t if isinstance(t, RatPolynomial) else as_rational(t)


# ---------------------------------------------------------------------------
# generators


@lru_cache(maxsize=8)
def _euler_ints(count: int) -> tuple:
    e = [1, 1][:count]
    for n in range(1, count - 1):
        s = sum(comb(n, k) * e[n - k] * e[k] for k in range(n + 1))
        e.append(s // 2)
    return tuple(e)


def euler_numbers(count: int) -> SequenceHandle:
    """E_0 .. E_{count-1} from the quadratic recurrence E_{n+1} = 1/2 sum C(n,k) E_{n-k} E_k."""
    if count < 1:
        raise ValueError("count must be positive")
    terms = tuple(Fraction(e) for e in _euler_ints(count))
    return SequenceHandle("euler", terms, Provenance("recurrence"), euler_numbers)


def euler_numbers_from_series(count: int) -> SequenceHandle:
    """E_n as n! [t^n] (sec t + tan t), by exact series division."""
    order = count - 1
    sec = series_reciprocal(cos_series(order))
    tan = series_mul(sin_series(order), sec)
    terms = tuple(egf_coefficients(sec + tan))
    return SequenceHandle("euler", terms, Provenance("series-extraction"), euler_numbers_from_series)


def springer_numbers(count: int) -> SequenceHandle:
    """S_n = n! [t^n] 1/(cos t - sin t)."""
    if count < 1:
        raise ValueError("count must be positive")
    order = count - 1
    f = series_reciprocal(cos_series(order) - sin_series(order))
    return SequenceHandle(
        "springer", tuple(egf_coefficients(f)), Provenance("series-extraction"), springer_numbers
    )


def secant_power_polys(count: int) -> SequenceHandle:
    """E_0(x), E_2(x), ..., E_{2(count-1)}(x), the coefficients of (sec t)^x.

    Built from E_{2n+2}(x) = x sum_k C(2n+1, 2k) E_{2n-2k+1} E_{2k}(x).
    """
    if count < 1:
        raise ValueError("count must be positive")
    e = _euler_ints(max(2 * count, 2))
    x = RatPolynomial.x()
    polys = [RatPolynomial((1,))]
    for n in range(count - 1):
        acc = RatPolynomial()
        for k in range(n + 1):
            acc = acc + polys[k] * (comb(2 * n + 1, 2 * k) * e[2 * n - 2 * k + 1])
        polys.append(x * acc)
    return SequenceHandle("secpow", tuple(polys), Provenance("recurrence"), secant_power_polys)


def apery_numbers(count: int) -> SequenceHandle:
    if count < 1:
        raise ValueError("count must be positive")
    terms = tuple(
        Fraction(sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1)))
        for n in range(count)
    )
    return SequenceHandle("apery", terms, Provenance("formula"), apery_numbers)


def factorials(count: int) -> SequenceHandle:
    return SequenceHandle(
        "factorial", tuple(Fraction(factorial(n)) for n in range(count)), Provenance("formula"), factorials
    )


def central_binomials(count: int) -> SequenceHandle:
    return SequenceHandle(
        "central-binomial",
        tuple(Fraction(comb(2 * n, n)) for n in range(count)),
        Provenance("formula"),
        central_binomials,
    )


# ---------------------------------------------------------------------------
# transforms


def _derived(parent: SequenceHandle, name: str, terms, params, rebuild) -> SequenceHandle:
    builder = None
    if parent.builder is not None:
        builder = rebuild
    return SequenceHandle(name, tuple(terms), Provenance("transform", parent, tuple(params)), builder)


def _scale_factor(mode: str, n: int) -> Fraction:
    if mode == "div-factorial":
        return Fraction(1, factorial(n))
    if mode == "mul-factorial":
        return Fraction(factorial(n))
    if mode == "div-factorial-squared":
        return Fraction(1, factorial(n) ** 2)
    if mode == "mul-factorial-squared":
        return Fraction(factorial(n) ** 2)
    if mode == "div-double-index-factorial":
        return Fraction(1, factorial(2 * n))
    if mode == "mul-double-index-factorial":
        return Fraction(factorial(2 * n))
    raise ValueError(f"unknown scale mode {mode!r}; expected one of {SCALE_MODES}")


def scale_seq(s: SequenceHandle, mode: str) -> SequenceHandle:
    terms = [t * _scale_factor(mode, n) for n, t in enumerate(s.terms)]
    return _derived(
        s, f"{s.name}|{mode}", terms, [("op", "scale"), ("mode", mode)],
        lambda c: scale_seq(s.extend(c), mode),
    )


def inverse_scale_mode(mode: str) -> str:
    return _SCALE_INVERSE[mode]


def subsequence(s: SequenceHandle, n0: int, j: int, count: Optional[int] = None) -> SequenceHandle:
    """a_{n0}, a_{n0+j}, a_{n0+2j}, ...; ``count`` terms if given, else as many as available."""
    if n0 < 0 or j < 1:
        raise ValueError("need n0 >= 0 and j >= 1")
    if count is None:
        count = max((len(s) - n0 + j - 1) // j, 0)
    needed = n0 + j * (count - 1) + 1 if count else 0
    s.require(needed)
    terms = [s.terms[n0 + j * i] for i in range(count)]
    return _derived(
        s, f"{s.name}[{n0}::{j}]", terms, [("op", "subsequence"), ("n0", n0), ("j", j)],
        lambda c: subsequence(s.extend(n0 + j * c), n0, j),
    )


def shift(s: SequenceHandle, k: int = 1) -> SequenceHandle:
    """(a_{n+k})."""
    return subsequence(s, k, 1)


def aerate(s: SequenceHandle) -> SequenceHandle:
    """(a_0, 0, a_1, 0, a_2, ...); the final trailing zero is omitted."""
    terms = []
    for i, t in enumerate(s.terms):
        if i:
            terms.append(t * 0)
        terms.append(t)
    return _derived(
        s, f"aerate({s.name})", terms, [("op", "aerate")],
        lambda c: aerate(s.extend(c // 2 + 1)),
    )


def binomial_transform(s: SequenceHandle, c) -> SequenceHandle:
    """b_n = sum_k C(n,k) c^(n-k) a_k, by the defining sum."""
    c = as_rational(c)
    terms = binomial_transform_terms(s.terms, c)
    return _derived(
        s, f"binom({s.name},{c})", terms, [("op", "binomial"), ("c", str(c))],
        lambda cnt: binomial_transform(s.extend(cnt), c),
    )


def binomial_transform_terms(a, c) -> list:
    c = as_rational(c)
    powers = [Fraction(1)]
    for _ in range(len(a)):
        powers.append(powers[-1] * c)
    out = []
    for n in range(len(a)):
        acc = a[0] * 0
        for k in range(n + 1):
            w = comb(n, k) * powers[n - k]
            if w and a[k] != 0:
                acc = acc + a[k] * w
        out.append(acc)
    return out


def quarter_period_sign(n: int) -> int:
    """(-1)^{n(n-1)/2}: the pattern +, +, -, -, +, +, ..."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def signed_variant(s: SequenceHandle, pattern: str = "quarter-period") -> SequenceHandle:
    if pattern != "quarter-period":
        raise ValueError(f"unknown sign pattern {pattern!r}")
    terms = [t * quarter_period_sign(n) for n, t in enumerate(s.terms)]
    return _derived(
        s, f"signed({s.name})", terms, [("op", "signed"), ("pattern", pattern)],
        lambda c: signed_variant(s.extend(c), pattern),
    )


def entrywise_product(a: SequenceHandle, b: SequenceHandle) -> SequenceHandle:
    n = min(len(a), len(b))
    terms = [a.terms[i] * b.terms[i] for i in range(n)]
    return SequenceHandle(
        f"{a.name}*{b.name}", tuple(terms),
        Provenance("transform", a, (("op", "product"), ("with", b.name))),
    )


def linear_combination(a: SequenceHandle, b: SequenceHandle, alpha, beta) -> SequenceHandle:
    alpha, beta = as_rational(alpha), as_rational(beta)
    n = min(len(a), len(b))
    terms = [alpha * a.terms[i] + beta * b.terms[i] for i in range(n)]
    return SequenceHandle(
        f"{alpha}*{a.name}+{beta}*{b.name}", tuple(terms),
        Provenance("transform", a, (("op", "combination"), ("with", b.name))),
    )


# ---------------------------------------------------------------------------
# named sequences used by the CLI and the test battery


def _named_builders() -> dict:
    def sub(base, n0, j, name):
        def build(count):
            h = subsequence(base(n0 + j * count), n0, j, count)
            return SequenceHandle(name, h.terms, h.provenance, build)
        return build

    def scaled(base, mode, name):
        def build(count):
            h = scale_seq(base(count), mode)
            return SequenceHandle(name, h.terms, h.provenance, build)
        return build

    def signed(base, name):
        def build(count):
            h = signed_variant(base(count))
            return SequenceHandle(name, h.terms, h.provenance, build)
        return build

    euler_tilde = scaled(euler_numbers, "div-factorial", "euler-tilde")
    secant = sub(euler_numbers, 0, 2, "secant")
    springer_even = sub(springer_numbers, 0, 2, "springer-even")
    table = {
        "euler": euler_numbers,
        "springer": springer_numbers,
        "apery": apery_numbers,
        "secpow": secant_power_polys,
        "factorial": factorials,
        "central-binomial": central_binomials,
        "secant": secant,
        "tangent": sub(euler_numbers, 1, 2, "tangent"),
        "euler-shifted": sub(euler_numbers, 1, 1, "euler-shifted"),
        "springer-even": springer_even,
        "springer-odd": sub(springer_numbers, 1, 2, "springer-odd"),
        "springer-shifted": sub(springer_numbers, 1, 1, "springer-shifted"),
        "euler-tilde": euler_tilde,
        "euler-tilde-even": sub(euler_tilde, 0, 2, "euler-tilde-even"),
        "euler-tilde-odd": sub(euler_tilde, 1, 2, "euler-tilde-odd"),
        "euler-tilde-shifted": sub(euler_tilde, 1, 1, "euler-tilde-shifted"),
        "secant-over-factorial": scaled(secant, "div-factorial", "secant-over-factorial"),
        "secant-over-factorial-squared": scaled(
            secant, "div-factorial-squared", "secant-over-factorial-squared"
        ),
        "euler-shifted-signed": signed(sub(euler_numbers, 1, 1, "euler-shifted"), "euler-shifted-signed"),
        "springer-signed": signed(springer_numbers, "springer-signed"),
    }
    return table


NAMED_SEQUENCES = _named_builders()


def named_sequence(name: str, count: int) -> SequenceHandle:
    try:
        builder = NAMED_SEQUENCES[name]
    except KeyError:
        raise ValueError(
            f"unknown sequence {name!r}; known: {', '.join(sorted(NAMED_SEQUENCES))}"
        ) from None
    return builder(count)
