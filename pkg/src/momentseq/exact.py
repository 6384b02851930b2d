"""Exact scalars, dense polynomials and truncated power series.

Scalars are :class:`fractions.Fraction` (aliased :data:`Rational`); they are
kept in lowest terms by construction.  :class:`RatPolynomial` is a dense
univariate polynomial over the rationals and :class:`TruncatedSeries` is a
fixed-order power-series prefix whose coefficients may be rationals or
polynomials.  Every value here is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import NonUnitConstantTerm

Rational = Fraction

__all__ = [
    "Rational",
    "RatPolynomial",
    "TruncatedSeries",
    "as_rational",
    "format_exact",
    "parse_exact",
    "exact_div",
    "series_mul",
    "series_reciprocal",
    "poly_eval",
    "poly_derivative_at_zero",
    "cos_series",
    "sin_series",
    "egf_series",
    "egf_coefficients",
]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected so that no inexact value leaks into exact code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class RatPolynomial:
    """Dense polynomial in one indeterminate with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def constant(cls, value) -> "RatPolynomial":
        return cls((value,))

    @classmethod
    def x(cls) -> "RatPolynomial":
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __call__(self, x):
        return poly_eval(self, x)

    def _coerce(self, other):
        if isinstance(other, RatPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RatPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return RatPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPolynomial(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return RatPolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # exact division only; see divexact
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.divexact(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other.divexact(self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = RatPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "RatPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other._c[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            q = rem[i] / lead
            if q:
                quot[i - dq] = q
                for j, b in enumerate(other._c):
                    rem[i - dq + j] -= q * b
        return RatPolynomial(quot), RatPolynomial(rem)

    def divexact(self, other: "RatPolynomial") -> "RatPolynomial":
        """Quotient ``self / other``; raises ArithmeticError if a remainder is left."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial(i * a for i, a in enumerate(self._c) if i)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        if len(self._c) <= 1:
            return hash(self.coeff(0))
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"RatPolynomial({[str(a) for a in self._c]})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms)


Ring = Union[Fraction, RatPolynomial]


def exact_div(a, b):
    """Divide ring elements where the quotient is known to be exact."""
    if isinstance(a, RatPolynomial) or isinstance(b, RatPolynomial):
        if not isinstance(a, RatPolynomial):
            a = RatPolynomial((a,))
        if not isinstance(b, RatPolynomial):
            b = RatPolynomial((b,))
        return a.divexact(b)
    return Fraction(a) / b


def is_zero(a) -> bool:
    return a == 0


def _is_unit(a) -> bool:
    if isinstance(a, RatPolynomial):
        return a.degree == 0
    return a != 0


def _inverse(a):
    if isinstance(a, RatPolynomial):
        return RatPolynomial((1 / a.coeff(0),))
    return 1 / Fraction(a)


class TruncatedSeries:
    """Power-series prefix ``c_0 + c_1 t + ... + c_N t^N`` (mod t^(N+1))."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self._c = tuple(
            a if isinstance(a, RatPolynomial) else as_rational(a) for a in coeffs
        )

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([value] + [0] * order)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self._c[: order + 1])

    def _align(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return self._c[: n + 1], other._c[: n + 1]

    def __add__(self, other):
        a, b = self._align(other)
        return TruncatedSeries([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-x for x in self._c])

    def __sub__(self, other):
        a, b = self._align(other)
        return TruncatedSeries([x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([x * other for x in self._c])

    __rmul__ = __mul__

    def shift_down(self) -> "TruncatedSeries":
        """``(f - f_0) / t``; drops one order of precision."""
        if self.order < 1:
            raise ValueError("no coefficients left after dividing by t")
        return TruncatedSeries(self._c[1:])

    def map(self, fn) -> "TruncatedSeries":
        return TruncatedSeries([fn(x) for x in self._c])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"TruncatedSeries({[str(a) for a in self._c]})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = 0
        for i in range(k + 1):
            x = ac[i]
            if x == 0:
                continue
            y = bc[k - i]
            if y == 0:
                continue
            s = s + x * y
        out.append(s)
    return TruncatedSeries(out)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with an invertible constant term."""
    c = a.coeffs
    if not _is_unit(c[0]):
        raise NonUnitConstantTerm(f"constant term {c[0]} is not a unit")
    inv0 = _inverse(c[0])
    out = [inv0]
    for k in range(1, len(c)):
        s = 0
        for i in range(1, k + 1):
            if c[i] != 0:
                s = s + c[i] * out[k - i]
        out.append(-(s * inv0))
    return TruncatedSeries(out)


def poly_eval(p: RatPolynomial, x) -> Fraction:
    """Horner evaluation at an exact point."""
    x = as_rational(x)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def poly_derivative_at_zero(p: RatPolynomial) -> Fraction:
    return p.coeff(1)


def egf_series(terms: Sequence) -> TruncatedSeries:
    """Series whose coefficients are ``terms[n] / n!``."""
    return TruncatedSeries([Fraction(t) / factorial(n) if not isinstance(t, RatPolynomial)
                            else t * Fraction(1, factorial(n))
                            for n, t in enumerate(terms)])


def egf_coefficients(f: TruncatedSeries) -> list:
    """Inverse of :func:`egf_series`: ``n! [t^n] f``."""
    return [c * factorial(n) for n, c in enumerate(f.coeffs)]


def cos_series(order: int) -> TruncatedSeries:
    out = []
    for n in range(order + 1):
        if n % 2:
            out.append(0)
        else:
            out.append(Fraction((-1) ** (n // 2), factorial(n)))
    return TruncatedSeries(out)


def sin_series(order: int) -> TruncatedSeries:
    out = []
    for n in range(order + 1):
        if n % 2:
            out.append(Fraction((-1) ** (n // 2), factorial(n)))
        else:
            out.append(0)
    return TruncatedSeries(out)


def format_exact(value):
    """Serialize an exact value: "p/q" (or "p"), or a list of those for polynomials."""
    if isinstance(value, RatPolynomial):
        return [str(a) for a in value.coeffs]
    if isinstance(value, TruncatedSeries):
        return [format_exact(a) for a in value.coeffs]
    return str(as_rational(value))


def parse_exact(data):
    """Inverse of :func:`format_exact` for scalars and polynomial coefficient lists."""
    if isinstance(data, list):
        return RatPolynomial(Fraction(s) for s in data)
    return Fraction(data)
