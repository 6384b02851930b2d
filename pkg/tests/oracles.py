"""Reference computations that share no code with the package."""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial, prod

EULER_11 = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]
SPRINGER_11 = [1, 1, 3, 11, 57, 361, 2763, 24611, 250737, 2873041, 36581523]


def euler_boustrophedon(count):
    """Seidel's boustrophedon triangle; the row ends are E_0, E_1, ..."""
    out, row = [1], [1]
    for _ in range(count - 1):
        nxt = [0]
        for v in reversed(row):
            nxt.append(nxt[-1] + v)
        out.append(nxt[-1])
        row = nxt
    return out[:count]


def _inverse(a, order):
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / Fraction(a[0])
    for n in range(1, order + 1):
        inv[n] = -inv[0] * sum(a[k] * inv[n - k] for k in range(1, n + 1))
    return inv


def springer_from_egf(count):
    """n! [t^n] 1/(cos t - sin t), by naive power-series inversion."""
    order = count - 1
    base = []
    for n in range(order + 1):
        c = [1, -1, -1, 1][n % 4] if n % 2 == 0 else [0, -1, 0, 1][n % 4]
        base.append(Fraction(c, factorial(n)))
    inv = _inverse(base, order)
    return [int(inv[n] * factorial(n)) for n in range(count)]


def apery_direct(n):
    return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inversions * prod((m[i][p[i]] for i in range(n)), start=Fraction(1))
    return total


def hankel_oracle(a, m, n):
    return leibniz_det([[Fraction(a[m + i + j]) for j in range(n)] for i in range(n)])


def _mul(a, b, order):
    return [sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(order + 1)]


def sfraction_series(alpha0, alphas, order):
    """Truncated power series of alpha0 / (1 - a1 t / (1 - a2 t / ...)), evaluated bottom-up."""
    tail = [Fraction(1)] + [Fraction(0)] * order
    for a in reversed(alphas):
        den = [Fraction(1)] + [-a * c for c in tail[:order]]
        tail = _inverse(den, order)
    return [alpha0 * c for c in tail]


def jfraction_series(alpha0, gammas, betas, order):
    """alpha0 / (1 - g0 t - b1 t^2 / (1 - g1 t - b2 t^2 / ...)), bottom-up."""
    tail = [Fraction(1)] + [Fraction(0)] * order
    for i in reversed(range(len(gammas))):
        b = betas[i] if i < len(betas) else 0
        den = [Fraction(1), -Fraction(gammas[i])] + [Fraction(0)] * (order - 1)
        shifted = [Fraction(0), Fraction(0)] + [b * c for c in tail[: order - 1]]
        den = [d - s for d, s in zip(den, shifted)][: order + 1]
        tail = _inverse(den, order)
    return [alpha0 * c for c in tail]


def down_up_by_filter(n):
    return sum(
        1
        for p in permutations(range(1, n + 1))
        if all((p[i] > p[i + 1]) if i % 2 == 0 else (p[i] < p[i + 1]) for i in range(n - 1))
    )
