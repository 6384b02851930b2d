"""Brute-force enumeration of down-up permutations and type-B snakes.

These counts are deliberately independent of every recurrence in the
package: they walk the permutations themselves, pruning a branch as soon as
the alternation pattern breaks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceeded
from .exact import RatPolynomial

PERMUTATION_BOUND = 10
SNAKE_BOUND = 8


@dataclass(frozen=True)
class SignedPermutation:
    entries: tuple

    def __post_init__(self):
        n = len(self.entries)
        if sorted(abs(v) for v in self.entries) != list(range(1, n + 1)):
            raise ValueError(f"{self.entries} is not a signed permutation of [{n}]")

    def is_snake(self) -> bool:
        """0 < pi_1 > pi_2 < pi_3 > ..."""
        prev = 0
        for i, v in enumerate(self.entries):
            if (i % 2 == 0 and not v > prev) or (i % 2 == 1 and not v < prev):
                return False
            prev = v
        return True


@dataclass(frozen=True)
class RecordPolynomial:
    """coeffs[k] = number of permutations with exactly k records."""

    coeffs: tuple

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def total(self) -> int:
        return sum(self.coeffs)

    def as_polynomial(self) -> RatPolynomial:
        return RatPolynomial(self.coeffs)


def _check_bound(n: int, bound: int):
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(n, bound)


def _down_up(n: int):
    """Yield every sigma in S_n with sigma_1 > sigma_2 < sigma_3 > ..., in lexicographic order."""
    if n == 0:
        yield ()
        return
    used = [False] * (n + 1)
    perm = []

    def extend():
        i = len(perm)
        if i == n:
            yield tuple(perm)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if i and (v > perm[-1] if i % 2 == 1 else v < perm[-1]):
                continue
            used[v] = True
            perm.append(v)
            yield from extend()
            perm.pop()
            used[v] = False

    yield from extend()


def alternating_permutations(n: int, bound: int = PERMUTATION_BOUND):
    _check_bound(n, bound)
    return _down_up(n)


def alt_perm_count(n: int, bound: int = PERMUTATION_BOUND) -> int:
    return sum(1 for _ in alternating_permutations(n, bound))


def record_count(sigma) -> int:
    """Number of left-to-right maxima."""
    best, count = 0, 0
    for v in sigma:
        if v > best:
            best, count = v, count + 1
    return count


def alt_records_poly(n: int, bound: int = PERMUTATION_BOUND) -> RecordPolynomial:
    coeffs = [0] * (n + 1)
    for sigma in alternating_permutations(n, bound):
        coeffs[record_count(sigma)] += 1
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return RecordPolynomial(tuple(coeffs))


def snakes(n: int, bound: int = SNAKE_BOUND):
    """Yield the signed permutations with 0 < pi_1 > pi_2 < pi_3 > ..."""
    _check_bound(n, bound)
    used = [False] * (n + 1)
    perm = []
    values = [v for k in range(1, n + 1) for v in (-k, k)]
    values.sort()

    def extend():
        i = len(perm)
        if i == n:
            yield SignedPermutation(tuple(perm))
            return
        prev = perm[-1] if perm else 0
        for v in values:
            if used[abs(v)]:
                continue
            if (i % 2 == 0 and v <= prev) or (i % 2 == 1 and v >= prev):
                continue
            used[abs(v)] = True
            perm.append(v)
            yield from extend()
            perm.pop()
            used[abs(v)] = False

    yield from extend()


def snake_count(n: int, bound: int = SNAKE_BOUND) -> int:
    return sum(1 for _ in snakes(n, bound))
