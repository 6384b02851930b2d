"""Shifted Hankel matrices, exact determinants, and finite positivity tests.

All checks are on finite sections with caller-supplied sizes; a passing
report says nothing beyond the window it names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional, Sequence

from .errors import InsufficientTerms, VerificationFailure
from .exact import format_exact
from .sequences import SequenceHandle

ALL_POSITIVE = "all-positive"
ALL_NONNEGATIVE = "all-nonnegative"
VIOLATION = "violation"


@dataclass(frozen=True)
class HankelMatrix:
    source: SequenceHandle
    shift: int
    size: int

    def __post_init__(self):
        if self.shift < 0 or self.size < 1:
            raise ValueError("need shift >= 0 and size >= 1")
        self.source.require(self.shift + 2 * self.size - 1, f"H_{self.size}^({self.shift})")

    def entry(self, i: int, j: int):
        return self.source.terms[i + j + self.shift]

    @property
    def entries(self) -> list:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]


def bareiss_det(matrix: Sequence[Sequence]):
    """Determinant by one-step fraction-free elimination with row pivoting."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def cofactor_det(matrix: Sequence[Sequence]):
    """Leibniz-formula determinant; only for small matrices (cross-checks)."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        prod = 1
        for i, p in enumerate(perm):
            prod = prod * matrix[i][p]
            if prod == 0:
                break
        total = total - prod if inversions % 2 else total + prod
    return Fraction(total) if isinstance(total, int) else total


def minor(matrix: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    return bareiss_det([[matrix[i][j] for j in cols] for i in rows])


def hankel_det(s: SequenceHandle, m: int, n: int, cross_check: bool = True):
    """Delta_n^{(m)}(s) = det (a_{i+j+m})_{0<=i,j<n}, exactly.

    For n <= 5 the result is re-derived by cofactor expansion.
    """
    entries = HankelMatrix(s, m, n).entries
    d = bareiss_det(entries)
    if cross_check and n <= 5:
        d2 = cofactor_det(entries)
        if d2 != d:
            raise VerificationFailure(f"elimination gave {d}, cofactor expansion gave {d2}")
    return d


@dataclass(frozen=True)
class Witness:
    rows: tuple
    cols: tuple
    value: Fraction

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols), "det": format_exact(self.value)}


@dataclass(frozen=True)
class MinorReport:
    status: str
    witness: Optional[Witness] = None
    checked: int = 0
    window: Optional[int] = None
    max_order: Optional[int] = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != VIOLATION

    def to_json(self) -> dict:
        out = {"status": self.status, "checked": self.checked}
        if self.window is not None:
            out["window"] = self.window
        if self.max_order is not None:
            out["max_order"] = self.max_order
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        for key, value in self.details.items():
            out[key] = value
        return out


def _verified(matrix, witness: Witness, strict: bool) -> Witness:
    again = minor(matrix, witness.rows, witness.cols)
    bad = again < 0 or (strict and again == 0)
    if again != witness.value or not bad:
        raise VerificationFailure(f"witness {witness} did not reproduce (got {again})")
    return witness


def psd_leading_minors(s: SequenceHandle, m: int, nmax: int) -> MinorReport:
    """Check Delta_1^{(m)}, ..., Delta_nmax^{(m)}; stop at the first negative one."""
    s.require(m + 2 * nmax - 1, f"leading minors up to Delta_{nmax}^({m})")
    dets = []
    for n in range(1, nmax + 1):
        d = hankel_det(s, m, n)
        dets.append(d)
        if d < 0:
            matrix = HankelMatrix(s, m, n).entries
            w = _verified(matrix, Witness(tuple(range(n)), tuple(range(n)), d), strict=False)
            return MinorReport(VIOLATION, w, checked=n, details={
                "shift": m, "first_failing_n": n, "dets": [format_exact(x) for x in dets]})
    status = ALL_POSITIVE if all(d > 0 for d in dets) else ALL_NONNEGATIVE
    return MinorReport(status, None, checked=nmax,
                       details={"shift": m, "dets": [format_exact(x) for x in dets]})


def _scan_minors(matrix, window: int, max_order: int, strict_pred=None):
    """Enumerate minors by (order, rows, cols) lexicographically.

    Returns (first negative witness, count, all_positive, first strictness failure).
    """
    checked = 0
    all_positive = True
    strict_fail = None
    for r in range(1, max_order + 1):
        for rows in combinations(range(window), r):
            for cols in combinations(range(window), r):
                d = minor(matrix, rows, cols)
                checked += 1
                if d < 0:
                    return Witness(rows, cols, d), checked, False, strict_fail
                if d == 0:
                    all_positive = False
                    if strict_fail is None and strict_pred is not None and strict_pred(rows, cols):
                        strict_fail = Witness(rows, cols, d)
    return None, checked, all_positive, strict_fail


def total_positivity(s: SequenceHandle, window: int, max_order: int) -> MinorReport:
    """All minors of order <= max_order in the top-left window x window block of H^{(0)}."""
    if max_order > window:
        raise ValueError("max_order cannot exceed the window")
    s.require(2 * window - 1, f"{window}x{window} Hankel window")
    matrix = HankelMatrix(s, 0, window).entries
    neg, checked, all_pos, _ = _scan_minors(matrix, window, max_order)
    if neg is not None:
        return MinorReport(VIOLATION, _verified(matrix, neg, False), checked, window, max_order)
    status = ALL_POSITIVE if all_pos else ALL_NONNEGATIVE
    return MinorReport(status, None, checked, window, max_order)


def toeplitz_matrix(s: SequenceHandle, window: int) -> list:
    s.require(window, f"{window}x{window} Toeplitz window")
    zero = s.terms[0] * 0
    return [[s.terms[j - i] if j >= i else zero for j in range(window)] for i in range(window)]


def toeplitz_pf_check(
    s: SequenceHandle, window: int, max_order: int, require_strict: bool = False
) -> MinorReport:
    """Polya-frequency test on the upper-triangular Toeplitz section (a_{j-i}).

    Minors whose rows and columns satisfy i_k <= j_k are also tested for
    strict positivity; with ``require_strict`` a zero there is a violation.
    """
    if max_order > window:
        raise ValueError("max_order cannot exceed the window")
    matrix = toeplitz_matrix(s, window)

    def above(rows, cols):
        return all(i <= j for i, j in zip(rows, cols))

    neg, checked, _, strict_fail = _scan_minors(matrix, window, max_order, above)
    details = {"strict_above_diagonal": strict_fail is None}
    if neg is not None:
        return MinorReport(VIOLATION, _verified(matrix, neg, False), checked, window, max_order, details)
    if require_strict and strict_fail is not None:
        return MinorReport(VIOLATION, _verified(matrix, strict_fail, True), checked, window,
                           max_order, details)
    return MinorReport(ALL_NONNEGATIVE, None, checked, window, max_order, details)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def log_shape(s: SequenceHandle) -> list:
    """Signs of a_n a_{n+2} - a_{n+1}^2 for every available n."""
    if len(s) < 3:
        raise InsufficientTerms(3, len(s), s.name)
    a = s.terms
    return [_sign(a[n] * a[n + 2] - a[n + 1] ** 2) for n in range(len(a) - 2)]


def hankel_table(s: SequenceHandle, m_values, n_max: int) -> dict:
    """Exact Delta_n^{(m)} for each m and 1 <= n <= n_max."""
    return {m: [hankel_det(s, m, n, cross_check=False) for n in range(1, n_max + 1)] for m in m_values}
