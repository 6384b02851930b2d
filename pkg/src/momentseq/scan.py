"""Exact scans: the sign conjecture on scaled Euler numbers and Hankel sign tables.

Neither scan concludes anything beyond its range; a clean scan is reported
as "all-hold" for exactly the box that was searched.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

import gmpy2

from .errors import VerificationFailure
from .exact import format_exact
from .hankel import hankel_det
from .sequences import euler_numbers


def scaled_euler(count: int) -> tuple:
    """E_n / n! as exact rationals."""
    return tuple(e / factorial(n) for n, e in enumerate(euler_numbers(count).terms))


def conjecture_value(n: int, j: int, k: int, tilde=None) -> Fraction:
    """(-1)^(n-1) [E~_n E~_{n+j+k} - E~_{n+j} E~_{n+k}], computed from scratch."""
    e = tilde if tilde is not None else scaled_euler(n + j + k + 1)
    raw = e[n] * e[n + j + k] - e[n + j] * e[n + k]
    return raw if n % 2 == 1 else -raw


@dataclass(frozen=True)
class ScanResult:
    n_max: int
    j_max: int
    k_max: int
    status: str  # "all-hold" or "counterexample"
    counterexample: Optional[tuple] = None  # (n, j, k, exact value)
    checked: int = 0
    wall_time: float = 0.0

    def to_json(self) -> dict:
        out = {
            "range": {"n_max": self.n_max, "j_max": self.j_max, "k_max": self.k_max},
            "status": self.status,
            "checked": self.checked,
        }
        if self.counterexample is not None:
            n, j, k, v = self.counterexample
            out["counterexample"] = {"n": n, "j": j, "k": k, "value": format_exact(v)}
        return out


def _integer_table(top: int) -> list:
    """e_i = E_i * top! / i!, so that sign comparisons need no division."""
    eul = euler_numbers(top + 1).terms
    ftop = factorial(top)
    return [gmpy2.mpz(int(eul[i]) * (ftop // factorial(i))) for i in range(top + 1)]


def _scan_rows(args):
    """Scan n in ns; return (first failing (n, j, k) or None, count)."""
    ns, j_max, k_max, top = args
    e = _integer_table(top)
    count = 0
    for n in ns:
        en = e[n]
        odd = n % 2 == 1
        for j in range(1, j_max + 1):
            enj = e[n + j]
            for k in range(1, min(j, k_max) + 1):
                raw = en * e[n + j + k] - enj * e[n + k]
                count += 1
                if (raw <= 0) if odd else (raw >= 0):
                    return (n, j, k), count
    return None, count


def _jobs(jobs) -> int:
    if jobs in (None, "auto"):
        env = os.environ.get("MOMENTSEQ_JOBS")
        return int(env) if env else (os.cpu_count() or 1)
    return max(1, int(jobs))


def scan_logconvexity(n_max: int, j_max: int, k_max: int, jobs=1) -> ScanResult:
    """Check (-1)^(n-1)[E~_n E~_{n+j+k} - E~_{n+j} E~_{n+k}] > 0 on the box.

    The quantity is symmetric in j and k, so only k <= j is visited.  The
    box is split over n; the lexicographically first failure wins.
    """
    start = time.perf_counter()
    top = n_max + j_max + min(j_max, k_max)
    workers = _jobs(jobs)
    ns = list(range(n_max + 1))
    chunks = [ns[i::workers] for i in range(workers)] if workers > 1 else [ns]
    tasks = [(chunk, j_max, k_max, top) for chunk in chunks if chunk]
    if len(tasks) == 1:
        results = [_scan_rows(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
            results = list(pool.map(_scan_rows, tasks))
    failures = sorted(r[0] for r in results if r[0] is not None)
    checked = sum(r[1] for r in results)
    elapsed = time.perf_counter() - start
    if not failures:
        return ScanResult(n_max, j_max, k_max, "all-hold", None, checked, elapsed)
    # each worker walks its rows in order, so the minimum over workers is global
    first = failures[0]
    n, j, k = first
    value = conjecture_value(n, j, k)
    if value > 0:
        raise VerificationFailure(f"reported counterexample {first} does not reproduce")
    return ScanResult(n_max, j_max, k_max, "counterexample", (n, j, k, value), checked, elapsed)


def hankel_sign_survey(m_max: int, n_max: int) -> dict:
    """Signs of Delta_n^(m)(E) for 0 <= m <= m_max, 1 <= n <= n_max.

    Only two facts are checked: every even-m row has a negative entry, and
    every odd-m row is positive.  No pattern beyond that is asserted.
    """
    e = euler_numbers(m_max + 2 * n_max)
    table = {}
    for m in range(m_max + 1):
        table[m] = [(d > 0) - (d < 0) for d in (hankel_det(e, m, n, cross_check=False)
                                                for n in range(1, n_max + 1))]
    even_rows_have_negative = {m: -1 in row for m, row in table.items() if m % 2 == 0}
    odd_rows_positive = {m: all(v == 1 for v in row) for m, row in table.items() if m % 2 == 1}
    return {
        "m_max": m_max,
        "n_max": n_max,
        "signs": table,
        "even_rows_have_negative": even_rows_have_negative,
        "odd_rows_positive": odd_rows_positive,
        "ok": all(even_rows_have_negative.values()) and all(odd_rows_positive.values()),
    }
