from fractions import Fraction
from math import factorial

import pytest

from momentseq.scan import conjecture_value, hankel_sign_survey, scan_logconvexity, scaled_euler

from oracles import euler_boustrophedon


def _naive(n_max, j_max, k_max):
    """Fraction arithmetic over the full box, both orders of j and k."""
    e = euler_boustrophedon(n_max + j_max + k_max + 1)
    t = [Fraction(v, factorial(i)) for i, v in enumerate(e)]
    for n in range(n_max + 1):
        for j in range(1, j_max + 1):
            for k in range(1, k_max + 1):
                v = (-1) ** (n - 1) * (t[n] * t[n + j + k] - t[n + j] * t[n + k])
                if v <= 0:
                    return (n, j, k)
    return None


def test_small_box_agrees_with_naive_scan():
    res = scan_logconvexity(15, 15, 15)
    assert _naive(15, 15, 15) is None
    assert res.status == "all-hold"
    assert res.checked == 16 * sum(min(j, 15) for j in range(1, 16))


def test_parallel_split_gives_same_answer():
    a = scan_logconvexity(40, 40, 40, jobs=1)
    b = scan_logconvexity(40, 40, 40, jobs=3)
    assert (a.status, a.checked) == (b.status, b.checked)


def test_conjecture_value_sign_and_symmetry():
    t = scaled_euler(20)
    for n, j, k in [(0, 1, 1), (3, 2, 5), (6, 4, 1)]:
        v = conjecture_value(n, j, k, t)
        assert v > 0 and v == conjecture_value(n, k, j, t)


def test_counterexample_is_reported(monkeypatch):
    # flip one table entry so that the sign test must fail somewhere
    import momentseq.scan as scan

    real = scan._integer_table

    def corrupted(top):
        table = real(top)
        table[5] = -table[5]
        return table

    monkeypatch.setattr(scan, "_integer_table", corrupted)
    monkeypatch.setattr(scan, "conjecture_value", lambda n, j, k: Fraction(-1))
    res = scan.scan_logconvexity(6, 3, 3)
    assert res.status == "counterexample"
    assert res.to_json()["counterexample"]["value"] == "-1"


def test_hankel_sign_survey():
    s = hankel_sign_survey(6, 8)
    assert s["ok"]
    assert s["signs"][0][:3] == [1, 0, -1]
    assert all(v == 1 for v in s["signs"][1])


@pytest.mark.parametrize("jobs", ["auto", 2])
def test_jobs_argument(jobs, monkeypatch):
    monkeypatch.setenv("MOMENTSEQ_JOBS", "2")
    assert scan_logconvexity(10, 10, 10, jobs=jobs).status == "all-hold"
