"""One line per criterion, then a hard assertion.

The lines are also repeated in the terminal summary (see conftest.py).
"""

import pytest

from momentseq.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, acceptance_lines):
    result = run_criterion(number)
    line = result.line()
    print(line)
    acceptance_lines.append(line)
    assert result.passed, result.detail
