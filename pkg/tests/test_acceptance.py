"""Exit criteria, each at its full stated size.

Every test prints a one-line PASS/FAIL summary (shown even with output
capture on), then asserts the criterion.  Run on its own with

    pytest tests/test_acceptance.py -v
"""
import pytest

from tropalg.checks import CHECKS, run_check


@pytest.mark.acceptance
@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{i:02d}" for i in range(1, len(CHECKS) + 1)])
def test_criterion(check, capsys):
    result = run_check(check)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
