"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines; the
``freefusion selftest`` command runs the same checks.
"""

import pytest

from freefusion import selftest

# wall-clock budgets in seconds, per criterion
BUDGETS = {1: 1, 2: 1, 3: 30, 4: 10, 5: 30, 6: 5, 7: 60, 8: 1, 9: 30, 10: 10}


def test_registry_is_complete():
    numbers = [number for number, _, _ in selftest.ACCEPTANCE_CHECKS]
    assert numbers == list(range(1, 11))
    assert set(BUDGETS) == set(numbers)


@pytest.mark.parametrize(
    "number,title",
    [(number, title) for number, title, _ in selftest.ACCEPTANCE_CHECKS],
    ids=[f"criterion-{number}" for number, _, _ in selftest.ACCEPTANCE_CHECKS])
def test_acceptance_criterion(number, title):
    result = selftest.run_check(number)
    status = "PASS" if result.ok else "FAIL"
    print(f"{status} criterion {number}: {title} - {result.detail} ({result.seconds:.2f}s)")
    assert result.ok, f"criterion {number} ({title}): {result.detail}"
    assert result.seconds < BUDGETS[number], (
        f"criterion {number} took {result.seconds:.2f}s, budget {BUDGETS[number]}s")
