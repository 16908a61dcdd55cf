"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the matrix.
"""

import pytest

from gvcurves.checks import ALL_CHECKS


@pytest.mark.parametrize("check", ALL_CHECKS, ids=[c.__name__.removeprefix("check_") for c in ALL_CHECKS])
def test_criterion(check):
    result = check()
    print(result.line())
    assert result.passed, result.detail
