"""Acceptance battery: one pass/fail line per criterion, at the stated tolerances.

Criterion 8 draws on the adjacency matrices collected by the earlier
criteria, so the battery is shared and the tests run in criterion order.
"""

import pytest

from quiverfpd.verify import CRITERIA, Battery


@pytest.fixture(scope="module")
def battery():
    return Battery(quick=False)


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number}")
def test_criterion(criterion, battery, capsys):
    result = criterion(battery)
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail
