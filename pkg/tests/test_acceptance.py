"""The fourteen acceptance criteria, one test each, with a pass/fail line per criterion."""
from __future__ import annotations

import pytest

from monoidkit.acceptance import CHECKS, run_check

RESULTS = {}


@pytest.mark.parametrize("number", [c[0] for c in CHECKS], ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    res = run_check(number)
    RESULTS[number] = res
    print(res.line())
    assert res.passed, res.line()
