"""The twelve acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""

import pytest

from garside_kit.checks import CHECKS, run_check


@pytest.mark.parametrize("key", [c[0] for c in CHECKS])
def test_criterion(key):
    r = run_check(key)
    verdict = "PASS" if r.passed and r.seconds < r.limit else "FAIL"
    print(f"\n{verdict} {r.key}: {r.title} [{r.seconds:.2f}s < {r.limit:g}s]")
    bad = {k: v for k, v in r.details.items() if v is False}
    assert r.passed, bad or r.details
    assert r.seconds < r.limit
