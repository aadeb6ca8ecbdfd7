"""Acceptance gate: one test per criterion, each printing its pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines,
or `lieram selftest` for the same suites from the command line.  Tolerances
are exact everywhere; the stated runtime caps (1 s / 10 s / 60 s) are enforced
inside the corresponding suites.
"""

import pytest

from lieram.selftest import SUITES

CRITERIA = [
    ("criterion-1-sl2-quantum-example", "sl2_quantum"),
    ("criterion-2-appendix-verification", "appendix"),
    ("criterion-3-rank-identities", "rank_identities"),
    ("criterion-4-block-count-oracle", "block_count_oracle"),
    ("criterion-5-unramified-counts", "unramified_counts"),
    ("criterion-6-criterion-equivalences", "criterion_equivalences"),
    ("criterion-7-poincare-suite", "poincare"),
    ("criterion-8-steinberg", "steinberg"),
    ("criterion-9-stabilizer-agreement", "stabilizers"),
]


@pytest.mark.parametrize("label,suite", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(label, suite):
    result = SUITES[suite]()
    print(result.line())
    assert result.ok, f"{label}: {result.detail}"
