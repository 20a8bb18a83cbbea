"""The verification-suite layer shared by the CLI and the acceptance tests."""

import pytest

from cmvpencil.errors import InvalidParameterError
from cmvpencil.verify import SUITES, CheckResult, run_all, run_suite


def test_unknown_suite_rejected():
    with pytest.raises(InvalidParameterError):
        run_suite("no-such-suite")


def test_checkresult_serialization():
    r = CheckResult(label="x", passed=True, value=1.5, tol=2.0, details={"k": 1})
    d = r.to_dict()
    assert d == {"label": "x", "passed": True, "value": 1.5, "tol": 2.0, "details": {"k": 1}}


def test_suite_overrides():
    results = run_suite("matrix-identities", dim=16)
    assert all(r.passed for r in results)
    assert "dim=16" in results[0].label
    single = run_suite("big-m1", cases=[(0.0, 0.0, 2.0)])
    assert len(single) == 1 and single[0].passed


def test_run_all_covers_every_suite():
    outcome = run_all()
    assert set(outcome) == set(SUITES)
    assert all(r.passed for results in outcome.values() for r in results)
