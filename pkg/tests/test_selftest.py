"""Tests for the built-in self test."""

from __future__ import annotations

import logging

import pytest
from syrupy.assertion import SnapshotAssertion

from radar_ambiguity.const import SELFTEST_SEARCH_RESTARTS
from radar_ambiguity.selftest import (
    SELFTEST_DESCRIPTIONS,
    SelfTestDescription,
    SelfTestResult,
    format_table,
    run_selftest,
)


def _boom() -> bool:
    raise ValueError("broken")


class TestSelfTest:
    """Tests for running and reporting checks."""

    def test_all_checks_pass(self) -> None:
        """Test every built-in check passes."""
        results = run_selftest()
        assert [r.key for r in results if not r.passed] == []
        assert len(results) == len(SELFTEST_DESCRIPTIONS)

    def test_keys_are_unique(self) -> None:
        """Test no two checks share a key."""
        keys = [d.key for d in SELFTEST_DESCRIPTIONS]
        assert len(keys) == len(set(keys))

    def test_keys_snapshot(self, snapshot: SnapshotAssertion) -> None:
        """Test the check keys and their order."""
        assert [d.key for d in SELFTEST_DESCRIPTIONS] == snapshot

    def test_search_check_is_seeded_and_short(
        self, caplog: pytest.LogCaptureFixture
    ) -> None:
        """Test the degree-two search check runs a reduced number of restarts."""
        caplog.set_level(logging.INFO)
        description = next(
            d for d in SELFTEST_DESCRIPTIONS if d.key == "degree_two_search_empty"
        )
        assert description.check_fn()
        assert f"{SELFTEST_SEARCH_RESTARTS} restarts" in caplog.text

    def test_exception_is_a_failure(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test a raising check is reported with its error."""
        descriptions = (
            SelfTestDescription(key="ok", name="passes", check_fn=lambda: True),
            SelfTestDescription(key="boom", name="raises", check_fn=_boom),
        )
        results = run_selftest(descriptions)
        assert results == [
            SelfTestResult("ok", "passes", True),
            SelfTestResult("boom", "raises", False, "ValueError: broken"),
        ]
        assert "Self test boom failed ValueError: broken" in caplog.text

    def test_format_table(self) -> None:
        """Test the table aligns keys and appends details."""
        table = format_table(
            [
                SelfTestResult("a", "first", True),
                SelfTestResult("longer", "second", False, "why"),
            ]
        )
        assert table.splitlines() == [
            "PASS  a       first",
            "FAIL  longer  second (why)",
        ]

    def test_to_dict(self) -> None:
        """Test the JSON row."""
        assert SelfTestResult("k", "n", False, "d").to_dict() == {
            "key": "k",
            "name": "n",
            "passed": False,
            "detail": "d",
        }
