"""Verification outcome rows shared by the exact, numeric and sweep layers."""

from __future__ import annotations

import time
from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped(hypothesis)"


def error_status(message) -> str:
    """Status string for an unexpected error, collapsed to a single line."""
    return "error(%s)" % " ".join(str(message).split())


@dataclass
class VerificationRecord:
    """One (p, m, a, check) outcome.

    For checks that do not depend on a (or m) the field holds a sentinel:
    a = 0, and a fixed m describing the check's context.
    """

    p: int
    m: int
    a: int
    check: str
    status: str
    expected: str
    actual: str
    elapsed_ms: float


def finish(p: int, m: int, a: int, check: str, passed: bool,
           expected: str, actual: str, t0: float) -> VerificationRecord:
    """Build a pass/fail record, timing from the perf_counter() start t0."""
    elapsed = (time.perf_counter() - t0) * 1000.0
    return VerificationRecord(p, m, a, check, PASS if passed else FAIL,
                              expected, actual, elapsed)
