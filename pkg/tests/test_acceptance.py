"""Acceptance gate: every criterion at full scale, one pass/fail line each.

Run directly (``python tests/test_acceptance.py``) for the summary alone, or
through pytest, where the lines are also printed in the terminal summary.
"""

import pytest

from cyclohecke.checks import CRITERIA

RESULTS = {}


def _line(res) -> str:
    status = "PASS" if res.passed else "FAIL"
    return f"criterion {res.number:2d} {status}: {res.title} ({res.cases} cases, {res.seconds:.1f}s)"


def _run(number):
    import time

    t = time.perf_counter()
    res = CRITERIA[number - 1]("full")
    res.seconds = time.perf_counter() - t
    RESULTS[number] = res
    return res


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    res = _run(number)
    print(_line(res))
    assert res.passed, "\n".join(res.failures)


if __name__ == "__main__":
    import sys

    ok = True
    for k in range(1, len(CRITERIA) + 1):
        res = _run(k)
        ok &= res.passed
        print(_line(res))
        for f in res.failures:
            print(f"    {f}")
    sys.exit(0 if ok else 1)
