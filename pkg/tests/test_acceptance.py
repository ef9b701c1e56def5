"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time

import pytest

from isomf.acceptance import CRITERIA

# wall-clock limits (seconds) for criteria that carry one
TIME_LIMITS = {1: 1.0, 4: 10.0, 5: 60.0, 8: 30.0}


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=[CRITERIA[i][0] for i in sorted(CRITERIA)])
def test_criterion(number, capsys):
    name, run = CRITERIA[number]
    start = time.perf_counter()
    report = run()
    elapsed = time.perf_counter() - start
    limit = TIME_LIMITS.get(number)
    in_time = limit is None or elapsed < limit
    ok = report.passed and in_time
    line = f"criterion {number:2d} {name:<20} {'PASS' if ok else 'FAIL'}  cases={report.cases}  {elapsed:.2f}s"
    if limit is not None:
        line += f" (limit {limit:g}s)"
    with capsys.disabled():
        print("\n" + line)
    assert report.passed, report.to_json()
    assert in_time, f"{name} took {elapsed:.2f}s, limit {limit}s"
