"""Shared record of acceptance results, printed by the terminal summary hook."""

import time
from contextlib import contextmanager

RESULTS = []


@contextmanager
def criterion(number, title):
    notes = []
    start = time.perf_counter()
    try:
        yield notes
    except BaseException:
        RESULTS.append((number, title, False, time.perf_counter() - start, "; ".join(notes)))
        print(f"criterion {number}: FAIL  {title}")
        raise
    RESULTS.append((number, title, True, time.perf_counter() - start, "; ".join(notes)))
    print(f"criterion {number}: PASS  {title}")


def passed(number):
    return any(n == number and ok for n, _, ok, _, _ in RESULTS)
