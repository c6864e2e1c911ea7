import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from wsps import Job, normalize_instance

_ACCEPTANCE_LINES = []


def make(ps, ws, ids=None):
    """Instance with ids "1".."n" in input order (matches 1-based examples)."""
    ids = ids or [str(i + 1) for i in range(len(ps))]
    return normalize_instance(Job(i, p, w) for i, p, w in zip(ids, ps, ws))


def exact_value(instance, positions):
    """Objective of an order in exact rational arithmetic, or None if infeasible."""
    start = Fraction(0)
    total = Fraction(0)
    for pos in positions:
        job = instance.jobs[pos]
        p = Fraction(job.p)
        if not start < p:
            return None
        completion = (start + p) / 2
        total += Fraction(job.w) * (completion - start)
        start = completion
    return total


def all_ordered_subsets(n):
    for k in range(n + 1):
        yield from itertools.permutations(range(n), k)


def exhaustive_opt(instance):
    """Unpruned enumeration in exact arithmetic: independent of the oracle module."""
    best = Fraction(0)
    for order in all_ordered_subsets(len(instance)):
        value = exact_value(instance, order)
        if value is not None and value > best:
            best = value
    return best


def close(a, b, rel=1e-9):
    return abs(a - b) <= rel * max(abs(a), abs(b), 1e-300)


small_numbers = st.integers(min_value=1, max_value=20).map(float)
weights = st.integers(min_value=0, max_value=20).map(float)


@st.composite
def instances(draw, min_size=1, max_size=6, ps=small_numbers, ws=weights):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    return make(draw(st.lists(ps, min_size=n, max_size=n)), draw(st.lists(ws, min_size=n, max_size=n)))


@st.composite
def antithetical_instances(draw, min_size=1, max_size=7):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    ps = sorted(draw(st.lists(small_numbers, min_size=n, max_size=n)))
    ws = sorted(draw(st.lists(weights, min_size=n, max_size=n)), reverse=True)
    for i in range(1, n):
        if ps[i] == ps[i - 1]:
            ws[i] = ws[i - 1]
    return make(ps, ws)


@pytest.fixture
def acceptance_line():
    def record(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
