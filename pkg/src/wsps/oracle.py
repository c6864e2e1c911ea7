"""Exhaustive optimum over all feasible ordered subsets of jobs.

Some optimal schedule is synchronized, so enumerating ordered subsets finds
the global optimum. Start times grow along an order, so a job that cannot
be appended to a prefix can never be appended to any extension of it; the
search drops it from that branch.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import EMPTY_SCHEDULE, Instance, SyncSchedule, schedule_envelope, schedule_positions
from .envelope import envelope_area
from .errors import EmptySchedule, InstanceTooLarge

DEFAULT_LIMIT = 10


@dataclass(frozen=True)
class OracleResult:
    best_schedule: SyncSchedule
    optimum: float
    explored: int


def _search(jobs, first: int | None) -> tuple[float, tuple[int, ...], int]:
    """Depth-first search; returns (best value, best positions, feasible orders seen).

    With ``first`` given, only orders beginning with that position are
    searched (the empty order excluded).
    """
    n = len(jobs)
    ps = [j.p for j in jobs]
    ws = [j.w for j in jobs]
    best_value = -1.0
    best_path: tuple[int, ...] = ()
    explored = 0
    path: list[int] = []
    used = [False] * n

    def visit(start: float, value: float) -> None:
        nonlocal best_value, best_path, explored
        explored += 1
        if value > best_value:
            best_value = value
            best_path = tuple(path)
        for k in range(n):
            if used[k]:
                continue
            completion = (start + ps[k]) / 2
            if not completion > start:
                continue
            used[k] = True
            path.append(k)
            visit(completion, value + ws[k] * (completion - start))
            path.pop()
            used[k] = False

    if first is None:
        visit(0.0, 0.0)
    else:
        completion = ps[first] / 2
        used[first] = True
        path.append(first)
        visit(completion, ws[first] * completion)
    return best_value, best_path, explored


def brute_force_opt(instance: Instance, limit: int = DEFAULT_LIMIT, workers: int | None = None) -> OracleResult:
    """Best synchronized schedule by exhaustive search.

    Ties go to the order met first when positions are tried in ascending
    order, prefixes before extensions. With ``workers > 1`` the branches for
    each first job are searched in separate processes and merged with the
    same tie-break.
    """
    n = len(instance)
    if n > limit:
        raise InstanceTooLarge(n, limit)
    jobs = instance.jobs
    if workers is None or workers <= 1 or n < 2:
        _, path, explored = _search(jobs, None)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            branches = list(pool.map(_search, [jobs] * n, range(n)))
        best_value, path, explored = 0.0, (), 1
        for value, branch_path, count in branches:
            explored += count
            if value > best_value:
                best_value, path = value, branch_path
    # values are re-derived through the schedule builder so the reported
    # optimum is bit-identical to Omega of the returned schedule
    schedule = schedule_positions(instance, path) if path else EMPTY_SCHEDULE
    return OracleResult(schedule, schedule.objective, explored)


def optimal_envelope_area(result: OracleResult) -> float:
    """Area of the envelope drawn by the optimal schedule's completions and weights."""
    if not result.best_schedule.entries:
        raise EmptySchedule("oracle optimum is the empty schedule")
    return envelope_area(schedule_envelope(result.best_schedule))
