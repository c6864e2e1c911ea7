"""Exact solver for antithetical instances (shorter jobs never lighter)."""

from __future__ import annotations

from operator import lt

from .core import Instance, SyncSchedule, schedule_positions
from .errors import NotAntithetical


def is_antithetical(instance: Instance) -> bool:
    """True iff ``p_i <= p_j`` implies ``w_i >= w_j`` for every pair of jobs.

    On the sorted job list this means weights never increase, and jobs of
    equal length carry equal weight (the implication applies both ways).
    """
    ws = [job.w for job in instance.jobs]
    return not any(map(lt, ws, ws[1:]))


def solve_antithetical(instance: Instance) -> SyncSchedule:
    """Optimal schedule: every job on the shared processor, shortest first.

    The shortest-first order is always feasible since each start stays below
    the previous job's length. Raises :class:`NotAntithetical` otherwise.

    In float64 a run of roughly 50+ jobs of one length pushes the start time
    onto that length; such jobs have an exact overlap below ``p * 2**-53``
    and are left off the shared processor.
    """
    if not is_antithetical(instance):
        raise NotAntithetical("instance has a job pair with p_i <= p_j and w_i < w_j")
    return schedule_positions(instance, range(len(instance)), skip_collapsed=True)
