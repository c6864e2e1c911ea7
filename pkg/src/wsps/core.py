"""Jobs, instances and synchronized schedules.

A synchronized schedule is fully determined by the ordered list of jobs that
use the shared processor: the first starts at 0, each one starts when its
predecessor completes, and a job started at ``s`` finishes on both the shared
and its private processor at ``(s + p) / 2``.
"""

from __future__ import annotations

import gc
import math
from contextlib import contextmanager
from itertools import accumulate, repeat
from dataclasses import dataclass
from functools import cached_property
from operator import gt, itemgetter, mul, sub
from typing import Iterable, NamedTuple, Sequence

from .envelope import Envelope
from .errors import (
    BadParameters,
    DuplicateId,
    EmptySchedule,
    InfeasiblePermutation,
    NegativeParameter,
    UnknownJob,
)


class Job(NamedTuple):
    id: str
    p: float
    w: float


_sort_key = itemgetter(1, 2)
_id_of = itemgetter(0)
_p_of = itemgetter(1)
_w_of = itemgetter(2)
_job_of, _start_of, _completion_of = itemgetter(0), itemgetter(1), itemgetter(2)
# builds NamedTuple instances without the Python-level __new__
_new_tuple = tuple.__new__


@contextmanager
def bulk_allocation():
    """Pause the cyclic garbage collector while building millions of tuples."""
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def _first_duplicate(ids: Iterable[str]) -> str:
    seen = set()
    for job_id in ids:
        if job_id in seen:
            return job_id
        seen.add(job_id)
    raise AssertionError("no duplicate id")


@dataclass(frozen=True)
class Instance:
    """Jobs sorted by processing time, ties broken by ascending weight.

    Build one with :func:`normalize_instance`; the constructor only checks
    that the ordering and id invariants already hold.
    """

    jobs: tuple[Job, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "jobs", tuple(self.jobs))
        keys = list(map(_sort_key, self.jobs))
        if any(map(gt, keys, keys[1:])):
            i = next(i for i in range(1, len(keys)) if keys[i - 1] > keys[i])
            raise ValueError(f"jobs out of (p, w) order at position {i}")
        if len(self.position) != len(self.jobs):
            raise DuplicateId(_first_duplicate(self.ids))

    @classmethod
    def _trusted(cls, jobs: tuple[Job, ...]) -> Instance:
        # caller guarantees sorted, unique-id jobs
        obj = object.__new__(cls)
        object.__setattr__(obj, "jobs", jobs)
        return obj

    def __len__(self) -> int:
        return len(self.jobs)

    def __iter__(self):
        return iter(self.jobs)

    def __getitem__(self, pos: int) -> Job:
        return self.jobs[pos]

    @cached_property
    def position(self) -> dict[str, int]:
        """Map from job id to its index in ``jobs``."""
        return dict(zip(self.ids, range(len(self.jobs))))

    def job(self, job_id: str) -> Job:
        try:
            return self.jobs[self.position[job_id]]
        except KeyError:
            raise UnknownJob(job_id) from None

    @property
    def ids(self) -> list[str]:
        return list(map(_id_of, self.jobs))


def normalize_instance(raw_jobs: Iterable[Job | tuple[str, float, float]]) -> Instance:
    """Drop zero-length jobs and sort the rest by ``(p, w)``.

    >>> [j.id for j in normalize_instance([("a", 2, 1), ("b", 1, 5)])]
    ['b', 'a']
    """
    with bulk_allocation():
        raw = list(raw_jobs)
        return normalize_columns(list(map(_id_of, raw)), list(map(_p_of, raw)), list(map(_w_of, raw)))


def normalize_columns(ids: Sequence[str], ps: Sequence[float], ws: Sequence[float]) -> Instance:
    """:func:`normalize_instance` for jobs given as parallel id, p and w lists."""
    if not ids:
        return Instance(())
    with bulk_allocation():
        if not (all(map(math.isfinite, ps)) and all(map(math.isfinite, ws))):
            raise BadParameters("processing times and weights must be finite")
        if min(ps) < 0:
            i = next(i for i, p in enumerate(ps) if p < 0)
            raise NegativeParameter(ids[i], "p", ps[i])
        if min(ws) < 0:
            i = next(i for i, w in enumerate(ws) if w < 0)
            raise NegativeParameter(ids[i], "w", ws[i])
        if len(set(ids)) != len(ids):
            raise DuplicateId(_first_duplicate(ids))
        kept = list(map(_new_tuple, repeat(Job), zip(ids, map(float, ps), map(float, ws))))
        if min(ps) == 0:
            kept = [job for job in kept if job.p > 0]
        kept.sort(key=_sort_key)
        return Instance._trusted(tuple(kept))


class ScheduledJob(NamedTuple):
    job: Job
    start: float
    completion: float

    @property
    def overlap(self) -> float:
        return self.completion - self.start


@dataclass(frozen=True)
class SyncSchedule:
    """Jobs on the shared processor, in processing order, with derived times.

    Jobs of the instance that are not listed run only on their private
    processors and finish at their own ``p``.
    """

    entries: tuple[ScheduledJob, ...]
    objective: float

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def order(self) -> tuple[str, ...]:
        return tuple(e.job.id for e in self.entries)

    @property
    def starts(self) -> tuple[float, ...]:
        return tuple(e.start for e in self.entries)

    @property
    def completions(self) -> tuple[float, ...]:
        return tuple(e.completion for e in self.entries)

    @property
    def makespan(self) -> float:
        """Time at which the shared processor becomes idle."""
        return self.entries[-1].completion if self.entries else 0.0


EMPTY_SCHEDULE = SyncSchedule((), 0.0)


def _objective(entries: Sequence[ScheduledJob]) -> float:
    overlaps = map(sub, map(_completion_of, entries), map(_start_of, entries))
    return math.fsum(map(mul, map(_w_of, map(_job_of, entries)), overlaps))


def schedule_positions(
    instance: Instance, positions: Iterable[int], skip_collapsed: bool = False
) -> SyncSchedule:
    """Build the synchronized schedule for jobs at the given instance positions.

    With ``skip_collapsed`` a job whose interval rounds to zero length is left
    on its private processor instead of raising. That only happens after a
    long run of near-equal lengths drives the start time to within one ulp of
    ``p``, where the exact overlap is below ``p * 2**-53``.
    """
    jobs = instance.jobs
    with bulk_allocation():
        chosen = [jobs[pos] for pos in positions]
        ends = list(accumulate(map(_p_of, chosen), _halfway, initial=0.0))
        starts, completions = ends[:-1], ends[1:]
        if not all(map(gt, completions, starts)):
            return _schedule_checked(chosen, skip_collapsed)
        entries = list(map(_new_tuple, repeat(ScheduledJob), zip(chosen, starts, completions)))
        return SyncSchedule(tuple(entries), _objective(entries))


def _halfway(start: float, p: float) -> float:
    return (start + p) / 2


def _schedule_checked(chosen: list[Job], skip_collapsed: bool) -> SyncSchedule:
    entries = []
    start = 0.0
    for job in chosen:
        completion = (start + job.p) / 2
        if not completion > start:
            if skip_collapsed:
                continue
            raise InfeasiblePermutation(job.id, start, job.p)
        entries.append(ScheduledJob(job, start, completion))
        start = completion
    return SyncSchedule(tuple(entries), _objective(entries))


def build_schedule(instance: Instance, order: Sequence[str]) -> SyncSchedule:
    """Synchronized schedule running the jobs named in ``order`` on the shared processor.

    Raises :class:`InfeasiblePermutation` when some job would start at or
    after its own processing time, and :class:`UnknownJob` for ids not in the
    instance. Repeated ids are rejected with ``ValueError``.
    """
    position = instance.position
    positions = []
    for job_id in order:
        try:
            positions.append(position[job_id])
        except KeyError:
            raise UnknownJob(job_id) from None
    if len(set(positions)) != len(positions):
        raise ValueError("order lists a job more than once")
    return schedule_positions(instance, positions)


def total_weighted_overlap(schedule: SyncSchedule) -> float:
    return _objective(schedule.entries)


def schedule_envelope(schedule: SyncSchedule) -> Envelope:
    """Step function with a step per scheduled job: its weight up to its completion time."""
    if not schedule.entries:
        raise EmptySchedule("an empty schedule has no envelope")
    return Envelope(schedule.completions, tuple(e.job.w for e in schedule.entries))


# violation kinds reported by validate_schedule
GAP = "GapViolation"
OVERLAP = "OverlapViolation"
SYNC = "SyncViolation"
EMPTY_INTERVAL = "EmptyIntervalViolation"
UNKNOWN_JOB = "UnknownJobViolation"
DUPLICATE_JOB = "DuplicateJobViolation"
PARAMETER_MISMATCH = "ParameterMismatchViolation"
OBJECTIVE_MISMATCH = "ObjectiveMismatchViolation"
PRIVATE_COMPLETION = "PrivateCompletionViolation"


@dataclass(frozen=True)
class Violation:
    kind: str
    job_id: str | None
    detail: str

    def __str__(self) -> str:
        who = f" [{self.job_id}]" if self.job_id is not None else ""
        return f"{self.kind}{who}: {self.detail}"


def _close(a: float, b: float, rel_tol: float) -> bool:
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=rel_tol * 1e-3)


def validate_schedule(
    instance: Instance, schedule: SyncSchedule, rel_tol: float = 1e-9
) -> list[Violation]:
    """Re-derive every schedule invariant against ``instance``.

    Returns one :class:`Violation` per broken invariant; an empty list means
    the schedule is a valid synchronized schedule for the instance.
    """
    out: list[Violation] = []
    seen: set[str] = set()
    derived_terms: list[float] = []
    prev_completion = 0.0
    for i, entry in enumerate(schedule.entries):
        job_id = entry.job.id
        if job_id in seen:
            out.append(Violation(DUPLICATE_JOB, job_id, f"appears again at position {i}"))
        seen.add(job_id)

        ref = instance.position.get(job_id)
        p = None
        if ref is None:
            out.append(Violation(UNKNOWN_JOB, job_id, "not in instance"))
        else:
            job = instance.jobs[ref]
            p = job.p
            if job.p != entry.job.p or job.w != entry.job.w:
                out.append(
                    Violation(
                        PARAMETER_MISMATCH,
                        job_id,
                        f"(p, w)=({entry.job.p!r}, {entry.job.w!r}), "
                        f"instance has ({job.p!r}, {job.w!r})",
                    )
                )

        if not _close(entry.start, prev_completion, rel_tol):
            if entry.start > prev_completion:
                where = "time 0" if i == 0 else "previous completion"
                out.append(
                    Violation(GAP, job_id, f"starts at {entry.start!r}, idle after {where} {prev_completion!r}")
                )
            else:
                out.append(
                    Violation(
                        OVERLAP, job_id, f"starts at {entry.start!r} before previous completion {prev_completion!r}"
                    )
                )
        if p is not None:
            if not entry.start < p or not entry.completion > entry.start:
                out.append(
                    Violation(
                        EMPTY_INTERVAL,
                        job_id,
                        f"interval [{entry.start!r}, {entry.completion!r}] with p={p!r} has no positive overlap",
                    )
                )
            expected = (entry.start + p) / 2
            if not _close(entry.completion, expected, rel_tol):
                out.append(
                    Violation(
                        SYNC, job_id, f"completes at {entry.completion!r}, synchronized completion is {expected!r}"
                    )
                )
            derived_terms.append(instance.jobs[ref].w * entry.overlap)
        prev_completion = entry.completion

    derived = math.fsum(derived_terms)
    if not _close(schedule.objective, derived, rel_tol):
        out.append(
            Violation(OBJECTIVE_MISMATCH, None, f"stored objective {schedule.objective!r}, derived {derived!r}")
        )
    return out
