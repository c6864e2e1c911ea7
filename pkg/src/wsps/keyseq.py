"""Key-sequence 1/2-approximation with its envelope certificate.

The key sequence is built right to left: the last (longest) job always
belongs to it, and a shorter job joins exactly when it is strictly heavier
than everything to its right. Scheduling those jobs shortest first gives at
least half of the upper-envelope area, and that area bounds the optimum
from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Instance, SyncSchedule, schedule_positions
from .envelope import Envelope, envelope_area
from .errors import EmptyInstance


@dataclass(frozen=True)
class KeySequence:
    """Zero-based instance positions of the key jobs plus the upper envelope."""

    indices: tuple[int, ...]
    upper_envelope: Envelope

    @property
    def ustar(self) -> float:
        return envelope_area(self.upper_envelope)


def key_sequence(instance: Instance) -> KeySequence:
    jobs = instance.jobs
    if not jobs:
        raise EmptyInstance("key sequence of an empty instance")
    picked = [len(jobs) - 1]
    heaviest = jobs[-1].w
    for pos in range(len(jobs) - 2, -1, -1):
        w = jobs[pos].w
        if w > heaviest:
            picked.append(pos)
            heaviest = w
    picked.reverse()
    envelope = Envelope(tuple(jobs[i].p for i in picked), tuple(jobs[i].w for i in picked))
    return KeySequence(tuple(picked), envelope)


def verify_key_conditions(instance: Instance, indices: Sequence[int]) -> bool:
    """Check the three defining conditions of a key sequence, literally.

    ``indices`` are zero-based positions into ``instance.jobs``. The sequence
    must end at the last job, have strictly decreasing weights, and each key
    job must be at least as heavy as every job between it and the previous
    key job.
    """
    jobs = instance.jobs
    n = len(jobs)
    if not indices or list(indices) != sorted(set(indices)):
        return False
    if indices[0] < 0 or indices[-1] != n - 1:
        return False
    weights = [jobs[i].w for i in indices]
    if any(a <= b for a, b in zip(weights, weights[1:])):
        return False
    prev = -1
    for i in indices:
        if any(jobs[k].w > jobs[i].w for k in range(prev + 1, i + 1)):
            return False
        prev = i
    return True


def solve_keyseq(instance: Instance) -> tuple[SyncSchedule, float]:
    """Schedule the key jobs shortest first; return it with the certificate u*.

    The returned value ``omega`` satisfies ``u*/2 <= omega <= optimum <= u*``.
    """
    key = key_sequence(instance)
    return schedule_positions(instance, key.indices, skip_collapsed=True), key.ustar
