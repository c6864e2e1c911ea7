"""JSON instance and schedule documents.

Instance::

    {"jobs": [{"id": "a", "p": 4, "w": 3}, ...]}

Schedule::

    {"algorithm": "keyseq", "objective": 7.5, "certificate": 13.0,
     "shared": [{"id": "a", "start": 0.0, "end": 2.0}, ...],
     "private_completions": [{"id": "c", "end": 3.0}, ...]}

``private_completions`` covers jobs that stay off the shared processor.

Floats are written in shortest round-trip form, so every value survives a
round trip bit-for-bit.
"""

from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from typing import Any

import orjson

from .core import (
    PRIVATE_COMPLETION,
    SYNC,
    UNKNOWN_JOB,
    Instance,
    Job,
    ScheduledJob,
    SyncSchedule,
    Violation,
    bulk_allocation,
    normalize_columns,
    normalize_instance,
    validate_schedule,
)
from .errors import ParseError


def _load(text: str | bytes) -> Any:
    try:
        return orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None


def _number(value: Any, field: str) -> float:
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}", field=field)
    if isinstance(value, (int, float)):
        x = float(value)
    elif isinstance(value, str):
        try:
            x = float(Decimal(value.strip()))
        except InvalidOperation:
            raise ParseError(f"not a decimal: {value!r}", field=field) from None
    else:
        raise ParseError(f"expected a number, got {type(value).__name__}", field=field)
    if not math.isfinite(x):
        raise ParseError(f"not a finite number: {value!r}", field=field)
    return x


def _job_list(doc: Any, key: str) -> list:
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    items = doc.get(key)
    if not isinstance(items, list):
        raise ParseError("missing list", field=key)
    return items


def _entry(item: Any, field: str, keys: tuple[str, ...]) -> dict:
    if not isinstance(item, dict):
        raise ParseError("expected an object", field=field)
    for k in keys:
        if k not in item:
            raise ParseError(f"missing key {k!r}", field=field)
    job_id = item["id"]
    if not isinstance(job_id, str):
        raise ParseError(f"id must be a string, got {job_id!r}", field=f"{field}.id")
    return item


def parse_instance(text: str | bytes) -> Instance:
    """Parse an instance document and normalize it.

    Raises :class:`ParseError` with line or field context on malformed input,
    and the normalization errors for negative parameters or repeated ids.
    """
    with bulk_allocation():
        items = _job_list(_load(text), "jobs")
        columns = _fast_columns(items)
        if columns is not None:
            return normalize_columns(*columns)
        raw = []
        for i, item in enumerate(items):
            field = f"jobs[{i}]"
            item = _entry(item, field, ("id", "p", "w"))
            raw.append(Job(item["id"], _number(item["p"], f"{field}.p"), _number(item["w"], f"{field}.w")))
        return normalize_instance(raw)


_NUMBER_TYPES = {int, float}


def _fast_columns(items: list) -> tuple[list, list, list] | None:
    """Bulk conversion for well-formed job lists; None sends the caller down the checked path."""
    try:
        ids = [item["id"] for item in items]
        ps = [item["p"] for item in items]
        ws = [item["w"] for item in items]
    except (KeyError, TypeError):
        return None
    if not set(map(type, ids)) <= {str}:
        return None
    if not (set(map(type, ps)) | set(map(type, ws))) <= _NUMBER_TYPES:
        return None
    ps = list(map(float, ps))
    ws = list(map(float, ws))
    if not (all(map(math.isfinite, ps)) and all(map(math.isfinite, ws))):
        return None
    return ids, ps, ws


def emit_instance(instance: Instance) -> str:
    with bulk_allocation():
        jobs = [{"id": i, "p": p, "w": w} for i, p, w in instance.jobs]
        return _dumps({"jobs": jobs})


def _dumps(doc: dict) -> str:
    return _dump_bytes(doc).decode()


def _dump_bytes(doc: dict) -> bytes:
    return orjson.dumps(doc, option=orjson.OPT_INDENT_2) + b"\n"


def schedule_document(
    schedule: SyncSchedule,
    algorithm: str,
    certificate: float | None = None,
    instance: Instance | None = None,
) -> dict:
    """The schedule document as plain JSON-ready data; see :func:`emit_schedule`."""
    with bulk_allocation():
        entries = schedule.entries
        shared = [{"id": job[0], "start": start, "end": end} for job, start, end in entries]
        private = []
        if instance is not None:
            on_shared = set(schedule.order)
            private = [{"id": i, "end": p} for i, p, _ in instance.jobs if i not in on_shared]
        return {
            "algorithm": algorithm,
            "objective": schedule.objective,
            "certificate": None if certificate is None else float(certificate),
            "shared": shared,
            "private_completions": private,
        }


def emit_schedule(
    schedule: SyncSchedule,
    algorithm: str,
    certificate: float | None = None,
    instance: Instance | None = None,
) -> str:
    """Serialize ``schedule`` as a schedule document.

    ``private_completions`` lists the jobs of ``instance`` (when given) that
    never use the shared processor; each finishes at its own ``p``. A shared
    job finishes privately at its shared ``end``, so it is not repeated there.
    """
    return _dumps(schedule_document(schedule, algorithm, certificate, instance))


def write_schedule(path, schedule, algorithm, certificate=None, instance=None) -> None:
    """:func:`emit_schedule` straight to a file, skipping the str round trip."""
    data = _dump_bytes(schedule_document(schedule, algorithm, certificate, instance))
    with open(path, "wb") as fh:
        fh.write(data)


def parse_schedule(text: str | bytes, instance: Instance) -> tuple[SyncSchedule, dict]:
    """Read a schedule document against ``instance``.

    Returns the schedule and the document's other fields (``algorithm``,
    ``certificate``, and ``private_completions`` as an id to end-time dict).
    Shared entries naming jobs absent from the instance are kept with
    ``p = w = nan`` so that validation can report them.
    """
    doc = _load(text)
    items = _job_list(doc, "shared")
    entries = []
    for i, item in enumerate(items):
        field = f"shared[{i}]"
        item = _entry(item, field, ("id", "start", "end"))
        job_id = item["id"]
        pos = instance.position.get(job_id)
        job = instance.jobs[pos] if pos is not None else Job(job_id, math.nan, math.nan)
        entries.append(
            ScheduledJob(job, _number(item["start"], f"{field}.start"), _number(item["end"], f"{field}.end"))
        )
    if "objective" not in doc:
        raise ParseError("missing key 'objective'")
    objective = _number(doc["objective"], "objective")
    certificate = doc.get("certificate")
    if certificate is not None:
        certificate = _number(certificate, "certificate")
    private = {}
    for i, item in enumerate(doc.get("private_completions", [])):
        field = f"private_completions[{i}]"
        item = _entry(item, field, ("id", "end"))
        private[item["id"]] = _number(item["end"], f"{field}.end")
    extra = {"algorithm": doc.get("algorithm"), "certificate": certificate, "private_completions": private}
    return SyncSchedule(tuple(entries), objective), extra


def validate_document(instance: Instance, text: str | bytes, rel_tol: float = 1e-9) -> list[Violation]:
    """Validate a schedule document, including its private completion times."""
    schedule, extra = parse_schedule(text, instance)
    out = validate_schedule(instance, schedule, rel_tol)
    shared = {e.job.id: e.completion for e in schedule.entries}
    for job_id, end in extra["private_completions"].items():
        pos = instance.position.get(job_id)
        if pos is None:
            out.append(Violation(UNKNOWN_JOB, job_id, "private completion for a job not in instance"))
            continue
        if job_id in shared:
            if not math.isclose(end, shared[job_id], rel_tol=rel_tol, abs_tol=rel_tol * 1e-3):
                out.append(
                    Violation(SYNC, job_id, f"private end {end!r} differs from shared end {shared[job_id]!r}")
                )
        elif not math.isclose(end, instance.jobs[pos].p, rel_tol=rel_tol, abs_tol=rel_tol * 1e-3):
            out.append(
                Violation(
                    PRIVATE_COMPLETION,
                    job_id,
                    f"private-only job ends at {end!r}, not at p={instance.jobs[pos].p!r}",
                )
            )
    return out
