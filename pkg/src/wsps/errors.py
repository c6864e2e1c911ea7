"""Exception types raised by the solvers and the I/O layer."""

from __future__ import annotations


class WspsError(Exception):
    """Base class for every error raised by this package."""


class NegativeParameter(WspsError, ValueError):
    def __init__(self, job_id: str, field: str, value: float) -> None:
        self.job_id = job_id
        self.field = field
        self.value = value
        super().__init__(f"job {job_id!r}: {field}={value!r} is negative")


class DuplicateId(WspsError, ValueError):
    def __init__(self, job_id: str) -> None:
        self.job_id = job_id
        super().__init__(f"duplicate job id {job_id!r}")


class UnknownJob(WspsError, KeyError):
    def __init__(self, job_id: str) -> None:
        self.job_id = job_id
        super().__init__(job_id)

    def __str__(self) -> str:
        return f"unknown job id {self.job_id!r}"


class InfeasiblePermutation(WspsError, ValueError):
    """A job would start on the shared processor at or after its own length."""

    def __init__(self, job_id: str, start: float, p: float) -> None:
        self.job_id = job_id
        self.start = start
        self.p = p
        super().__init__(
            f"job {job_id!r} would start at {start!r} >= p={p!r}; "
            "its shared interval is empty"
        )


class EmptySchedule(WspsError, ValueError):
    pass


class EmptyInstance(WspsError, ValueError):
    pass


class NotAntithetical(WspsError, ValueError):
    pass


class InstanceTooLarge(WspsError, ValueError):
    def __init__(self, n: int, limit: int) -> None:
        self.n = n
        self.limit = limit
        super().__init__(f"instance has {n} jobs, oracle limit is {limit}")


class BadParameters(WspsError, ValueError):
    pass


class BoundViolation(WspsError, AssertionError):
    """An approximation ratio fell below the proven guarantee."""


class ParseError(WspsError, ValueError):
    """Malformed instance or schedule document.

    ``line`` and ``field`` locate the problem when known.
    """

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None) -> None:
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
