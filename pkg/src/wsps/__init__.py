"""Solvers for weighted scheduling on a single shared processor.

Each job ``j`` runs on its own private processor and may also send part of
its work to one shared processor; the payoff is the weighted time both run
simultaneously. This package builds synchronized schedules, solves
antithetical instances exactly, computes the key-sequence 1/2-approximation
with its certificate, and offers an exhaustive oracle for small instances.
"""

from .antithetical import is_antithetical, solve_antithetical
from .core import (
    Instance,
    Job,
    ScheduledJob,
    SyncSchedule,
    Violation,
    build_schedule,
    normalize_instance,
    schedule_envelope,
    total_weighted_overlap,
    validate_schedule,
)
from .envelope import Envelope, envelope_area
from .errors import (
    BadParameters,
    BoundViolation,
    DuplicateId,
    EmptyInstance,
    EmptySchedule,
    InfeasiblePermutation,
    InstanceTooLarge,
    NegativeParameter,
    NotAntithetical,
    ParseError,
    UnknownJob,
    WspsError,
)
from .io import emit_instance, emit_schedule, parse_instance, parse_schedule, validate_document
from .keyseq import KeySequence, key_sequence, solve_keyseq, verify_key_conditions
from .oracle import OracleResult, brute_force_opt, optimal_envelope_area

__version__ = "0.1.0"


def __getattr__(name):
    # generators pull in numpy; keep it off the solve path
    if name == "generate":
        from .generators import generate

        return generate
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
