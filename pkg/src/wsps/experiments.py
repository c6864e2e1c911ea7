"""Empirical approximation ratios and runtime scaling."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field

import numpy as np

from .antithetical import solve_antithetical
from .core import normalize_instance
from .errors import BoundViolation, InstanceTooLarge
from .generators import generate
from .keyseq import solve_keyseq
from .oracle import DEFAULT_LIMIT, brute_force_opt

RATIO_SLACK = 1e-9


@dataclass
class RatioReport:
    count: int
    n: int
    seed: int
    key_over_opt: list[float] = field(default_factory=list)
    key_over_ustar: list[float] = field(default_factory=list)

    def summary(self) -> dict:
        if not self.key_over_opt:
            return {"count": 0, "n": self.n, "seed": self.seed}
        return {
            "count": self.count,
            "n": self.n,
            "seed": self.seed,
            "min_key_over_opt": min(self.key_over_opt),
            "mean_key_over_opt": statistics.fmean(self.key_over_opt),
            "min_key_over_ustar": min(self.key_over_ustar),
            "mean_key_over_ustar": statistics.fmean(self.key_over_ustar),
        }


def run_ratio_experiment(
    count: int, n: int, seed: int = 0, limit: int = DEFAULT_LIMIT, **ranges
) -> RatioReport:
    """Compare the key-sequence schedule with the exhaustive optimum on random instances.

    Raises :class:`BoundViolation` if any ratio to the optimum drops below 1/2.
    Instances where everything is worthless (optimum 0) are skipped in the
    ratio columns.
    """
    if n > limit:
        raise InstanceTooLarge(n, limit)
    report = RatioReport(count, n, seed)
    seeds = np.random.default_rng(seed).integers(0, 2**63 - 1, size=count)
    for s in seeds.tolist():
        instance = generate("uniform", n, s, **ranges)
        schedule, ustar = solve_keyseq(instance)
        opt = brute_force_opt(instance, limit).optimum
        if opt > 0:
            report.key_over_opt.append(schedule.objective / opt)
        if ustar > 0:
            report.key_over_ustar.append(schedule.objective / ustar)
    if report.key_over_opt and min(report.key_over_opt) < 0.5 - RATIO_SLACK:
        raise BoundViolation(f"key/opt ratio {min(report.key_over_opt)!r} below 1/2")
    return report


def tightness_table(sizes=range(2, 11), p: float = 1.0, w: float = 1.0) -> list[dict]:
    """Key-sequence value against the all-jobs schedule on ``n`` identical jobs.

    Identical jobs are antithetical, so the all-jobs schedule is optimal.
    """
    rows = []
    for n in sizes:
        instance = generate("tight", n, p_range=(p, p), w_range=(w, w))
        key, _ = solve_keyseq(instance)
        full = solve_antithetical(instance).objective
        rows.append(
            {
                "n": n,
                "key": key.objective,
                "all_jobs": full,
                "ratio": key.objective / full,
                "closed_form": 0.5 / (1 - 2.0**-n),
            }
        )
    return rows


def bench(sizes=(10**4, 10**5, 10**6), repeats: int = 3, seed: int = 0) -> list[dict]:
    """Best-of-``repeats`` wall clock for normalize+solve at each size.

    ``spt`` runs on antithetical instances and ``keyseq`` on uniform ones.
    The ``exponent`` column is the log-log slope against the previous size.
    """
    rows = []
    for algo, kind in (("spt", "antithetical"), ("keyseq", "uniform")):
        prev = None
        for n in sizes:
            raw = list(generate(kind, n, seed).jobs)
            raw.reverse()
            best = math.inf
            for _ in range(repeats):
                t0 = time.perf_counter()
                instance = normalize_instance(raw)
                if algo == "spt":
                    solve_antithetical(instance)
                else:
                    solve_keyseq(instance)
                best = min(best, time.perf_counter() - t0)
            row = {"algo": algo, "n": n, "seconds": best, "exponent": None}
            if prev is not None:
                row["exponent"] = math.log(best / prev[1]) / math.log(n / prev[0])
            rows.append(row)
            prev = (n, best)
    return rows

