"""Seeded random instance generators."""

from __future__ import annotations

import numpy as np

from .core import Instance, normalize_columns
from .errors import BadParameters

KINDS = ("uniform", "antithetical", "tight", "equal")


def _draw(rng: np.random.Generator, lo: float, hi: float, size: int) -> np.ndarray:
    # integer bounds give integer values, which keep every derived time dyadic
    if float(lo).is_integer() and float(hi).is_integer():
        return rng.integers(int(lo), int(hi), size=size, endpoint=True).astype(float)
    return rng.uniform(lo, hi, size=size)


def generate(
    kind: str,
    n: int,
    seed: int | None = 0,
    p_range: tuple[float, float] = (1, 100),
    w_range: tuple[float, float] = (1, 100),
) -> Instance:
    """Random instance of ``n`` jobs with ids ``j0 .. j{n-1}``.

    ``uniform`` draws p and w independently. ``antithetical`` pairs sorted
    lengths with non-increasing weights, giving equal lengths equal weight.
    ``tight`` is ``n`` copies of the job ``(p_range[0], w_range[0])``;
    ``equal`` is ``n`` copies of one randomly drawn job.
    """
    if kind not in KINDS:
        raise BadParameters(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if n < 1:
        raise BadParameters(f"n must be at least 1, got {n}")
    for name, (lo, hi) in (("p_range", p_range), ("w_range", w_range)):
        if not 0 < lo <= hi:
            raise BadParameters(f"{name} must satisfy 0 < low <= high, got {(lo, hi)}")
    rng = np.random.default_rng(seed)
    if kind == "uniform":
        ps = _draw(rng, *p_range, n)
        ws = _draw(rng, *w_range, n)
    elif kind == "antithetical":
        ps = np.sort(_draw(rng, *p_range, n))
        ws = np.sort(_draw(rng, *w_range, n))[::-1].copy()
        # first weight of each run of equal lengths is its largest
        run_start = np.concatenate(([True], ps[1:] != ps[:-1]))
        ws = ws[np.maximum.accumulate(np.where(run_start, np.arange(n), 0))]
    elif kind == "tight":
        ps = np.full(n, float(p_range[0]))
        ws = np.full(n, float(w_range[0]))
    else:
        ps = np.full(n, _draw(rng, *p_range, 1)[0])
        ws = np.full(n, _draw(rng, *w_range, 1)[0])
    return normalize_columns([f"j{i}" for i in range(n)], ps.tolist(), ws.tolist())
