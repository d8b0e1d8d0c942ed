"""Double Jaynes-Cummings model via closed-form two-atom concurrences.

Two atom-cavity pairs (A, B) evolve independently at zero detuning from one
of two entangled initial atom states, with both cavities in vacuum:

    psi family:  cos(a)|10> + sin(a)|01>   (no sudden death)
    phi family:  cos(a)|11> + sin(a)|00>   (sudden death possible)

Concurrences for a disorder realization (dA, dB), with x = gA(1+dA)t and
y = gB(1+dB)t:

    C_psi = |sin(2a) cos(x) cos(y)|
    C_phi = max{0, |sin(2a) cos(x) cos(y)| - (1/2) cos^2(a) |sin(2x) sin(2y)|}

Includes ESD interval detection on time series and the three-axis
(strengthA, strengthB, alpha) ESD persistence scan.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .disorder import (
    DisorderSpec,
    QuenchPlan,
    check_estimator,
    quenched_series,
    sample_deltas,
)
from .errors import ValidationError

FAMILIES = ("psi", "phi")


@dataclass(frozen=True)
class DoubleJcConfig:
    alpha: float
    ga: float = 1.0
    gb: float = 1.0
    family: str = "phi"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"family must be one of {FAMILIES}, got {self.family!r}")
        a = float(self.alpha)
        if not (0.0 <= a <= math.pi / 2):
            raise ValidationError(f"alpha must lie in [0, pi/2], got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)
        for name in ("ga", "gb"):
            v = float(getattr(self, name))
            if not (v > 0):
                raise ValidationError(f"{name} must be > 0, got {v!r}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class EsdReport:
    """Zero intervals and touch points of a concurrence series.

    death_intervals are disjoint, ordered (t_start, t_end) runs of duration
    at least min_gap that reach exact zero, with the series above eps on
    both sides. Shorter dips and strictly positive grazes land in
    touch_points. A zero run still open at either end of the grid is
    classified as neither (its flanks cannot be verified).
    """

    death_intervals: tuple
    touch_points: tuple
    horizon: float


def _realization_values(cfg: DoubleJcConfig, da, db, tarr: np.ndarray) -> np.ndarray:
    """Concurrence rows for realization arrays da, db over tarr."""
    da = np.atleast_1d(np.asarray(da, dtype=float))
    db = np.atleast_1d(np.asarray(db, dtype=float))
    x = cfg.ga * np.outer(1.0 + da, tarr)
    y = cfg.gb * np.outer(1.0 + db, tarr)
    base = abs(math.sin(2.0 * cfg.alpha)) * np.abs(np.cos(x) * np.cos(y))
    if cfg.family == "psi":
        return base
    half_cos2 = 0.5 * math.cos(cfg.alpha) ** 2
    return np.maximum(0.0, base - half_cos2 * np.abs(np.sin(2.0 * x) * np.sin(2.0 * y)))


def concurrence_clean(cfg: DoubleJcConfig, t):
    """Clean-case concurrence; the phi family can reach exact zero plateaus."""
    tarr = np.atleast_1d(np.asarray(t, dtype=float))
    vals = _realization_values(cfg, 0.0, 0.0, tarr)[0]
    return vals.reshape(np.shape(t)) if np.ndim(t) else float(vals[0])


def concurrence_realization(cfg: DoubleJcConfig, da: float, db: float, t):
    """Concurrence for one disorder realization; (0, 0) is the clean case."""
    tarr = np.atleast_1d(np.asarray(t, dtype=float))
    vals = _realization_values(cfg, float(da), float(db), tarr)[0]
    return vals.reshape(np.shape(t)) if np.ndim(t) else float(vals[0])


def two_atom_density(cfg: DoubleJcConfig, da: float, db: float, t: float) -> np.ndarray:
    """Explicit 4x4 two-atom density matrix of the evolved pure state.

    Kept as the oracle for the closed-form concurrences: both check out
    against concurrence_general on this matrix.
    """
    x = cfg.ga * (1.0 + float(da)) * float(t)
    y = cfg.gb * (1.0 + float(db)) * float(t)
    ca, sa = math.cos(cfg.alpha), math.sin(cfg.alpha)
    cx, sx, cy, sy = math.cos(x), math.sin(x), math.cos(y), math.sin(y)
    rho = np.zeros((4, 4), dtype=complex)
    if cfg.family == "psi":
        # |10> and |01> populations plus the inner coherence
        rho[1, 1] = (ca * cx) ** 2
        rho[2, 2] = (sa * cy) ** 2
        rho[3, 3] = (ca * sx) ** 2 + (sa * sy) ** 2
        q = ca * cx * sa * cy
        rho[1, 2] = q
        rho[2, 1] = q
    else:
        rho[0, 0] = (ca * cx * cy) ** 2
        rho[1, 1] = (ca * cx * sy) ** 2
        rho[2, 2] = (ca * sx * cy) ** 2
        rho[3, 3] = (ca * sx * sy) ** 2 + sa**2
        h = ca * cx * cy * sa
        rho[0, 3] = h
        rho[3, 0] = h
    return rho


def concurrence_quenched(
    cfg: DoubleJcConfig,
    spec_a: DisorderSpec,
    spec_b: DisorderSpec,
    plan: QuenchPlan,
    t,
    threads: int | None = None,
):
    """Quenched average of the realization concurrence over paired draws.

    dA and dB are drawn independently (stream 0 and stream 1 of the same
    master seed)."""
    check_estimator(spec_a, plan)
    check_estimator(spec_b, plan)
    return quenched_series(
        lambda deltas, tb: _realization_values(cfg, deltas[0], deltas[1], tb),
        (spec_a, spec_b),
        plan,
        t,
        threads=threads,
    )


def detect_esd(t, values, eps: float = 1e-4, min_gap: float = 0.05) -> EsdReport:
    """Classify zero runs of a concurrence series.

    The grid must be uniform with step at most min_gap/10 so that a genuine
    zero plateau cannot hide between samples. Runs of values <= eps lasting
    at least min_gap, flanked on both sides by values > eps, and reaching
    exact zero somewhere are death intervals; every other interior dip is a
    touch point (reported at the run's minimum). The exact-zero requirement
    tells a true plateau (the clipped concurrence and its all-dead disorder
    aggregates are exactly 0.0 there) from a high-order tangency such as
    cos^4 at alpha = pi/4, which dwells below any loose eps for longer than
    min_gap but never vanishes on a float grid.
    """
    tarr = np.asarray(t, dtype=float)
    vals = np.asarray(values, dtype=float)
    if tarr.ndim != 1 or tarr.size < 3 or vals.shape != tarr.shape:
        raise ValidationError("detect_esd needs matching 1-d t and values with >= 3 points")
    steps = np.diff(tarr)
    if np.min(steps) <= 0 or np.max(steps) - np.min(steps) > 1e-9 * max(np.max(steps), 1e-30):
        raise ValidationError("time grid must be uniform and strictly increasing")
    dt = float(steps[0])
    if dt > min_gap / 10.0 * (1.0 + 1e-9):
        raise ValidationError(
            f"grid step {dt} too coarse for min_gap {min_gap}; need step <= min_gap/10"
        )
    below = vals <= eps
    intervals = []
    touches = []
    i = 0
    n = tarr.size
    while i < n:
        if not below[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and below[j + 1]:
            j += 1
        interior = i > 0 and j < n - 1
        if interior:
            long_enough = tarr[j] - tarr[i] >= min_gap * (1.0 - 1e-9)
            if long_enough and np.min(vals[i : j + 1]) <= 0.0:
                intervals.append((float(tarr[i]), float(tarr[j])))
            else:
                k = i + int(np.argmin(vals[i : j + 1]))
                touches.append(float(tarr[k]))
        i = j + 1
    return EsdReport(
        death_intervals=tuple(intervals),
        touch_points=tuple(touches),
        horizon=float(tarr[-1]),
    )


@dataclass(frozen=True, eq=False)
class RegionScanResult:
    """Boolean ESD field over (strengthA, strengthB, alpha)."""

    esd: np.ndarray
    strengths_a: np.ndarray
    strengths_b: np.ndarray
    alphas: np.ndarray
    kind: str
    family: str
    horizon: float
    time_step: float

    def fractional_volume(self) -> float:
        return float(np.mean(self.esd))


def esd_region_scan(
    strengths_a,
    strengths_b,
    alphas,
    kind: str,
    plan: QuenchPlan,
    horizon: float = 25.0,
    time_step: float = 0.005,
    family: str = "phi",
    eps: float = 1e-4,
    min_gap: float = 0.05,
    threads: int | None = None,
) -> RegionScanResult:
    """Scan the quenched-averaged series for ESD over a parameter grid.

    A cell is marked True when the quenched series at (sA, sB, alpha) shows
    at least one death interval within the horizon. One set of unit draws
    per kind is scaled by each cell's strengths (common random numbers), so
    the field is smooth in strength and independent of the thread count.
    gA = gB = 1 throughout.
    """
    sa_grid = np.asarray(strengths_a, dtype=float)
    sb_grid = np.asarray(strengths_b, dtype=float)
    al_grid = np.asarray(alphas, dtype=float)
    if sa_grid.ndim != 1 or sb_grid.ndim != 1 or al_grid.ndim != 1:
        raise ValidationError("grids must be 1-d")
    if np.min(sa_grid) < 0 or np.min(sb_grid) < 0:
        raise ValidationError("strengths must be >= 0")
    if np.min(al_grid) < 0 or np.max(al_grid) > math.pi / 2:
        raise ValidationError("alpha grid must lie in [0, pi/2]")
    if family not in FAMILIES:
        raise ValidationError(f"family must be one of {FAMILIES}")
    unit = DisorderSpec(kind, 1.0)
    check_estimator(unit, plan)

    tarr = np.arange(0.0, horizon + 0.5 * time_step, time_step)
    n = plan.samples
    za = sample_deltas(unit, plan, stream=0)
    zb = sample_deltas(unit, plan, stream=1)
    sin2 = np.abs(np.sin(2.0 * al_grid))
    halfc2 = 0.5 * np.cos(al_grid) ** 2
    use_median = plan.estimator == "median"
    cols = max(1, (1 << 21) // max(n, 1))

    esd = np.zeros((sa_grid.size, sb_grid.size, al_grid.size), dtype=bool)

    def scan_cell(ia_ib):
        ia, ib = ia_ib
        ga_eff = 1.0 + sa_grid[ia] * za
        gb_eff = 1.0 + sb_grid[ib] * zb
        series = np.empty((al_grid.size, tarr.size))
        for c0 in range(0, tarr.size, cols):
            sl = slice(c0, min(c0 + cols, tarr.size))
            xa = np.outer(ga_eff, tarr[sl])
            xb = np.outer(gb_eff, tarr[sl])
            base = np.abs(np.cos(xa) * np.cos(xb))
            if family == "phi":
                sub = np.abs(np.sin(2.0 * xa) * np.sin(2.0 * xb))
            for k in range(al_grid.size):
                panel = sin2[k] * base
                if family == "phi":
                    panel = np.maximum(0.0, panel - halfc2[k] * sub)
                series[k, sl] = np.median(panel, axis=0) if use_median else panel.mean(axis=0)
        for k in range(al_grid.size):
            report = detect_esd(tarr, series[k], eps=eps, min_gap=min_gap)
            esd[ia, ib, k] = len(report.death_intervals) > 0

    cells = [(ia, ib) for ia in range(sa_grid.size) for ib in range(sb_grid.size)]
    workers = max(1, int(threads)) if threads else 1
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(scan_cell, cells))
    else:
        for cell in cells:
            scan_cell(cell)

    return RegionScanResult(
        esd=esd,
        strengths_a=sa_grid.copy(),
        strengths_b=sb_grid.copy(),
        alphas=al_grid.copy(),
        kind=kind,
        family=family,
        horizon=float(horizon),
        time_step=float(time_step),
    )
