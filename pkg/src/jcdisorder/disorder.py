"""Disorder distributions, deterministic sampling, quenched averaging.

The coupling disorder delta is a dimensionless random offset applied as
g -> g*(1 + delta). Four symmetric zero-centered distributions are
supported, all parameterized by a single non-negative `strength`:

    gaussian  std = strength
    uniform   support [-sqrt(3)*strength, +sqrt(3)*strength]  (std = strength)
    discrete  values +strength / -strength with probability 1/2 (std = strength)
    cauchy    scale = strength (= its semi-interquartile range; no mean)

Sampling is counter-based (Philox keyed by (master_seed, stream)) with one
uniform word per realization index, so any chunking of the index range
reproduces the same draws bit for bit. Quenched averages are computed per
realization first and reduced afterwards; the reduction is deterministic
and independent of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .errors import ValidationError

KINDS = ("gaussian", "uniform", "discrete", "cauchy")
ESTIMATORS = ("mean", "median")

# Fixed chunk of realization indices per work item. Determinism requires the
# chunk boundaries to be a function of nothing but the index range.
CHUNK = 256

# Target elements per (samples x time-block) work array in the engine.
_BLOCK_BUDGET = 1 << 21

# Normal-theory standard error of a sample median, written in terms of the
# semi-interquartile range: 1.2533/0.6745 = 1.8581.
_MEDIAN_SE_FACTOR = 1.8581


@dataclass(frozen=True)
class DisorderSpec:
    """One disorder distribution: kind plus a single strength parameter.

    strength is the standard deviation for gaussian/uniform/discrete and the
    semi-interquartile range (= scale) for cauchy. strength = 0 degenerates
    to delta identically zero for every kind.
    """

    kind: str
    strength: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown disorder kind {self.kind!r}; expected one of {KINDS}")
        s = float(self.strength)
        if not math.isfinite(s) or s < 0:
            raise ValidationError(f"strength must be finite and >= 0, got {self.strength!r}")
        object.__setattr__(self, "strength", s)


@dataclass(frozen=True)
class QuenchPlan:
    """Monte-Carlo averaging policy.

    Realization i draws from a stream derived only from (master_seed, stream
    index, i); results do not depend on worker count or iteration order.
    rel_tol is the caller's convergence target for interpreting the reported
    spread; it does not change the estimate.
    """

    samples: int = 5000
    estimator: str = "mean"
    master_seed: int = 0
    rel_tol: float = 1e-3

    def __post_init__(self):
        if int(self.samples) < 1:
            raise ValidationError(f"samples must be >= 1, got {self.samples}")
        object.__setattr__(self, "samples", int(self.samples))
        if self.estimator not in ESTIMATORS:
            raise ValidationError(f"estimator must be one of {ESTIMATORS}, got {self.estimator!r}")
        seed = int(self.master_seed)
        if not 0 <= seed < 2**64:
            raise ValidationError("master_seed must fit in an unsigned 64-bit integer")
        object.__setattr__(self, "master_seed", seed)
        if not (float(self.rel_tol) > 0):
            raise ValidationError(f"rel_tol must be > 0, got {self.rel_tol!r}")


def check_estimator(spec: DisorderSpec, plan: QuenchPlan) -> None:
    """Cauchy disorder has no mean; reject mean-based plans for it."""
    if spec.kind == "cauchy" and plan.estimator != "median":
        raise ValidationError("cauchy disorder requires estimator='median' (its mean does not exist)")


def _uniform_words(master_seed: int, stream: int, start: int, count: int) -> np.ndarray:
    """Uniform [0,1) doubles for realization indices [start, start+count).

    One Philox 64-bit word per index. advance() moves the counter in 128-bit
    ticks of 4 words, so align to the tick and burn the remainder.
    """
    bg = np.random.Philox(key=np.array([master_seed, stream], dtype=np.uint64))
    tick, rem = divmod(start, 4)
    if tick:
        bg.advance(tick)
    gen = np.random.Generator(bg)
    if rem:
        gen.random(rem)
    return gen.random(count)


def _transform(spec: DisorderSpec, u: np.ndarray) -> np.ndarray:
    """Inverse-CDF transform of uniform draws for the given distribution."""
    s = spec.strength
    if spec.kind == "gaussian":
        # clip away exact 0/1 so ndtri stays finite
        return s * ndtri(np.clip(u, 1e-16, 1.0 - 1e-16))
    if spec.kind == "uniform":
        return (2.0 * u - 1.0) * (math.sqrt(3.0) * s)
    if spec.kind == "discrete":
        return np.where(u < 0.5, -s, s)
    # cauchy
    return s * np.tan(np.pi * (u - 0.5))


def sample_deltas(
    spec: DisorderSpec,
    plan: QuenchPlan,
    start: int = 0,
    count: int | None = None,
    stream: int = 0,
) -> np.ndarray:
    """Disorder draws for realization indices [start, start+count)."""
    if count is None:
        count = plan.samples - start
    if start < 0 or count < 0 or start + count > plan.samples:
        raise ValidationError(
            f"realization range [{start}, {start + count}) outside plan of {plan.samples} samples"
        )
    return _transform(spec, _uniform_words(plan.master_seed, stream, start, count))


def sample_delta(spec: DisorderSpec, plan: QuenchPlan, i: int, stream: int = 0) -> float:
    """Single realization draw; equals sample_deltas(...)[i] exactly."""
    if not 0 <= i < plan.samples:
        raise ValidationError(f"realization index {i} outside plan of {plan.samples} samples")
    return float(sample_deltas(spec, plan, start=i, count=1, stream=stream)[0])


def discrete_atoms(spec: DisorderSpec) -> tuple[np.ndarray, np.ndarray]:
    """Support atoms and weights of the two-point discrete distribution."""
    if spec.kind != "discrete":
        raise ValidationError(f"discrete_atoms needs kind='discrete', got {spec.kind!r}")
    return np.array([-spec.strength, spec.strength]), np.array([0.5, 0.5])


# quartile of the standard normal at 3/4
_NORMAL_Q3 = float(ndtri(0.75))


def distribution_quartiles(spec: DisorderSpec) -> tuple[float, float, float]:
    """Analytic (Q1, median, Q3); all four kinds are symmetric about 0.

    For the two-point discrete distribution the CDF reaches 1/4 and 3/4 at
    the atoms themselves, so the quartiles sit at -strength and +strength.
    """
    s = spec.strength
    if spec.kind == "gaussian":
        q = _NORMAL_Q3 * s
    elif spec.kind == "uniform":
        q = math.sqrt(3.0) * s / 2.0
    elif spec.kind == "discrete":
        q = s
    else:  # cauchy: quartiles at +-scale
        q = s
    return (-q, 0.0, q)


def quench_average(values, estimator: str) -> tuple[float, float]:
    """Reduce per-realization observable values to (estimate, spread).

    mean: arithmetic mean (compensated summation) with its standard error.
    median: midpoint-rule sample median with a bootstrap spread (100
    resamples, fixed internal seed, computed on the sorted copy so the
    result is independent of input order).
    """
    if estimator not in ESTIMATORS:
        raise ValidationError(f"estimator must be one of {ESTIMATORS}, got {estimator!r}")
    vals = np.asarray(values, dtype=float).ravel()
    if vals.size == 0:
        raise ValidationError("quench_average needs at least one value; check the plan")
    n = vals.size
    if estimator == "mean":
        est = math.fsum(vals) / n
        if n == 1:
            return est, 0.0
        var = math.fsum((v - est) ** 2 for v in vals) / (n - 1)
        return est, math.sqrt(var / n)
    vals = np.sort(vals)
    est = float(np.median(vals))
    if n == 1:
        return est, 0.0
    gen = np.random.Generator(np.random.Philox(key=np.array([0xB007, 0], dtype=np.uint64)))
    idx = gen.integers(0, n, size=(100, n))
    boots = np.median(vals[idx], axis=1)
    return est, float(np.std(boots, ddof=1))


def _median_spread(block: np.ndarray) -> np.ndarray:
    """Normal-theory SE of the per-column median of an (N, T) block."""
    q1, q3 = np.percentile(block, [25.0, 75.0], axis=0)
    semi_iqr = 0.5 * (q3 - q1)
    return _MEDIAN_SE_FACTOR * semi_iqr / math.sqrt(block.shape[0])


def _chunk_ranges(n: int):
    return [(a, min(a + CHUNK, n)) for a in range(0, n, CHUNK)]


def quenched_series(
    value_fn,
    specs,
    plan: QuenchPlan,
    t,
    threads: int | None = None,
    streams=None,
) -> tuple[np.ndarray, np.ndarray]:
    """Quenched average of a per-realization time series.

    value_fn(deltas, t_block) -> (chunk, len(t_block)) array of observable
    values, where deltas is a tuple of per-stream draw arrays (one entry per
    spec). Must be pure and thread-safe. specs is one DisorderSpec or a
    sequence of them; spec k draws from stream k by default.

    Returns (estimate, spread), both shaped like t. The mean path reduces
    fixed-order per-chunk partial sums; the median path materializes
    (samples, time-block) panels. Both give bit-identical results for any
    thread count.
    """
    if isinstance(specs, DisorderSpec):
        specs = (specs,)
    specs = tuple(specs)
    if not specs:
        raise ValidationError("quenched_series needs at least one DisorderSpec")
    for spec in specs:
        check_estimator(spec, plan)
    if streams is None:
        streams = tuple(range(len(specs)))
    streams = tuple(streams)
    if len(streams) != len(specs):
        raise ValidationError("streams and specs must align")

    tarr = np.atleast_1d(np.asarray(t, dtype=float))
    n = plan.samples
    workers = max(1, int(threads)) if threads else 1
    ranges = _chunk_ranges(n)

    def draws(a, b):
        return tuple(
            sample_deltas(spec, plan, start=a, count=b - a, stream=st)
            for spec, st in zip(specs, streams)
        )

    if plan.estimator == "mean":
        # chunk-outer: each work item covers the full time grid
        def partials(rng):
            a, b = rng
            block = np.asarray(value_fn(draws(a, b), tarr), dtype=float)
            if block.shape != (b - a, tarr.size):
                raise ValidationError(
                    f"value_fn returned shape {block.shape}, expected {(b - a, tarr.size)}"
                )
            return block.sum(axis=0), np.square(block).sum(axis=0)

        if workers > 1 and len(ranges) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(partials, ranges))
        else:
            parts = [partials(r) for r in ranges]
        # fixed-order reduction over the chunk list
        s1 = np.sum(np.stack([p[0] for p in parts]), axis=0)
        s2 = np.sum(np.stack([p[1] for p in parts]), axis=0)
        est = s1 / n
        if n > 1:
            var = np.maximum(s2 - n * est**2, 0.0) / (n - 1)
            spread = np.sqrt(var / n)
        else:
            spread = np.zeros_like(est)
        return est.reshape(np.shape(t)), spread.reshape(np.shape(t))

    # median path: time-block outer, realization chunks inner
    cols = max(1, _BLOCK_BUDGET // max(n, 1))
    est = np.empty(tarr.size)
    spread = np.empty(tarr.size)
    for c0 in range(0, tarr.size, cols):
        tb = tarr[c0 : c0 + cols]
        panel = np.empty((n, tb.size))

        def fill(rng, tb=tb, panel=panel):
            a, b = rng
            block = np.asarray(value_fn(draws(a, b), tb), dtype=float)
            if block.shape != (b - a, tb.size):
                raise ValidationError(
                    f"value_fn returned shape {block.shape}, expected {(b - a, tb.size)}"
                )
            panel[a:b] = block

        if workers > 1 and len(ranges) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(fill, ranges))
        else:
            for r in ranges:
                fill(r)
        est[c0 : c0 + cols] = np.median(panel, axis=0)
        spread[c0 : c0 + cols] = _median_spread(panel) if n > 1 else 0.0
    return est.reshape(np.shape(t)), spread.reshape(np.shape(t))
