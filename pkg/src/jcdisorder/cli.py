"""Command-line front end: deterministic runs, CSV/JSON output, plot scripts.

One canonical output format: UTF-8 CSV with '#'-prefixed header comments
carrying the fully resolved configuration (every value as a Python literal,
so headers parse back losslessly), the seed, and the tool version. No
timestamps or environment echoes, so reruns with the same configuration are
byte-identical. A JSON mirror and a matplotlib plot script are optional.

Exit codes: 0 success, 2 configuration error, 3 numerical error. Errors are
emitted as a single JSON line on standard error.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from . import __version__
from .coupled import CoupledConfig, coupled_concurrence_quenched, saturation_value
from .disorder import KINDS, DisorderSpec, QuenchPlan
from .doublejc import DoubleJcConfig, concurrence_clean, concurrence_quenched, esd_region_scan
from .errors import NumericalError, ValidationError
from .singlejc import (
    SingleJcConfig,
    ap_entanglement_quenched,
    atom_photon_entanglement,
    inversion_clean,
    inversion_discrete,
    inversion_gaussian,
    inversion_quenched_mc,
    inversion_uniform,
    photon_weights,
    revival_period,
)

COMMANDS = ("inversion", "ap-entanglement", "concurrence", "esd-region", "coupled")
THREADS_ENV = "JCDISORDER_THREADS"

_PI_6 = math.pi / 6.0
_PI_2 = math.pi / 2.0

# one defaults table per command; the resolved config is always the full table
DEFAULTS = {
    "inversion": {
        "model": "clean",
        "method": None,  # closed | mc; resolved per model below
        "s": 0.0,
        "nbar": 50.0,
        "dn": 2.0,
        "g": 1.0,
        "tmax_tr": 6.0,
        "tmax": None,
        "dt": None,  # revival period / 500
        "samples": 5000,
        "estimator": None,  # mean, median for cauchy
        "seed": 0,
        "threads": None,
        "out": "inversion.csv",
        "json": False,
        "plot_script": False,
    },
    "ap-entanglement": {
        "model": "clean",
        "s": 0.0,
        "nbar": 50.0,
        "dn": 2.0,
        "g": 1.0,
        "tmax_tr": 1.0,
        "tmax": None,
        "dt": None,
        "samples": 5000,
        "estimator": None,
        "seed": 0,
        "threads": None,
        "out": "ap_entanglement.csv",
        "json": False,
        "plot_script": False,
    },
    "concurrence": {
        "family": "phi",
        "alpha": _PI_6,
        "ga": 1.0,
        "gb": 1.0,
        "disorder": "none",
        "tmax": 25.0,
        "dt": 0.005,
        "samples": 5000,
        "estimator": None,
        "seed": 0,
        "threads": None,
        "out": "concurrence.csv",
        "json": False,
        "plot_script": False,
    },
    "esd-region": {
        "kind": "gaussian",
        "grid": "0:1:0.05",
        "grid_b": None,  # defaults to --grid
        "alpha_grid": f"0:{_PI_2!r}:{math.pi / 72!r}",
        "family": "phi",
        "horizon": 25.0,
        "dt": 0.005,
        "eps": 1e-4,
        "min_gap": 0.05,
        # per-cell realization count; the full default grid has ~16k cells,
        # so the per-cell depth is kept far below the time-series commands
        "samples": 240,
        "estimator": None,
        "seed": 0,
        "threads": None,
        "out": "esd_region.csv",
        "json": False,
        "plot_script": False,
    },
    "coupled": {
        "interaction": "ising",
        "alpha": _PI_6,
        "g": 1.0,
        "jz": 0.1,
        "j": 0.1,
        "gamma": 0.5,
        "omega": 0.0,
        "disorder": "gaussian:0.5,gaussian:0.5",
        "tmax": 60.0,
        "dt": 0.02,
        "samples": 5000,
        "estimator": None,
        "seed": 0,
        "threads": None,
        "out": "coupled.csv",
        "json": False,
        "plot_script": False,
    },
}


@dataclass(frozen=True)
class RunConfig:
    """A command name plus its fully resolved parameter table."""

    command: str
    params: dict

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Uniform result triple; spread is 0 for closed forms."""

    t: np.ndarray
    value: np.ndarray
    spread: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        if t.ndim != 1 or np.any(np.diff(t) <= 0):
            raise ValidationError("TimeSeries.t must be 1-d strictly increasing")
        for name in ("value", "spread"):
            if np.asarray(getattr(self, name)).shape != t.shape:
                raise ValidationError(f"TimeSeries.{name} must match t in length")


class _Parser(argparse.ArgumentParser):
    # argparse usage failures must also surface as machine-readable config errors
    def error(self, message):
        print(json.dumps({"error": "config", "message": message}), file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> _Parser:
    parser = _Parser(prog="jcdisorder", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"jcdisorder {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--config", help="flat key=value config file; flags take precedence")
        p.add_argument("--out", help="output CSV path")
        p.add_argument("--json", action="store_true", default=None, help="also write a JSON mirror")
        p.add_argument(
            "--plot-script",
            action="store_true",
            default=None,
            dest="plot_script",
            help="also write matplotlib script(s) rendering the CSV",
        )
        p.add_argument("--seed", type=int, help="master seed for all disorder draws")
        p.add_argument("--samples", type=int, help="Monte-Carlo realizations")
        p.add_argument("--estimator", choices=("mean", "median"))
        p.add_argument(
            "--threads",
            type=int,
            help=f"worker threads (default ${THREADS_ENV} or 1); never changes results",
        )

    p = sub.add_parser("inversion", help="population inversion W(t), closed form or Monte-Carlo")
    p.add_argument("--model", choices=("clean",) + KINDS)
    p.add_argument("--method", choices=("closed", "mc"))
    p.add_argument("--s", type=float, help="disorder strength")
    p.add_argument("--nbar", type=float)
    p.add_argument("--dn", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--tmax-tr", type=float, dest="tmax_tr", help="horizon in revival periods")
    p.add_argument("--tmax", type=float, help="horizon in raw time (overrides --tmax-tr)")
    p.add_argument("--dt", type=float)
    common(p)

    p = sub.add_parser("ap-entanglement", help="atom-photon entanglement E(t)")
    p.add_argument("--model", choices=("clean",) + KINDS)
    p.add_argument("--s", type=float)
    p.add_argument("--nbar", type=float)
    p.add_argument("--dn", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--tmax-tr", type=float, dest="tmax_tr")
    p.add_argument("--tmax", type=float)
    p.add_argument("--dt", type=float)
    common(p)

    p = sub.add_parser("concurrence", help="double JC two-atom concurrence")
    p.add_argument("--family", choices=("psi", "phi"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--ga", type=float)
    p.add_argument("--gb", type=float)
    p.add_argument("--disorder", help="kindA:sA,kindB:sB or 'none' for the clean curve")
    p.add_argument("--tmax", type=float)
    p.add_argument("--dt", type=float)
    common(p)

    p = sub.add_parser("esd-region", help="scan (strengthA, strengthB, alpha) for sudden death")
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--grid", help="strength axis as start:stop:step")
    p.add_argument("--grid-b", dest="grid_b", help="strength B axis (defaults to --grid)")
    p.add_argument("--alpha-grid", dest="alpha_grid", help="alpha axis as start:stop:step")
    p.add_argument("--family", choices=("psi", "phi"))
    p.add_argument("--horizon", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--eps", type=float)
    p.add_argument("--min-gap", type=float, dest="min_gap")
    common(p)

    p = sub.add_parser("coupled", help="atom-atom coupled model, quenched concurrence")
    p.add_argument("--interaction", choices=("ising", "xy"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--g", type=float)
    p.add_argument("--jz", type=float)
    p.add_argument("--j", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--omega", type=float)
    p.add_argument("--disorder", help="kindA:sA,kindB:sB")
    p.add_argument("--tmax", type=float)
    p.add_argument("--dt", type=float)
    common(p)

    return parser


def _parse_config_file(path: str, command: str) -> dict:
    """Flat key = value lines; values are Python literals (bare words allowed)."""
    table = DEFAULTS[command]
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ValidationError(f"cannot read config file {path}: {exc}") from exc
    for ln, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{ln}: expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in table:
            raise ValidationError(f"{path}:{ln}: unknown key {key!r} for command {command!r}")
        value = value.strip()
        try:
            out[key] = ast.literal_eval(value)
        except (ValueError, SyntaxError):
            out[key] = value
    return out


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Overlay defaults, then the config file, then explicit flags."""
    command = args.command
    params = dict(DEFAULTS[command])
    if getattr(args, "config", None):
        params.update(_parse_config_file(args.config, command))
    for key in params:
        flag = getattr(args, key, None)
        if flag is not None:
            params[key] = flag
    params["tool_version"] = __version__
    return RunConfig(command=command, params=params)


def _parse_axis(text: str, name: str) -> np.ndarray:
    try:
        start, stop, step = (float(x) for x in str(text).split(":"))
    except ValueError as exc:
        raise ValidationError(f"{name} must be start:stop:step, got {text!r}") from exc
    if step <= 0 or stop < start:
        raise ValidationError(f"{name} must have step > 0 and stop >= start")
    return np.arange(start, stop + 0.5 * step, step)


def _parse_disorder(text: str) -> tuple[DisorderSpec, DisorderSpec] | None:
    if str(text).strip().lower() in ("", "none"):
        return None
    parts = str(text).split(",")
    if len(parts) != 2:
        raise ValidationError(f"--disorder must be kindA:sA,kindB:sB, got {text!r}")
    specs = []
    for part in parts:
        kind, _, s = part.partition(":")
        if not s:
            raise ValidationError(f"--disorder entry {part!r} is missing a strength")
        try:
            specs.append(DisorderSpec(kind.strip(), float(s)))
        except ValueError as exc:
            raise ValidationError(f"bad --disorder entry {part!r}: {exc}") from exc
    return specs[0], specs[1]


def _threads(params: dict) -> int:
    if params.get("threads") is not None:
        n = int(params["threads"])
    else:
        env = os.environ.get(THREADS_ENV, "").strip()
        n = int(env) if env else 1
    if n < 1:
        raise ValidationError(f"threads must be >= 1, got {n}")
    return n


def _plan(params: dict, kind: str | None) -> QuenchPlan:
    estimator = params.get("estimator")
    if estimator is None:
        estimator = "median" if kind == "cauchy" else "mean"
    return QuenchPlan(
        samples=int(params["samples"]),
        estimator=estimator,
        master_seed=int(params["seed"]),
    )


def _single_grid(params: dict, cfg: SingleJcConfig) -> np.ndarray:
    tr = revival_period(cfg)
    tmax = params["tmax"] if params["tmax"] is not None else float(params["tmax_tr"]) * tr
    dt = params["dt"] if params["dt"] is not None else tr / 500.0
    tmax = float(tmax)
    dt = float(dt)
    if tmax <= 0 or dt <= 0 or dt > tmax:
        raise ValidationError(f"bad time grid: tmax={tmax}, dt={dt}")
    return np.arange(0.0, tmax + 0.5 * dt, dt)


def _uniform_grid(tmax: float, dt: float) -> np.ndarray:
    tmax = float(tmax)
    dt = float(dt)
    if tmax <= 0 or dt <= 0 or dt > tmax:
        raise ValidationError(f"bad time grid: tmax={tmax}, dt={dt}")
    return np.arange(0.0, tmax + 0.5 * dt, dt)


def _run_inversion(cfg: RunConfig):
    p = cfg.params
    jc = SingleJcConfig(photons=photon_weights(p["nbar"], p["dn"]), g=float(p["g"]))
    t = _single_grid(p, jc)
    model = p["model"]
    method = p["method"]
    if method is None:
        method = "mc" if model == "cauchy" else "closed"
    if model == "clean" and method == "mc":
        raise ValidationError("the clean model has no Monte-Carlo path; use --method closed")
    if model == "cauchy" and method == "closed":
        raise ValidationError("cauchy disorder has no closed form; use --method mc")
    meta = {}
    if method == "closed":
        s = float(p["s"])
        closed = {
            "clean": lambda: inversion_clean(jc, t),
            "gaussian": lambda: inversion_gaussian(jc, s, t),
            "uniform": lambda: inversion_uniform(jc, s, t),
            "discrete": lambda: inversion_discrete(jc, s, t),
        }
        value = closed[model]()
        spread = np.zeros_like(value)
    else:
        plan = _plan(p, model)
        value, spread = inversion_quenched_mc(
            jc, DisorderSpec(model, float(p["s"])), plan, t, threads=_threads(p)
        )
        meta["estimator_used"] = plan.estimator
    meta["revival_period"] = revival_period(jc)
    series = TimeSeries(t=t, value=value, spread=spread)
    return series, ("t", "t_over_tr", "value", "spread"), meta


def _run_ap_entanglement(cfg: RunConfig):
    p = cfg.params
    jc = SingleJcConfig(photons=photon_weights(p["nbar"], p["dn"]), g=float(p["g"]))
    t = _single_grid(p, jc)
    model = p["model"]
    meta = {"revival_period": revival_period(jc)}
    if model == "clean":
        value = atom_photon_entanglement(jc, 0.0, t)
        spread = np.zeros_like(value)
    else:
        plan = _plan(p, model)
        value, spread = ap_entanglement_quenched(
            jc, DisorderSpec(model, float(p["s"])), plan, t, threads=_threads(p)
        )
        meta["estimator_used"] = plan.estimator
    series = TimeSeries(t=t, value=value, spread=spread)
    return series, ("t", "t_over_tr", "value", "spread"), meta


def _run_concurrence(cfg: RunConfig):
    p = cfg.params
    dj = DoubleJcConfig(
        alpha=float(p["alpha"]), ga=float(p["ga"]), gb=float(p["gb"]), family=p["family"]
    )
    t = _uniform_grid(p["tmax"], p["dt"])
    specs = _parse_disorder(p["disorder"])
    meta = {}
    if specs is None:
        value = concurrence_clean(dj, t)
        spread = np.zeros_like(value)
    else:
        kind = "cauchy" if "cauchy" in (specs[0].kind, specs[1].kind) else specs[0].kind
        plan = _plan(p, kind)
        value, spread = concurrence_quenched(dj, specs[0], specs[1], plan, t, threads=_threads(p))
        meta["estimator_used"] = plan.estimator
    series = TimeSeries(t=t, value=value, spread=spread)
    return series, ("t", "value", "spread"), meta


def _run_esd_region(cfg: RunConfig):
    p = cfg.params
    sa = _parse_axis(p["grid"], "--grid")
    sb = _parse_axis(p["grid_b"] if p["grid_b"] is not None else p["grid"], "--grid-b")
    al = _parse_axis(p["alpha_grid"], "--alpha-grid")
    plan = _plan(p, p["kind"])
    result = esd_region_scan(
        sa,
        sb,
        al,
        kind=p["kind"],
        plan=plan,
        horizon=float(p["horizon"]),
        time_step=float(p["dt"]),
        family=p["family"],
        eps=float(p["eps"]),
        min_gap=float(p["min_gap"]),
        threads=_threads(p),
    )
    meta = {"fractional_volume": result.fractional_volume(), "estimator_used": plan.estimator}
    return result, ("strength_a", "strength_b", "alpha", "esd"), meta


def _run_coupled(cfg: RunConfig):
    p = cfg.params
    cc = CoupledConfig(
        interaction=p["interaction"],
        alpha=float(p["alpha"]),
        g=float(p["g"]),
        jz=float(p["jz"]),
        j=float(p["j"]),
        gamma=float(p["gamma"]),
        omega=float(p["omega"]),
    )
    specs = _parse_disorder(p["disorder"])
    if specs is None:
        raise ValidationError("coupled requires --disorder kindA:sA,kindB:sB")
    t = _uniform_grid(p["tmax"], p["dt"])
    kind = "cauchy" if "cauchy" in (specs[0].kind, specs[1].kind) else specs[0].kind
    plan = _plan(p, kind)
    value, spread = coupled_concurrence_quenched(
        cc, specs[0], specs[1], plan, t, threads=_threads(p)
    )
    series = TimeSeries(t=t, value=value, spread=spread)
    meta = {
        "estimator_used": plan.estimator,
        "saturation_last20": saturation_value(t, value, 0.2),
    }
    return series, ("t", "value", "spread"), meta


_RUNNERS = {
    "inversion": _run_inversion,
    "ap-entanglement": _run_ap_entanglement,
    "concurrence": _run_concurrence,
    "esd-region": _run_esd_region,
    "coupled": _run_coupled,
}


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".jcdisorder-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _header_lines(cfg: RunConfig, meta: dict, columns) -> list[str]:
    lines = [f"# jcdisorder {__version__}", f"# command = {cfg.command!r}"]
    for key in sorted(cfg.params):
        lines.append(f"# {key} = {cfg.params[key]!r}")
    for key in sorted(meta):
        lines.append(f"# {key} = {meta[key]!r}")
    lines.append("# columns = " + ",".join(columns))
    return lines


def _rows_for(result, columns, meta) -> list[tuple]:
    if isinstance(result, TimeSeries):
        if "t_over_tr" in columns:
            tr = meta["revival_period"]
            return list(
                zip(result.t, result.t / tr, result.value, result.spread)
            )
        return list(zip(result.t, result.value, result.spread))
    rows = []
    for ia, sa in enumerate(result.strengths_a):
        for ib, sb in enumerate(result.strengths_b):
            for k, a in enumerate(result.alphas):
                rows.append((sa, sb, a, int(result.esd[ia, ib, k])))
    return rows


def _format_cell(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def write_csv(path: str, cfg: RunConfig, result, columns, meta) -> None:
    lines = _header_lines(cfg, meta, columns)
    lines.append(",".join(columns))
    for row in _rows_for(result, columns, meta):
        lines.append(",".join(_format_cell(x) for x in row))
    _atomic_write(path, "\n".join(lines) + "\n")


def write_json(path: str, cfg: RunConfig, result, columns, meta) -> None:
    rows = [
        [int(x) if isinstance(x, (int, np.integer)) else float(x) for x in row]
        for row in _rows_for(result, columns, meta)
    ]
    doc = {
        "tool": f"jcdisorder {__version__}",
        "command": cfg.command,
        "params": {k: cfg.params[k] for k in sorted(cfg.params)},
        "meta": {k: meta[k] for k in sorted(meta)},
        "columns": list(columns),
        "rows": rows,
    }
    _atomic_write(path, json.dumps(doc, indent=1, sort_keys=True) + "\n")


def parse_header(path: str) -> RunConfig:
    """Reconstruct the RunConfig echoed into a CSV header."""
    command = None
    params = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            if not raw.startswith("#"):
                break
            line = raw[1:].strip()
            if "=" not in line:
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            try:
                parsed = ast.literal_eval(value.strip())
            except (ValueError, SyntaxError):
                continue
            if key == "command":
                command = parsed
            elif key == "columns":
                continue
            else:
                params[key] = parsed
    if command is None:
        raise ValidationError(f"{path} carries no command header")
    known = set(DEFAULTS[command]) | {"tool_version"}
    return RunConfig(command=command, params={k: v for k, v in params.items() if k in known})


_SERIES_SCRIPT = """\
#!/usr/bin/env python3
# rendered from {csv}; generated by jcdisorder {version}
import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

xs, ys = [], []
with open({csv!r}, encoding="utf-8") as fh:
    rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
header, rows = rows[0], rows[1:]
xcol = header.index({xcol!r})
ycol = header.index("value")
for row in rows:
    xs.append(float(row[xcol]))
    ys.append(float(row[ycol]))
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(xs, ys, lw=0.8)
ax.set_xlabel({xlabel!r})
ax.set_ylabel({ylabel!r})
ax.set_title({title!r})
fig.tight_layout()
fig.savefig({png!r}, dpi=150)
print("wrote", {png!r})
"""

_REGION_SCRIPT = """\
#!/usr/bin/env python3
# rendered from {csv}; generated by jcdisorder {version}
import csv

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

alpha = {alpha!r}
sa, sb, flag = [], [], {{}}
with open({csv!r}, encoding="utf-8") as fh:
    rows = [r for r in csv.reader(fh) if r and not r[0].startswith("#")]
for a, b, al, esd in rows[1:]:
    if abs(float(al) - alpha) > 1e-12:
        continue
    a, b = float(a), float(b)
    if a not in sa:
        sa.append(a)
    if b not in sb:
        sb.append(b)
    flag[(a, b)] = int(esd)
grid = [[flag[(a, b)] for b in sb] for a in sa]
fig, ax = plt.subplots(figsize=(5, 4))
im = ax.imshow(
    grid,
    origin="lower",
    aspect="auto",
    extent=(min(sb), max(sb), min(sa), max(sa)),
    vmin=0,
    vmax=1,
)
fig.colorbar(im, ax=ax, label="sudden death")
ax.set_xlabel("strength B")
ax.set_ylabel("strength A")
ax.set_title({title!r})
fig.tight_layout()
fig.savefig({png!r}, dpi=150)
print("wrote", {png!r})
"""


def emit_plot_script(cfg: RunConfig, result, columns, meta, csv_path: str) -> list[str]:
    """Write deterministic matplotlib script(s) next to the CSV.

    Time series get one script; a region scan gets one script per alpha
    panel plus an index file listing them. Returns the written paths.
    """
    base, _ = os.path.splitext(csv_path)
    csv_name = os.path.basename(csv_path)
    written = []
    if isinstance(result, TimeSeries):
        xcol = "t_over_tr" if "t_over_tr" in columns else "t"
        xlabel = "t / T_R" if xcol == "t_over_tr" else "g t"
        ylabel = "population inversion" if cfg.command == "inversion" else (
            "entropy of entanglement (bits)" if cfg.command == "ap-entanglement" else "concurrence"
        )
        script = _SERIES_SCRIPT.format(
            csv=csv_name,
            version=__version__,
            xcol=xcol,
            xlabel=xlabel,
            ylabel=ylabel,
            title=f"jcdisorder {cfg.command}",
            png=os.path.basename(base) + ".png",
        )
        path = base + "_plot.py"
        _atomic_write(path, script)
        written.append(path)
        return written
    index = []
    for k, alpha in enumerate(result.alphas):
        png = f"{os.path.basename(base)}_alpha{k:02d}.png"
        script = _REGION_SCRIPT.format(
            csv=csv_name,
            version=__version__,
            alpha=float(alpha),
            title=f"ESD region, alpha = {float(alpha):.4f}",
            png=png,
        )
        path = f"{base}_alpha{k:02d}_plot.py"
        _atomic_write(path, script)
        written.append(path)
        index.append(f"{os.path.basename(path)}  alpha = {float(alpha)!r}")
    index_path = base + "_plots_index.txt"
    _atomic_write(index_path, "\n".join(index) + "\n")
    written.append(index_path)
    return written


def run(cfg: RunConfig) -> int:
    """Execute a resolved configuration; returns the process exit code."""
    result, columns, meta = _RUNNERS[cfg.command](cfg)
    out = str(cfg.params["out"])
    written: list[str] = []
    # individual files are written atomically; if a later file of the same
    # run fails, remove the earlier ones so no partial run remains
    try:
        write_csv(out, cfg, result, columns, meta)
        written.append(out)
        if cfg.params.get("json"):
            json_path = os.path.splitext(out)[0] + ".json"
            write_json(json_path, cfg, result, columns, meta)
            written.append(json_path)
        if cfg.params.get("plot_script"):
            written.extend(emit_plot_script(cfg, result, columns, meta, out))
    except BaseException:
        for path in written:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = resolve_config(args)
        return run(cfg)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValidationError as exc:
        print(json.dumps({"error": "config", "message": str(exc)}), file=sys.stderr)
        return 2
    except OSError as exc:
        # unwritable/unreadable paths are configuration problems
        print(json.dumps({"error": "config", "message": str(exc)}), file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(json.dumps({"error": "numerical", "message": str(exc)}), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
