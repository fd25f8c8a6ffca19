"""
Data generators behind each figure, emitted as deterministic CSV.

Figures 1-3 are the site probabilities and pairwise concurrences of the
chain started in ``sigma_1^+ |0>^N`` (N = 3, 4, 5). Figures 4-6 are the
thermal concurrence of two qubits versus temperature (per field), versus
field (per temperature) and versus temperature (per anisotropy).

The field and temperature values for figures 4 and 5 are not fixed by
the figure captions; the defaults below are our own choice.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .errors import BadFigureId, BadOverride, NoRoot
from .evolution import DEFAULT_GRID, amplitude_grid
from .thermal import (
    concurrence_anisotropic_closed_form,
    concurrence_isotropic_closed_form,
    critical_temperature_anisotropic,
    critical_temperature_isotropic,
    zero_temperature_limit,
)
from .wstate import find_crossings, periodicity_check
from .xy_chain import ChainSpec

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5", "fig6")

_DYNAMICS_PAIRS = {
    "fig1": ((1, 2), (1, 3), (2, 3)),
    "fig2": ((1, 2), (2, 3)),
    "fig3": ((1, 2), (2, 3)),
}

DEFAULTS: dict[str, dict[str, Any]] = {
    "fig1": {"n": 3, "j": 1.0, "t_max": 4 * np.pi, "grid": DEFAULT_GRID},
    "fig2": {"n": 4, "j": 1.0, "t_max": 4 * np.pi, "grid": DEFAULT_GRID},
    "fig3": {"n": 5, "j": 1.0, "t_max": 4 * np.pi, "grid": DEFAULT_GRID},
    "fig4": {"j": 1.0, "b": [0.0, 0.5, 1.0, 1.2], "t_min": 1e-3, "t_max": 2.0, "grid": DEFAULT_GRID},
    "fig5": {"j": 1.0, "t": [0.01, 0.5, 1.0], "b_min": 0.0, "b_max": 2.5, "grid": DEFAULT_GRID},
    "fig6": {"j": 1.0, "gamma": [0.0, 0.6, 0.8], "t_min": 1e-3, "t_max": 2.0, "grid": DEFAULT_GRID},
}

_LIST_KEYS = {"b", "t", "gamma"}
_INT_KEYS = {"n", "grid"}


@dataclass(frozen=True)
class FigureJob:
    figure_id: str
    overrides: dict[str, Any] = field(default_factory=dict)


@dataclass
class FigureResult:
    header: list[str]
    rows: np.ndarray
    summary: dict[str, Any]

    def to_csv(self) -> str:
        return format_csv(self.header, self.rows)


def _fmt(x: float) -> str:
    # 15 significant digits; "+ 0.0" folds -0.0 into 0
    return format(float(x) + 0.0, ".15g")


def format_csv(header: list[str], rows) -> str:
    out = io.StringIO()
    out.write(",".join(header) + "\n")
    for row in np.asarray(rows, dtype=float):
        out.write(",".join(_fmt(x) for x in row) + "\n")
    return out.getvalue()


def parse_override(key: str, value) -> Any:
    """Coerce one override value; lists are comma separated."""
    key = key.strip().lower()
    try:
        if key in _LIST_KEYS:
            if isinstance(value, str):
                items = [v for v in value.strip().strip("[]").split(",") if v.strip()]
            else:
                items = list(value)
            if not items:
                raise ValueError("empty list")
            return [float(v) for v in items]
        if key in _INT_KEYS:
            number = float(value)
            if number != int(number):
                raise ValueError("not an integer")
            return int(number)
        return float(value)
    except (TypeError, ValueError) as exc:
        raise BadOverride(f"cannot parse {key}={value!r}: {exc}") from exc


def resolve_parameters(job: FigureJob) -> dict[str, Any]:
    if job.figure_id not in DEFAULTS:
        raise BadFigureId(f"unknown figure {job.figure_id!r}; choose from {', '.join(FIGURE_IDS)}")
    params = dict(DEFAULTS[job.figure_id])
    for key, value in job.overrides.items():
        k = key.strip().lower()
        if k not in params:
            raise BadOverride(
                f"{job.figure_id} does not accept {key!r}; valid keys: {', '.join(sorted(params))}"
            )
        params[k] = parse_override(k, value)
    if params["grid"] < 2:
        raise BadOverride("grid must be at least 2")
    if "n" in params and not 2 <= params["n"] <= 12:
        raise BadOverride("n must lie in 2..12")
    if job.figure_id in ("fig4", "fig6") and not 0 < params["t_min"] < params["t_max"]:
        raise BadOverride("temperature range needs 0 < t_min < t_max")
    if job.figure_id == "fig5" and any(t <= 0 for t in params["t"]):
        raise BadOverride("temperatures must be positive")
    if job.figure_id == "fig6" and any(not 0 <= g <= 1 for g in params["gamma"]):
        raise BadOverride("gamma values must lie in [0, 1]")
    return params


def _dynamics(fig: str, p: dict[str, Any]) -> FigureResult:
    n = p["n"]
    spec = ChainSpec(n, p["j"])
    times = np.linspace(0.0, p["t_max"], p["grid"])
    b = amplitude_grid(spec, times)
    probs = np.abs(b) ** 2
    pairs = [(i, j) for i, j in _DYNAMICS_PAIRS[fig] if max(i, j) <= n]
    conc = [2 * np.abs(b[:, i - 1] * b[:, j - 1]) for i, j in pairs]
    header = ["t", *(f"P{s}" for s in range(1, n + 1)), *(f"C_{i}{j}" for i, j in pairs)]
    rows = np.column_stack([times, probs, *conc])
    report = find_crossings(spec, p["t_max"]) if p["t_max"] > 0 else None
    period = periodicity_check(spec)
    summary = {
        "figure": fig,
        "n": n,
        "crossings": [float(t) for t in report.times] if report else [],
        "min_spread": report.min_spread if report else None,
        "min_spread_time": report.min_spread_time if report else None,
        "periodic": period.is_periodic,
        "period": period.period,
    }
    return FigureResult(header, rows, summary)


def _temperature_axis(p: dict[str, Any]) -> np.ndarray:
    return np.linspace(p["t_min"], p["t_max"], p["grid"])


def _fig4(p: dict[str, Any]) -> FigureResult:
    temps = _temperature_axis(p)
    j = p["j"]
    cols = [[concurrence_isotropic_closed_form(j, b, t) for t in temps] for b in p["b"]]
    header = ["T", *(f"C_B={_fmt(b)}" for b in p["b"])]
    summary = {"figure": "fig4", "critical_temperature": critical_temperature_isotropic(j).value}
    return FigureResult(header, np.column_stack([temps, *cols]), summary)


def _fig5(p: dict[str, Any]) -> FigureResult:
    fields = np.linspace(p["b_min"], p["b_max"], p["grid"])
    j = p["j"]
    cols = [[concurrence_isotropic_closed_form(j, b, t) for b in fields] for t in p["t"]]
    header = ["B", *(f"C_T={_fmt(t)}" for t in p["t"])]
    summary = {
        "figure": "fig5",
        "critical_field": abs(j),
        "zero_temperature_limits": {
            "B<J": zero_temperature_limit(j, 0.5 * abs(j)),
            "B=J": zero_temperature_limit(j, abs(j)),
            "B>J": zero_temperature_limit(j, 1.5 * abs(j)),
        },
    }
    return FigureResult(header, np.column_stack([fields, *cols]), summary)


def _fig6(p: dict[str, Any]) -> FigureResult:
    temps = _temperature_axis(p)
    j = p["j"]
    cols = [[concurrence_anisotropic_closed_form(j, g, t) for t in temps] for g in p["gamma"]]
    header = ["T", *(f"C_gamma={_fmt(g)}" for g in p["gamma"])]
    tcs = {}
    for g in p["gamma"]:
        try:
            tcs[_fmt(g)] = critical_temperature_anisotropic(j, g).value
        except NoRoot:
            tcs[_fmt(g)] = None
    summary = {"figure": "fig6", "critical_temperatures": tcs}
    return FigureResult(header, np.column_stack([temps, *cols]), summary)


_GENERATORS: dict[str, Callable[[dict[str, Any]], FigureResult]] = {
    "fig1": lambda p: _dynamics("fig1", p),
    "fig2": lambda p: _dynamics("fig2", p),
    "fig3": lambda p: _dynamics("fig3", p),
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6": _fig6,
}


def run_figure(job: FigureJob) -> FigureResult:
    """Generate the data table and summary record for one figure."""
    params = resolve_parameters(job)
    return _GENERATORS[job.figure_id](params)
