"""
W states: construction, detection of generation times, and periodicity.

Starting from ``sigma_1^+ |0>^N`` the isotropic chain produces a
generalised W state whenever all site probabilities ``|b_n(t)|^2``
coincide. Such times are located as zeros of the spread
``s(t) = max_n P - min_n P``: a grid scan brackets every local minimum of
``s`` and golden-section search refines it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAWState
from .evolution import amplitude_grid, amplitudes_analytic
from .xy_chain import ChainSpec, embed_one_excitation, fundamental_frequency, require_isotropic

CROSSING_TOL = 1e-7
REFINE_XTOL = 1e-9
POINTS_PER_PERIOD = 10_000
W_MODULUS_TOL = 1e-8

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class WSpec:
    n_qubits: int
    phases: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.n_qubits < 2:
            raise ValueError("a W state needs at least two qubits")
        if self.phases is not None and len(self.phases) != self.n_qubits:
            raise ValueError(f"expected {self.n_qubits} phases, got {len(self.phases)}")


@dataclass(frozen=True)
class CrossingReport:
    times: np.ndarray
    fidelity_at_times: np.ndarray
    max_probability_spread_at_times: np.ndarray
    # closest approach to equal probabilities over the scanned window
    min_spread: float
    min_spread_time: float

    def __len__(self) -> int:
        return len(self.times)


@dataclass(frozen=True)
class WCheck:
    is_w: bool
    phases: np.ndarray
    max_modulus_error: float


@dataclass(frozen=True)
class PeriodicityReport:
    is_periodic: bool
    period: float | None
    max_return_error: float | None = None


def make_w_state(spec: WSpec) -> np.ndarray:
    """``sum_n exp(i theta_n) sigma_n^+ |0>^N / sqrt(N)`` as a full state vector."""
    n = spec.n_qubits
    theta = np.zeros(n) if spec.phases is None else np.asarray(spec.phases, dtype=float)
    return embed_one_excitation(np.exp(1j * theta) / np.sqrt(n), n)


def probability_spread(spec: ChainSpec, times) -> np.ndarray:
    p = np.abs(amplitude_grid(spec, times)) ** 2
    return p.max(axis=1) - p.min(axis=1)


def golden_section_minimize(f, a: float, b: float, xtol: float = REFINE_XTOL) -> tuple[float, float]:
    """Minimiser of a unimodal ``f`` on ``[a, b]``, located to within ``xtol``."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _scan_step(spec: ChainSpec, points_per_period: int) -> float:
    omega = fundamental_frequency(spec) if spec.coupling_j else None
    period = 2 * np.pi / omega if omega else 2 * np.pi / abs(spec.coupling_j or 1.0)
    return period / points_per_period


def phases_relative_to_first(b) -> np.ndarray:
    """Phases of ``b_n`` relative to ``b_1``, wrapped into (-pi, pi]."""
    b = np.asarray(b, dtype=complex)
    rel = np.angle(b * np.conj(b[0]))
    rel = np.where(rel <= -np.pi + 1e-12, rel + 2 * np.pi, rel)
    rel[0] = 0.0
    return rel


def w_fidelity(b) -> float:
    """``|<W_target|psi>|^2`` with the target phases taken from ``b`` itself."""
    b = np.asarray(b, dtype=complex)
    n = b.shape[0]
    target = np.exp(1j * np.angle(b)) / np.sqrt(n)
    return float(abs(np.vdot(target, b)) ** 2)


def find_crossings(
    spec: ChainSpec,
    t_max: float,
    tol: float = CROSSING_TOL,
    points_per_period: int = POINTS_PER_PERIOD,
) -> CrossingReport:
    """
    All times in ``(0, t_max]`` where every site probability is equal within ``tol``.

    The grid spacing is one ``points_per_period``-th of the fundamental
    period (or of ``2 pi / J`` when no common period exists).
    """
    require_isotropic(spec)
    step = _scan_step(spec, points_per_period)
    n_pts = max(int(math.ceil(t_max / step)), 2) + 1
    grid = np.linspace(0.0, t_max, n_pts)
    s = probability_spread(spec, grid)

    def spread(t: float) -> float:
        return float(probability_spread(spec, [t])[0])

    interior = np.flatnonzero((s[1:-1] <= s[:-2]) & (s[1:-1] <= s[2:])) + 1
    candidates = [(grid[i - 1], grid[i + 1]) for i in interior]
    if s[-1] <= s[-2]:
        candidates.append((grid[-2], grid[-1]))

    found: list[float] = []
    best_t, best_s = float(grid[np.argmin(s[1:]) + 1]), float(s[1:].min())
    for lo, hi in candidates:
        t, val = golden_section_minimize(spread, float(lo), float(hi))
        if val < best_s:
            best_t, best_s = t, val
        if val <= tol and t > 0.0 and not (found and t - found[-1] <= 10 * REFINE_XTOL):
            found.append(t)

    times = np.array(sorted(found))
    amps = amplitude_grid(spec, times) if times.size else np.zeros((0, spec.n_sites))
    fidelity = np.array([w_fidelity(b) for b in amps])
    p = np.abs(amps) ** 2
    spreads = p.max(axis=1) - p.min(axis=1) if times.size else np.zeros(0)
    return CrossingReport(times, fidelity, spreads, best_s, best_t)


def verify_w_at_crossing(spec: ChainSpec, t: float, strict: bool = True) -> WCheck:
    """
    Check that the evolved state at ``t`` is a generalised W state and extract its phases.

    Raises ``NotAWState`` when ``strict`` and some ``|b_n|`` differs from
    ``1/sqrt(N)`` by more than 1e-8.
    """
    b = amplitudes_analytic(spec, t).b
    n = spec.n_sites
    err = float(np.max(np.abs(np.abs(b) - 1 / np.sqrt(n))))
    is_w = err <= W_MODULUS_TOL
    if strict and not is_w:
        raise NotAWState(f"at t={t} the amplitude moduli deviate from 1/sqrt({n}) by {err:.2e}")
    return WCheck(is_w, phases_relative_to_first(b), err)


def periodicity_check(spec: ChainSpec, n_samples: int = 100, seed: int = 0) -> PeriodicityReport:
    """
    Whether ``b(t)`` returns to itself up to a global phase, and after what period.

    A common period exists only if every ratio of gap frequencies is
    rational; it is then confirmed at ``n_samples`` random times.
    """
    omega = fundamental_frequency(spec)
    if omega is None:
        return PeriodicityReport(False, None)
    period = 2 * np.pi / omega
    t0 = np.random.default_rng(seed).uniform(0.0, 10 * period, n_samples)
    b0 = amplitude_grid(spec, t0)
    b1 = amplitude_grid(spec, t0 + period)
    overlap = np.sum(b0.conj() * b1, axis=1)
    phase = overlap / np.abs(overlap)
    err = float(np.max(np.abs(b1 - phase[:, None] * b0)))
    return PeriodicityReport(err <= 1e-9, period, err)
