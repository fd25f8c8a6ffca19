"""Self-verification suites run by ``xychain check``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .entanglement import concurrence, concurrence_pair_from_state
from .evolution import (
    amplitude_grid,
    evolve_full_grid,
    initial_excitation,
    one_excitation_projection,
    probability_grid,
    swap_gate_check,
)
from .thermal import (
    concurrence_anisotropic_closed_form,
    concurrence_isotropic_closed_form,
    critical_temperature_anisotropic,
    critical_temperature_isotropic,
    thermal_state_numeric,
    zero_temperature_limit,
)
from .wstate import WSpec, find_crossings, make_w_state, periodicity_check, verify_w_at_crossing
from .xy_chain import ChainSpec, embed_one_excitation, embed_one_hole

SUITES = ("evolution", "wstate", "thermal", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}\t{status}\t{self.residual:.3e}"


def _result(name: str, residual: float, tol: float) -> CheckResult:
    residual = float(residual)
    return CheckResult(name, bool(residual <= tol), residual)


def _evolution_checks() -> list[CheckResult]:
    out = []
    t = np.linspace(0.0, 20.0, 401)

    norm_err = max(
        np.max(np.abs(probability_grid(ChainSpec(n), t).sum(axis=1) - 1)) for n in range(2, 13)
    )
    out.append(_result("norm conservation N=2..12", norm_err, 1e-10))

    refl = 0.0
    for n in range(3, 13):
        p = probability_grid(ChainSpec(n), t)
        for site in range(2, n + 1):
            mirror = (n + 2 - site) % n or n
            refl = max(refl, np.max(np.abs(p[:, site - 1] - p[:, mirror - 1])))
    out.append(_result("reflection symmetry N=3..12", refl, 1e-10))

    p3 = probability_grid(ChainSpec(3), t)
    eq21 = np.max(np.abs(p3[:, 0] - (5 + 4 * np.cos(1.5 * t)) / 9))
    eq21 = max(eq21, np.max(np.abs(p3[:, 1] - (2 - 2 * np.cos(1.5 * t)) / 9)))
    out.append(_result("N=3 probabilities closed form", eq21, 1e-12))

    p4 = probability_grid(ChainSpec(4), t)
    eq25 = max(
        np.max(np.abs(p4[:, 0] - np.cos(t / 2) ** 4)),
        np.max(np.abs(p4[:, 2] - np.sin(t / 2) ** 4)),
        np.max(np.abs(p4[:, 1] - np.sin(t) ** 2 / 4)),
        np.max(np.abs(p4[:, 3] - np.sin(t) ** 2 / 4)),
    )
    out.append(_result("N=4 probabilities closed form", eq25, 1e-12))

    for n, expected in ((3, 4 * np.pi / 3), (4, 2 * np.pi)):
        rep = periodicity_check(ChainSpec(n))
        err = abs(rep.period - expected) if rep.is_periodic else np.inf
        out.append(_result(f"N={n} period", max(err, rep.max_return_error or 0.0), 1e-9))
    out.append(
        CheckResult("N=5 aperiodic", not periodicity_check(ChainSpec(5)).is_periodic, 0.0)
    )

    oracle = 0.0
    for n in range(2, 9):
        spec = ChainSpec(n)
        full = one_excitation_projection(spec, evolve_full_grid(spec, initial_excitation(spec), t))
        oracle = max(oracle, np.max(np.abs(full - amplitude_grid(spec, t))))
    out.append(_result("full-space evolution vs analytic amplitudes N=2..8", oracle, 1e-10))

    mirror = 0.0
    for n in range(2, 7):
        spec = ChainSpec(n)
        b = amplitude_grid(spec, t)
        psi0 = embed_one_hole(np.eye(n)[0], n)
        states = evolve_full_grid(spec, psi0, t)
        expected = np.array([embed_one_hole(row, n) for row in b])
        mirror = max(mirror, np.max(np.abs(states - expected)))
    out.append(_result("spin-flip mirror evolution N=2..6", mirror, 1e-10))

    swap = swap_gate_check(ChainSpec(2))
    out.append(_result("swap gate U(pi/2J) basis maps", swap.max_map_error, 1e-10))
    out.append(_result("sqrt-swap squared equals swap", swap.sqrt_swap_square_error, 1e-12))
    return out


def _wstate_checks() -> list[CheckResult]:
    out = []
    for n, t_max, expected in (
        (3, 4 * np.pi / 3, [4 * np.pi / 9, 8 * np.pi / 9]),
        (4, 2 * np.pi, [np.pi / 2, 3 * np.pi / 2]),
    ):
        spec = ChainSpec(n)
        rep = find_crossings(spec, t_max)
        if len(rep.times) != len(expected):
            out.append(CheckResult(f"N={n} crossings", False, np.inf))
            continue
        label = "{4pi/9, 8pi/9}" if n == 3 else "{pi/2, 3pi/2}"
        out.append(_result(f"N={n} crossings at {label}", np.max(np.abs(rep.times - expected)), 1e-6))

        conc = 0.0
        mod = 0.0
        for t in rep.times:
            chk = verify_w_at_crossing(spec, t, strict=False)
            mod = max(mod, chk.max_modulus_error)
            psi = amplitude_grid(spec, [t])[0]
            full = embed_one_excitation(psi, n)
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    conc = max(conc, abs(concurrence_pair_from_state(full, i, j).value - 2 / n))
        out.append(_result(f"N={n} W amplitude moduli at crossings", mod, 1e-8))
        out.append(_result(f"N={n} pairwise concurrence 2/N at crossings", conc, 1e-6))

    phase_targets = {
        (3, 4 * np.pi / 9): [0, -2 * np.pi / 3, -2 * np.pi / 3],
        (3, 8 * np.pi / 9): [0, 2 * np.pi / 3, 2 * np.pi / 3],
        (4, np.pi / 2): [0, -np.pi / 2, np.pi, -np.pi / 2],
        (4, 3 * np.pi / 2): [0, np.pi / 2, np.pi, np.pi / 2],
    }
    phase_err = 0.0
    for (n, t), target in phase_targets.items():
        got = verify_w_at_crossing(ChainSpec(n), t).phases
        phase_err = max(phase_err, np.max(np.abs(np.angle(np.exp(1j * (got - target))))))
    out.append(_result("W-state phases at crossing times", phase_err, 1e-6))

    rep5 = find_crossings(ChainSpec(5), 100.0)
    out.append(CheckResult("N=5 no crossings up to t=100", len(rep5) == 0, rep5.min_spread))
    period6 = periodicity_check(ChainSpec(6))
    rep6 = find_crossings(ChainSpec(6), period6.period)
    out.append(
        CheckResult(
            "N=6 periodic without crossings",
            period6.is_periodic and len(rep6) == 0 and rep6.min_spread > 1e-3,
            rep6.min_spread,
        )
    )

    koashi = 0.0
    rng = np.random.default_rng(7)
    for n in range(2, 11):
        for _ in range(3):
            psi = make_w_state(WSpec(n, tuple(rng.uniform(-np.pi, np.pi, n))))
            koashi = max(koashi, abs(concurrence_pair_from_state(psi, 1, n).value - 2 / n))
    out.append(_result("W_N pairwise concurrence 2/N, N=2..10", koashi, 1e-12))
    return out


def _thermal_checks() -> list[CheckResult]:
    out = []
    tc = critical_temperature_isotropic(1.0).value
    out.append(_result("T_c(gamma=0) = 1.1346", abs(tc - 1.1346), 1e-4))
    out.append(
        _result(
            "anisotropic T_c at gamma=0 equals isotropic",
            abs(critical_temperature_anisotropic(1.0, 0.0).value - tc),
            1e-12,
        )
    )
    tcs = [critical_temperature_anisotropic(1.0, g).value for g in (0.0, 0.2, 0.4, 0.6, 0.8, 0.95)]
    out.append(CheckResult("T_c decreases with gamma", bool(np.all(np.diff(tcs) < 0)), 0.0))

    iso = aniso = sign = 0.0
    for temp in np.linspace(0.1, 3.0, 12):
        for b in (0.0, 0.5, 1.0, 1.2, 2.0):
            m = concurrence(thermal_state_numeric(1.0, temp, B=b)).value
            iso = max(iso, abs(m - concurrence_isotropic_closed_form(1.0, b, temp)))
            sign = max(sign, abs(m - concurrence(thermal_state_numeric(-1.0, temp, B=b)).value))
        for g in (0.0, 0.3, 0.6, 0.8, 1.0):
            m = concurrence(thermal_state_numeric(1.0, temp, gamma=g)).value
            aniso = max(aniso, abs(m - concurrence_anisotropic_closed_form(1.0, g, temp)))
            sign = max(sign, abs(m - concurrence(thermal_state_numeric(-1.0, temp, gamma=g)).value))
    out.append(_result("isotropic closed form vs Gibbs-state concurrence", iso, 1e-10))
    out.append(_result("anisotropic closed form vs Gibbs-state concurrence", aniso, 1e-10))
    out.append(_result("ferromagnetic equals antiferromagnetic", sign, 1e-10))

    limits = [zero_temperature_limit(1.0, b) for b in (0.5, 1.0, 1.5)]
    out.append(_result("zero-temperature limits (1, 1/2, 0)", np.max(np.abs(np.subtract(limits, [1, 0.5, 0]))), 0.0))
    lo = concurrence_isotropic_closed_form(1.0, 0.9, 1e-3)
    hi = concurrence_isotropic_closed_form(1.0, 1.1, 1e-3)
    out.append(CheckResult("quantum phase transition step at B=J", lo >= 0.99 and hi <= 0.01, hi))
    return out


_SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "evolution": _evolution_checks,
    "wstate": _wstate_checks,
    "thermal": _thermal_checks,
}


def run_checks(suite: str) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    names = list(_SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        results.extend(_SUITES[name]())
    return results
