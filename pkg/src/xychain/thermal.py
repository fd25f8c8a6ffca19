"""
Thermal entanglement of two-qubit XY models.

Gibbs states ``exp(-H/T)/Z`` (k_B = 1) for the isotropic model in a field
and for the anisotropic model, their closed-form concurrences, critical
temperatures and the zero-temperature limit.

All closed forms are evaluated with the largest exponent factored out of
numerator and denominator, so they stay finite down to T -> 0+ where
``sinh(J/T)`` alone would overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadGamma, BadTemperature, NoRoot, ZeroCoupling
from .linalg import eig_hermitian
from .xy_chain import ChainSpec, build_hamiltonian

BISECT_MAX_ITER = 200
BRACKET_FACTOR = 2.0
T_HI_LIMIT = 1e3


@dataclass(frozen=True)
class CriticalTemperature:
    value: float
    residual: float


def _check_temperature(T: float) -> None:
    if not T > 0 or not math.isfinite(T):
        raise BadTemperature(f"temperature must be positive and finite, got {T!r}")


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma <= 1.0:
        raise BadGamma(f"gamma must lie in [0, 1], got {gamma!r}")


def gibbs_state(h, T: float) -> np.ndarray:
    """``exp(-H/T) / Tr exp(-H/T)`` via the spectral decomposition, ground energy shifted out."""
    _check_temperature(T)
    eig = eig_hermitian(h)
    w = eig.eigenvalues
    weights = np.exp(-(w - w[0]) / T)
    return eig.apply_function(lambda _: weights / weights.sum())


def thermal_state_numeric(J: float, T: float, B: float = 0.0, gamma: float = 0.0) -> np.ndarray:
    """Gibbs state of the two-qubit chain Hamiltonian built from bit operations."""
    return gibbs_state(build_hamiltonian(ChainSpec(2, J, gamma, B)), T)


def thermal_state_isotropic(J: float, B: float, T: float) -> np.ndarray:
    """
    Closed-form Gibbs state of ``(B/2)(sz1 + sz2) + J (s1+ s2- + s2+ s1-)``.

    In the basis {|00>, |01>, |10>, |11>}:
    diag(e^{-B/T}, cosh(J/T), cosh(J/T), e^{B/T}) with -sinh(J/T) coupling
    |01> and |10>, all over 2 (cosh(J/T) + cosh(B/T)).
    """
    _check_temperature(T)
    a, b = J / T, B / T
    m = max(abs(a), abs(b))
    # every entry and Z carry a common factor e^{-m}
    ch = 0.5 * (math.exp(abs(a) - m) + math.exp(-abs(a) - m))
    sh = math.copysign(0.5 * (math.exp(abs(a) - m) - math.exp(-abs(a) - m)), a)
    z = 2 * ch + math.exp(b - m) + math.exp(-b - m)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = math.exp(-b - m)
    rho[3, 3] = math.exp(b - m)
    rho[1, 1] = rho[2, 2] = ch
    rho[1, 2] = rho[2, 1] = -sh
    return rho / z


def thermal_state_anisotropic(J: float, gamma: float, T: float) -> np.ndarray:
    """
    Closed-form Gibbs state of ``(J/2)[(1+g) sx sx + (1-g) sy sy]``.

    Corner block (cosh(Jg/T), -sinh(Jg/T)) on {|00>, |11>}, central block
    (cosh(J/T), -sinh(J/T)) on {|01>, |10>}, over 2 (cosh(J/T) + cosh(Jg/T)).
    """
    _check_temperature(T)
    _check_gamma(gamma)
    a, c = J / T, J * gamma / T
    m = max(abs(a), abs(c))

    def ch_sh(x):
        ch = 0.5 * (math.exp(abs(x) - m) + math.exp(-abs(x) - m))
        sh = math.copysign(0.5 * (math.exp(abs(x) - m) - math.exp(-abs(x) - m)), x)
        return ch, sh

    ch_a, sh_a = ch_sh(a)
    ch_c, sh_c = ch_sh(c)
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = ch_c
    rho[0, 3] = rho[3, 0] = -sh_c
    rho[1, 1] = rho[2, 2] = ch_a
    rho[1, 2] = rho[2, 1] = -sh_a
    return rho / (2 * (ch_a + ch_c))


def concurrence_isotropic_closed_form(J: float, B: float, T: float) -> float:
    """
    ``max((sinh(|J|/T) - 1) / (cosh(J/T) + cosh(B/T)), 0)``.

    The concurrence is even in J, so |J| is used and the ferromagnetic
    case gives the same value as the antiferromagnetic one.
    """
    _check_temperature(T)
    a, b = abs(J) / T, abs(B) / T
    m = max(a, b)
    num = math.exp(a - m) - math.exp(-a - m) - 2 * math.exp(-m)
    den = math.exp(a - m) + math.exp(-a - m) + math.exp(b - m) + math.exp(-b - m)
    return max(num / den, 0.0)


def concurrence_anisotropic_closed_form(J: float, gamma: float, T: float) -> float:
    """``max((sinh(|J|/T) - cosh(J g/T)) / (cosh(J/T) + cosh(J g/T)), 0)``."""
    _check_temperature(T)
    _check_gamma(gamma)
    a = abs(J) / T
    # gamma <= 1 makes e^{a} the dominant exponential
    num = 1 - math.exp(-2 * a) - math.exp((gamma - 1) * a) - math.exp(-(gamma + 1) * a)
    den = 1 + math.exp(-2 * a) + math.exp((gamma - 1) * a) + math.exp(-(gamma + 1) * a)
    return max(num / den, 0.0)


def critical_temperature_isotropic(J: float) -> CriticalTemperature:
    """``T_c = |J| / arcsinh(1)``; the same for every field B."""
    if J == 0:
        raise ZeroCoupling("critical temperature is undefined for J = 0")
    tc = abs(J) / math.asinh(1.0)
    return CriticalTemperature(tc, abs(math.sinh(abs(J) / tc) - 1.0))


def _anisotropic_sign(J: float, gamma: float, T: float) -> float:
    """Same sign as ``sinh(|J|/T) - cosh(J g/T)`` without overflow."""
    a = abs(J) / T
    return 1 - math.exp(-2 * a) - math.exp((gamma - 1) * a) - math.exp(-(gamma + 1) * a)


def critical_temperature_anisotropic(J: float, gamma: float) -> CriticalTemperature:
    """
    Root of ``sinh(J/T) = cosh(J g/T)`` by bisection.

    The bracket starts at the isotropic value and is widened by factors of
    two until the sign changes. The Ising point ``gamma = 1`` has no root.
    """
    if J == 0:
        raise ZeroCoupling("critical temperature is undefined for J = 0")
    _check_gamma(gamma)
    if gamma == 1.0:
        raise NoRoot("Ising limit (gamma = 1): sinh(x) = cosh(x) has no finite root")

    def f(T):
        return _anisotropic_sign(J, gamma, T)

    t0 = critical_temperature_isotropic(J).value
    t_lo, t_hi = t0, t0
    for _ in range(BISECT_MAX_ITER):
        if f(t_lo) > 0:
            break
        t_lo /= BRACKET_FACTOR
    else:
        raise NoRoot(f"no positive f(T) found for gamma={gamma}")
    while not f(t_hi) < 0:
        t_hi *= BRACKET_FACTOR
        if t_hi > T_HI_LIMIT * abs(J):
            raise NoRoot(f"no sign change below T = {T_HI_LIMIT * abs(J)}")

    for _ in range(BISECT_MAX_ITER):
        mid = 0.5 * (t_lo + t_hi)
        if mid in (t_lo, t_hi):
            break
        if f(mid) > 0:
            t_lo = mid
        else:
            t_hi = mid
    tc = 0.5 * (t_lo + t_hi)
    residual = abs(math.sinh(abs(J) / tc) - math.cosh(J * gamma / tc))
    return CriticalTemperature(tc, residual)


def zero_temperature_limit(J: float, B: float) -> float:
    """
    ``lim_{T->0} C``: 1 below the critical field ``|B| = |J|``, 1/2 on it, 0 above.
    """
    if J == 0:
        raise ZeroCoupling("zero-temperature limit needs J != 0")
    b, j = abs(B), abs(J)
    if b < j:
        return 1.0
    if b == j:
        return 0.5
    return 0.0
