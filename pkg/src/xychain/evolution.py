"""
Time evolution of XY chains.

Two independent routes are provided: the closed-form one-excitation
amplitudes for an initial excitation on site 1, and exact propagation in
the full Hilbert space through the spectral decomposition of H.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import BadDims, UnsupportedCombination
from .linalg import HermitianEigen, eig_hermitian
from .xy_chain import (
    ChainSpec,
    build_hamiltonian,
    one_excitation_energies,
    one_excitation_index,
    require_isotropic,
)

NORM_TOL = 1e-10
DEFAULT_GRID = 2001


@dataclass(frozen=True)
class AmplitudeSet:
    """Site amplitudes ``b_n(t)`` of a one-excitation state at one time."""

    time: float
    b: np.ndarray

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.b) ** 2


@dataclass(frozen=True)
class TimeSeries:
    quantity: str
    sites: tuple[int, ...]
    times: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class SwapGateReport:
    maps: dict = field(repr=False)
    max_map_error: float
    sqrt_swap_unitarity_error: float
    sqrt_swap_square_error: float

    @property
    def passed(self) -> bool:
        return (
            self.max_map_error <= 1e-10
            and self.sqrt_swap_unitarity_error <= 1e-12
            and self.sqrt_swap_square_error <= 1e-12
        )


def amplitude_grid(spec: ChainSpec, times) -> np.ndarray:
    """
    ``b_n(t)`` for every time in ``times``; shape ``(len(times), N)``.

    b_n(t) = (1/N) sum_k exp(2 pi i (n-1) k / N - i t E_k),  E_k = J cos(2 pi k / N)
    """
    require_isotropic(spec)
    n = spec.n_sites
    times = np.atleast_1d(np.asarray(times, dtype=float))
    k = np.arange(1, n + 1)
    sites = np.arange(n)
    spatial = np.exp(2j * np.pi * np.outer(sites, k) / n)  # (n, k)
    temporal = np.exp(-1j * np.outer(times, one_excitation_energies(spec)))  # (t, k)
    return temporal @ spatial.T / n


def amplitudes_analytic(spec: ChainSpec, t: float) -> AmplitudeSet:
    """Amplitudes at time ``t`` for the initial state ``sigma_1^+ |0>^N``."""
    return AmplitudeSet(float(t), amplitude_grid(spec, [t])[0])


def probability_grid(spec: ChainSpec, times) -> np.ndarray:
    return np.abs(amplitude_grid(spec, times)) ** 2


def probability_series(spec: ChainSpec, t_grid) -> list[TimeSeries]:
    """Per-site occupation probabilities ``P(n, N, t) = |b_n(t)|^2``."""
    times = np.asarray(t_grid, dtype=float)
    probs = probability_grid(spec, times)
    return [
        TimeSeries("probability", (site,), times, probs[:, site - 1])
        for site in range(1, spec.n_sites + 1)
    ]


def default_time_grid(t_max: float = 4 * np.pi, points: int = DEFAULT_GRID) -> np.ndarray:
    return np.linspace(0.0, t_max, points)


@lru_cache(maxsize=32)
def spectral_decomposition(spec: ChainSpec) -> HermitianEigen:
    return eig_hermitian(build_hamiltonian(spec))


def propagator(spec: ChainSpec, t: float) -> np.ndarray:
    """``U(t) = exp(-i H t)``."""
    eig = spectral_decomposition(spec)
    return eig.apply_function(lambda w: np.exp(-1j * w * t))


def _check_state(spec: ChainSpec, psi0) -> np.ndarray:
    psi0 = np.asarray(psi0, dtype=complex).reshape(-1)
    if psi0.shape[0] != spec.dim:
        raise BadDims(f"state of length {psi0.shape[0]} does not match 2^{spec.n_sites}")
    norm = np.linalg.norm(psi0)
    if abs(norm - 1.0) > NORM_TOL:
        raise BadDims(f"state is not normalised (norm = {norm:.12f})")
    return psi0


def evolve_full_grid(spec: ChainSpec, psi0, times) -> np.ndarray:
    """Exact states at every time; shape ``(len(times), 2^N)``."""
    psi0 = _check_state(spec, psi0)
    eig = spectral_decomposition(spec)
    v = eig.eigenvectors
    coeffs = v.conj().T @ psi0
    times = np.atleast_1d(np.asarray(times, dtype=float))
    phases = np.exp(-1j * np.outer(times, eig.eigenvalues))
    return (phases * coeffs) @ v.T


def evolve_full(spec: ChainSpec, psi0, t: float) -> np.ndarray:
    """Evolve ``psi0`` for time ``t`` in the full ``2^N`` space."""
    return evolve_full_grid(spec, psi0, [t])[0]


def initial_excitation(spec: ChainSpec) -> np.ndarray:
    """``sigma_1^+ |0>^N``."""
    psi = np.zeros(spec.dim, dtype=complex)
    psi[one_excitation_index(1, spec.n_sites)] = 1.0
    return psi


def one_excitation_projection(spec: ChainSpec, states) -> np.ndarray:
    """Pick the ``sigma_n^+ |0>`` components out of full states (last axis)."""
    idx = [one_excitation_index(s, spec.n_sites) for s in range(1, spec.n_sites + 1)]
    return np.asarray(states)[..., idx]


def swap_gate_check(spec: ChainSpec) -> SwapGateReport:
    """
    Evaluate ``U(pi/2J)`` on the two-qubit basis and the square-root-of-swap ``U(pi/4J)``.

    Expected maps: |00> -> |00>, |11> -> |11>, |01> -> -i|10>, |10> -> -i|01>.
    """
    if spec.n_sites != 2:
        raise UnsupportedCombination("swap gate check needs exactly two sites")
    require_isotropic(spec)
    j = spec.coupling_j
    if j == 0:
        raise UnsupportedCombination("swap gate needs a nonzero coupling")
    u_swap = propagator(spec, np.pi / (2 * j))
    u_root = propagator(spec, np.pi / (4 * j))

    basis = np.eye(4, dtype=complex)
    expected = {
        "00": basis[0],
        "01": -1j * basis[2],
        "10": -1j * basis[1],
        "11": basis[3],
    }
    maps = {}
    for label, target in expected.items():
        actual = u_swap @ basis[int(label, 2)]
        maps[label] = (target, actual, float(np.max(np.abs(actual - target))))

    unitarity = float(np.max(np.abs(u_root.conj().T @ u_root - np.eye(4))))
    square = float(np.max(np.abs(u_root @ u_root - u_swap)))
    return SwapGateReport(
        maps=maps,
        max_map_error=max(err for *_, err in maps.values()),
        sqrt_swap_unitarity_error=unitarity,
        sqrt_swap_square_error=square,
    )
