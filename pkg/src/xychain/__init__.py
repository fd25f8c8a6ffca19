"""Entanglement dynamics and thermal entanglement in Heisenberg XY spin chains."""

__version__ = "0.1.0"

from .entanglement import (
    ConcurrenceValue,
    concurrence,
    concurrence_one_excitation,
    concurrence_pair_from_state,
)
from .evolution import (
    AmplitudeSet,
    TimeSeries,
    amplitudes_analytic,
    evolve_full,
    probability_series,
    swap_gate_check,
)
from .linalg import eig_hermitian, eigvals_general, kron, partial_trace
from .thermal import (
    CriticalTemperature,
    concurrence_anisotropic_closed_form,
    concurrence_isotropic_closed_form,
    critical_temperature_anisotropic,
    critical_temperature_isotropic,
    thermal_state_anisotropic,
    thermal_state_isotropic,
    zero_temperature_limit,
)
from .wstate import CrossingReport, WSpec, find_crossings, make_w_state, periodicity_check, verify_w_at_crossing
from .xy_chain import ChainSpec, build_hamiltonian, frequency_ratio_rationality, one_excitation_spectrum

__all__ = [
    "AmplitudeSet",
    "ChainSpec",
    "ConcurrenceValue",
    "CriticalTemperature",
    "CrossingReport",
    "TimeSeries",
    "WSpec",
    "amplitudes_analytic",
    "build_hamiltonian",
    "concurrence",
    "concurrence_anisotropic_closed_form",
    "concurrence_isotropic_closed_form",
    "concurrence_one_excitation",
    "concurrence_pair_from_state",
    "critical_temperature_anisotropic",
    "critical_temperature_isotropic",
    "eig_hermitian",
    "eigvals_general",
    "evolve_full",
    "find_crossings",
    "frequency_ratio_rationality",
    "kron",
    "make_w_state",
    "one_excitation_spectrum",
    "partial_trace",
    "periodicity_check",
    "probability_series",
    "swap_gate_check",
    "thermal_state_anisotropic",
    "thermal_state_isotropic",
    "verify_w_at_crossing",
    "zero_temperature_limit",
]
