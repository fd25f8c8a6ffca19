import math

import numpy as np
import pytest

from xychain.entanglement import concurrence
from xychain.errors import BadGamma, BadTemperature, NoRoot, ZeroCoupling
from xychain.linalg import eig_hermitian
from xychain.thermal import (
    concurrence_anisotropic_closed_form,
    concurrence_isotropic_closed_form,
    critical_temperature_anisotropic,
    critical_temperature_isotropic,
    gibbs_state,
    thermal_state_anisotropic,
    thermal_state_isotropic,
    thermal_state_numeric,
    zero_temperature_limit,
)
from xychain.xy_chain import ChainSpec, build_hamiltonian

TC_ISO = 1 / math.log(1 + math.sqrt(2))


def naive_isotropic(j, b, t):
    """The closed form exactly as written, for moderate j/t, b/t."""
    return max((math.sinh(j / t) - 1) / (math.cosh(j / t) + math.cosh(b / t)), 0.0)


def naive_anisotropic(j, g, t):
    return max((math.sinh(j / t) - math.cosh(j * g / t)) / (math.cosh(j / t) + math.cosh(j * g / t)), 0.0)


def test_isotropic_matrix_entries():
    j, b, t = 1.0, 0.4, 0.7
    z = 2 * (math.cosh(j / t) + math.cosh(b / t))
    rho = thermal_state_isotropic(j, b, t)
    expected = np.zeros((4, 4))
    expected[0, 0] = math.exp(-b / t)
    expected[3, 3] = math.exp(b / t)
    expected[1, 1] = expected[2, 2] = math.cosh(j / t)
    expected[1, 2] = expected[2, 1] = -math.sinh(j / t)
    assert np.allclose(rho, expected / z, atol=1e-15)


def test_anisotropic_matrix_entries():
    j, g, t = 1.0, 0.6, 0.5
    z = 2 * (math.cosh(j / t) + math.cosh(j * g / t))
    rho = thermal_state_anisotropic(j, g, t)
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[3, 3] = math.cosh(j * g / t)
    expected[0, 3] = expected[3, 0] = -math.sinh(j * g / t)
    expected[1, 1] = expected[2, 2] = math.cosh(j / t)
    expected[1, 2] = expected[2, 1] = -math.sinh(j / t)
    assert np.allclose(rho, expected / z, atol=1e-15)


def test_gibbs_state_against_taylor_exponential():
    h = build_hamiltonian(ChainSpec(2, 1.0, field_b=0.3))
    t = 0.9
    x = -h / t
    expm = np.eye(4, dtype=complex)
    term = np.eye(4, dtype=complex)
    for k in range(1, 80):
        term = term @ x / k
        expm = expm + term
    assert np.allclose(gibbs_state(h, t), expm / np.trace(expm), atol=1e-14)


@pytest.mark.parametrize("j", [1.0, -1.0, 0.5])
@pytest.mark.parametrize("b", [0.0, 0.5, 1.0, 1.2, -0.7])
@pytest.mark.parametrize("t", [0.02, 0.3, 1.0, 3.0])
def test_isotropic_closed_matrix_equals_gibbs_state(j, b, t):
    assert np.max(np.abs(thermal_state_isotropic(j, b, t) - thermal_state_numeric(j, t, B=b))) <= 1e-12


@pytest.mark.parametrize("j", [1.0, -1.0])
@pytest.mark.parametrize("g", [0.0, 0.3, 0.6, 1.0])
@pytest.mark.parametrize("t", [0.02, 0.5, 2.0])
def test_anisotropic_closed_matrix_equals_gibbs_state(j, g, t):
    assert np.max(np.abs(thermal_state_anisotropic(j, g, t) - thermal_state_numeric(j, t, gamma=g))) <= 1e-12


def test_anisotropic_reduces_to_isotropic_at_gamma_zero():
    for t in (0.1, 0.8, 2.0):
        assert np.allclose(thermal_state_anisotropic(1.0, 0.0, t), thermal_state_isotropic(1.0, 0.0, t))
        assert concurrence_anisotropic_closed_form(1.0, 0.0, t) == pytest.approx(
            concurrence_isotropic_closed_form(1.0, 0.0, t), abs=1e-15
        )


def test_gibbs_states_are_valid_and_stationary():
    for t in (0.05, 0.5, 2.0):
        for b in (0.0, 1.0, 2.0):
            h = build_hamiltonian(ChainSpec(2, 1.0, field_b=b))
            rho = gibbs_state(h, t)
            assert abs(np.trace(rho) - 1) <= 1e-12
            assert np.max(np.abs(rho - rho.conj().T)) <= 1e-12
            assert eig_hermitian(rho).eigenvalues.min() >= -1e-12
            assert np.max(np.abs(h @ rho - rho @ h)) <= 1e-12


def test_isotropic_closed_form_values():
    assert concurrence_isotropic_closed_form(1, 0, 1) == pytest.approx(0.0688932907770460, abs=1e-15)
    assert concurrence_isotropic_closed_form(1, 0, 0.1) == pytest.approx(
        (math.sinh(10) - 1) / (math.cosh(10) + 1), abs=1e-15
    )
    assert concurrence_isotropic_closed_form(1, 0, 0.1) == pytest.approx(0.99982, abs=1e-5)


@pytest.mark.parametrize("j", [1.0, 0.7])
def test_closed_forms_match_naive_formula(j):
    for t in np.linspace(0.1, 3, 30):
        for b in (0.0, 0.5, 1.3):
            assert concurrence_isotropic_closed_form(j, b, t) == pytest.approx(naive_isotropic(j, b, t), abs=1e-13)
        for g in (0.0, 0.4, 0.8, 1.0):
            assert concurrence_anisotropic_closed_form(j, g, t) == pytest.approx(naive_anisotropic(j, g, t), abs=1e-13)


def test_closed_forms_finite_as_temperature_vanishes():
    for t in (1e-3, 1e-6, 1e-9):
        assert concurrence_isotropic_closed_form(1.0, 0.0, t) == pytest.approx(1.0)
        assert concurrence_isotropic_closed_form(1.0, 1.2, t) == pytest.approx(0.0, abs=1e-12)
        assert concurrence_anisotropic_closed_form(1.0, 0.6, t) == pytest.approx(1.0)
        rho = thermal_state_isotropic(1.0, 1.2, t)
        assert np.all(np.isfinite(rho))


def test_high_field_low_temperature_ground_state_has_no_entanglement():
    rho = thermal_state_isotropic(1.0, 1.2, 1e-3)
    assert concurrence(rho).value == pytest.approx(0.0, abs=1e-12)
    assert max(rho[0, 0].real, rho[3, 3].real) == pytest.approx(1.0)


def test_high_temperature_is_maximally_mixed():
    rho = thermal_state_isotropic(1.0, 0.0, 1e6)
    assert np.allclose(rho, np.eye(4) / 4, atol=1e-6)
    assert concurrence(rho).value == 0.0


def test_ising_point_has_no_thermal_entanglement():
    for t in (0.01, 0.5, 2.0):
        assert concurrence_anisotropic_closed_form(1.0, 1.0, t) == 0.0
        assert concurrence(thermal_state_anisotropic(1.0, 1.0, t)).value == pytest.approx(0.0, abs=1e-12)


def test_anisotropic_dual_path_value():
    value = concurrence_anisotropic_closed_form(1.0, 0.6, 0.5)
    assert value == pytest.approx(naive_anisotropic(1.0, 0.6, 0.5), abs=1e-15)
    assert value > 0
    assert concurrence(thermal_state_numeric(1.0, 0.5, gamma=0.6)).value == pytest.approx(value, abs=1e-10)


def test_dual_path_grid():
    temps = np.geomspace(0.02, 4.0, 25)
    worst = 0.0
    for t in temps:
        for b in np.linspace(-2.0, 2.0, 21):
            worst = max(worst, abs(concurrence(thermal_state_numeric(1.0, t, B=b)).value
                                   - concurrence_isotropic_closed_form(1.0, b, t)))
        for g in np.linspace(0.0, 1.0, 21):
            worst = max(worst, abs(concurrence(thermal_state_numeric(1.0, t, gamma=g)).value
                                   - concurrence_anisotropic_closed_form(1.0, g, t)))
    assert worst <= 1e-10


def test_sign_of_coupling_irrelevant():
    for t in (0.1, 0.6, 1.5):
        for b in (0.0, 0.8):
            assert concurrence(thermal_state_numeric(-1.0, t, B=b)).value == pytest.approx(
                concurrence(thermal_state_numeric(1.0, t, B=b)).value, abs=1e-10
            )
        assert concurrence_isotropic_closed_form(-1.0, 0.0, t) == concurrence_isotropic_closed_form(1.0, 0.0, t)


def test_critical_temperature_isotropic():
    tc = critical_temperature_isotropic(1.0)
    assert tc.value == pytest.approx(TC_ISO, abs=1e-15)
    assert tc.value == pytest.approx(1.1346, abs=1e-4)
    assert tc.residual <= 1e-10
    assert critical_temperature_isotropic(2.0).value == pytest.approx(2 * TC_ISO)
    assert critical_temperature_isotropic(-1.0).value == pytest.approx(TC_ISO)
    with pytest.raises(ZeroCoupling):
        critical_temperature_isotropic(0.0)


@pytest.mark.parametrize("b", [0.0, 0.5, 1.0, 1.2, 2.0])
@pytest.mark.parametrize("j", [1.0, -1.0])
def test_no_entanglement_above_critical_temperature(b, j):
    tc = critical_temperature_isotropic(j).value
    for t in (tc * 1.0001, tc * 1.5, tc * 4):
        assert concurrence(thermal_state_numeric(j, t, B=b)).value == pytest.approx(0.0, abs=1e-12)
        assert concurrence_isotropic_closed_form(j, b, t) == 0.0
    assert concurrence_isotropic_closed_form(j, b, tc * 0.99) > 0


def test_critical_temperature_anisotropic():
    assert critical_temperature_anisotropic(1.0, 0.0).value == pytest.approx(TC_ISO, abs=1e-12)
    tc = critical_temperature_anisotropic(1.0, 0.6)
    assert abs(math.sinh(1 / tc.value) - math.cosh(0.6 / tc.value)) <= 1e-10
    assert tc.residual <= 1e-10
    assert tc.value < TC_ISO
    with pytest.raises(NoRoot):
        critical_temperature_anisotropic(1.0, 1.0)
    with pytest.raises(BadGamma):
        critical_temperature_anisotropic(1.0, 1.2)
    with pytest.raises(ZeroCoupling):
        critical_temperature_anisotropic(0.0, 0.3)


def test_critical_temperature_decreases_with_gamma():
    gammas = np.linspace(0, 0.98, 30)
    tcs = [critical_temperature_anisotropic(1.0, g).value for g in gammas]
    assert np.all(np.diff(tcs) < 0)
    for g, tc in zip(gammas, tcs):
        assert concurrence_anisotropic_closed_form(1.0, g, tc * 1.001) == 0.0
        assert concurrence_anisotropic_closed_form(1.0, g, tc * 0.999) > 0.0


def test_anisotropic_concurrence_monotone_in_temperature():
    for g in (0.0, 0.6, 0.8):
        tc = critical_temperature_anisotropic(1.0, g).value
        temps = np.linspace(1e-3, tc, 2000)
        c = np.array([concurrence_anisotropic_closed_form(1.0, g, t) for t in temps])
        assert np.all(np.diff(c) <= 1e-15)
        assert c[0] == pytest.approx(1.0)


def test_zero_temperature_limit():
    assert zero_temperature_limit(1.0, 0.5) == 1.0
    assert zero_temperature_limit(1.0, 1.0) == 0.5
    assert zero_temperature_limit(1.0, 1.5) == 0.0
    with pytest.raises(ZeroCoupling):
        zero_temperature_limit(0.0, 1.0)


def test_critical_field_low_temperature_approaches_half():
    # equal mixture of the singlet and the polarised ground state
    assert concurrence_isotropic_closed_form(1.0, 1.0, 1e-3) == pytest.approx(0.5, abs=1e-12)
    assert concurrence(thermal_state_numeric(1.0, 1e-3, B=1.0)).value == pytest.approx(0.5, abs=1e-10)


def test_phase_transition_step():
    assert concurrence_isotropic_closed_form(1.0, 0.9, 1e-3) >= 0.99
    assert concurrence_isotropic_closed_form(1.0, 1.1, 1e-3) <= 0.01


def test_bad_inputs():
    with pytest.raises(BadTemperature):
        thermal_state_isotropic(1.0, 0.0, 0.0)
    with pytest.raises(BadTemperature):
        concurrence_isotropic_closed_form(1.0, 0.0, -1.0)
    with pytest.raises(BadGamma):
        thermal_state_anisotropic(1.0, -0.1, 1.0)
    with pytest.raises(BadTemperature):
        gibbs_state(np.eye(2), float("nan"))
