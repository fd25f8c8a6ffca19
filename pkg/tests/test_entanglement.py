import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xychain.entanglement import (
    concurrence,
    concurrence_one_excitation,
    concurrence_pair_from_state,
    validate_density_matrix,
)
from xychain.errors import BadSites, NegativeSpectrum, NotAState
from xychain.evolution import amplitudes_analytic
from xychain.linalg import partial_trace
from xychain.wstate import WSpec, make_w_state
from xychain.xy_chain import ChainSpec, embed_one_excitation

from tests.oracles import random_density_matrix, random_state, random_unitary

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def pure_two_qubit_concurrence(psi):
    """2|ad - bc| for a|00> + b|01> + c|10> + d|11>."""
    a, b, c, d = psi
    return 2 * abs(a * d - b * c)


def test_bell_state():
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    c = concurrence(np.outer(psi, psi.conj()))
    assert c.value == pytest.approx(1.0, abs=1e-14)
    assert c.lambdas[0] == pytest.approx(1.0, abs=1e-14)


def test_product_state():
    rho = np.zeros((4, 4))
    rho[0, 0] = 1
    assert concurrence(rho).value == 0.0


def test_maximally_mixed():
    c = concurrence(np.eye(4) / 4)
    assert c.value == 0.0
    assert np.allclose(c.lambdas, 0.25)


def test_thermal_state_value():
    # (sinh 1 - 1)/(cosh 1 + 1), evaluated independently of the package
    z = 2 * (np.cosh(1) + 1)
    rho = np.zeros((4, 4))
    rho[0, 0] = rho[3, 3] = 1 / z
    rho[1, 1] = rho[2, 2] = np.cosh(1) / z
    rho[1, 2] = rho[2, 1] = -np.sinh(1) / z
    expected = (np.sinh(1) - 1) / (np.cosh(1) + 1)
    assert expected == pytest.approx(0.0688932907770460, abs=1e-15)
    assert concurrence(rho).value == pytest.approx(expected, abs=1e-10)
    assert concurrence(rho, method="direct").value == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("seed", range(50))
def test_pure_states_match_closed_form(seed):
    psi = random_state(np.random.default_rng(seed), 4)
    rho = np.outer(psi, psi.conj())
    assert concurrence(rho).value == pytest.approx(pure_two_qubit_concurrence(psi), abs=1e-12)


def test_werner_states():
    # p |Psi-><Psi-| + (1-p) I/4 has C = max(0, (3p - 1)/2)
    psi = np.array([0, 1, -1, 0]) / np.sqrt(2)
    bell = np.outer(psi, psi)
    for p in np.linspace(0, 1, 21):
        rho = p * bell + (1 - p) * np.eye(4) / 4
        assert concurrence(rho).value == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-12)


def test_routes_agree_on_mixed_states():
    rng = np.random.default_rng(5)
    for _ in range(200):
        rho = random_density_matrix(rng, 4, rank=int(rng.integers(1, 5)))
        h = concurrence(rho)
        d = concurrence(rho, method="direct")
        assert h.value == pytest.approx(d.value, abs=1e-7)


def test_range_over_random_mixed_states():
    rng = np.random.default_rng(2024)
    values = []
    for _ in range(10_000):
        rho = random_density_matrix(rng, 4, rank=int(rng.integers(1, 5)))
        values.append(concurrence(rho).value)
    values = np.array(values)
    assert values.min() >= 0.0
    assert values.max() <= 1.0
    assert values.max() > 0.5


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng, 4, rank=int(rng.integers(1, 5)))
    u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
    rotated = u @ rho @ u.conj().T
    rotated = 0.5 * (rotated + rotated.conj().T)
    assert concurrence(rotated).value == pytest.approx(concurrence(rho).value, abs=1e-9)


def test_rejects_invalid_matrices():
    with pytest.raises(NotAState):
        concurrence(np.eye(4))
    with pytest.raises(NotAState):
        concurrence(np.diag([1.5, -0.5, 0, 0]))
    bad = np.eye(4) / 4
    bad[0, 1] = 0.1
    with pytest.raises(NotAState):
        concurrence(bad)
    with pytest.raises(NotAState):
        concurrence(np.eye(2) / 2)
    with pytest.raises(ValueError):
        concurrence(np.eye(4) / 4, method="bogus")


def test_direct_route_flags_negative_spectrum():
    from xychain import entanglement

    # validation bypassed so the spectral check itself is exercised
    # diagonal rho gives spin-flipped eigenvalues rho_00 rho_33 and rho_11 rho_22
    rho = np.diag([0.5, -0.1, 0.6, 0.0]).astype(complex)
    with pytest.raises(NegativeSpectrum):
        entanglement._lambdas_direct(rho)


def test_validate_density_matrix_accepts_state():
    rho = random_density_matrix(np.random.default_rng(0), 4)
    assert validate_density_matrix(rho).shape == (4, 4)


@pytest.mark.parametrize("n", range(2, 11))
def test_w_state_pairwise(n):
    psi = make_w_state(WSpec(n))
    for i, j in [(1, 2), (1, n), (n - 1, n)]:
        if i != j:
            assert concurrence_pair_from_state(psi, i, j).value == pytest.approx(2 / n, abs=1e-12)


def test_w_state_random_phases_n4():
    rng = np.random.default_rng(9)
    psi = make_w_state(WSpec(4, tuple(rng.uniform(0, 2 * np.pi, 4))))
    for i in range(1, 5):
        for j in range(i + 1, 5):
            assert concurrence_pair_from_state(psi, i, j).value == pytest.approx(0.5, abs=1e-12)


def test_product_state_pair():
    psi = np.zeros(8)
    psi[4] = 1
    assert concurrence_pair_from_state(psi, 1, 2).value == 0.0


def test_pair_from_state_equals_partial_trace_route():
    rng = np.random.default_rng(4)
    psi = random_state(rng, 16)
    rho = np.outer(psi, psi.conj())
    for pair in [(1, 2), (2, 4), (4, 1)]:
        expected = concurrence(partial_trace(rho, 4, pair)).value
        assert concurrence_pair_from_state(psi, *pair).value == pytest.approx(expected, abs=1e-12)


def test_shortcut_two_sites_at_pi_over_4():
    b = amplitudes_analytic(ChainSpec(2), np.pi / 4)
    assert concurrence_one_excitation(b, 1, 2) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_shortcut_disentangled_at_period(m):
    b = amplitudes_analytic(ChainSpec(3), 4 * m * np.pi / 3)
    for i, j in [(1, 2), (1, 3), (2, 3)]:
        assert concurrence_one_excitation(b, i, j) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_shortcut_matches_full_pipeline(n):
    rng = np.random.default_rng(n)
    worst = 0.0
    for _ in range(200):
        b = random_state(rng, n)
        psi = embed_one_excitation(b, n)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                diff = concurrence_one_excitation(b, i, j) - concurrence_pair_from_state(psi, i, j).value
                worst = max(worst, abs(diff))
    assert worst <= 1e-10


def test_shortcut_bad_sites():
    with pytest.raises(BadSites):
        concurrence_one_excitation(np.ones(3) / np.sqrt(3), 1, 1)
    with pytest.raises(BadSites):
        concurrence_one_excitation(np.ones(3) / np.sqrt(3), 1, 4)
