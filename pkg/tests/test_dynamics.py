import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import exact_evolution, random_density_matrix
from dicke_revival import (
    CollectiveCoupling,
    ConfigurationError,
    DomainError,
    StructuralError,
    analytic_elements,
    analytic_trajectory,
    collective_to_product,
    coupling_from_separation,
    extract_xstate,
    initial_state_matrix,
    integrate,
    liouvillian_apply,
    product_to_collective,
)
from dicke_revival.dynamics import COLLECTIVE_BASIS, default_step, off_x_leakage

G12 = coupling_from_separation(0.05).gamma12
OM12 = coupling_from_separation(0.05).omega12


def xstate_array(x):
    return np.array([x.rho_ee, x.rho_gg, x.rho_ss, x.rho_aa, x.rho_eg], dtype=complex)


def ket(*amps):
    v = np.array(amps, dtype=complex)
    return np.outer(v, v.conj())


# initial state

def test_initial_state_ground():
    x = initial_state_matrix(0.0)
    assert (x.rho_ee, x.rho_gg, x.rho_ss, x.rho_aa, x.rho_eg) == (0.0, 1.0, 0.0, 0.0, 0.0)


def test_initial_state_p09():
    x = initial_state_matrix(0.9)
    assert x.rho_ee == 0.9
    assert x.rho_gg == pytest.approx(0.1, abs=1e-15)
    assert x.rho_eg == pytest.approx(0.3, abs=1e-15)


def test_initial_state_p05_is_maximally_entangled():
    from dicke_revival import x_state_concurrence
    x = initial_state_matrix(0.5)
    assert x.rho_eg == pytest.approx(0.5)
    assert x_state_concurrence(x) == pytest.approx(1.0)


@pytest.mark.parametrize("p", [-0.1, 1.1])
def test_initial_state_domain(p):
    with pytest.raises(DomainError):
        initial_state_matrix(p)


# closed form

@pytest.mark.parametrize("p", [0.0, 0.3, 0.9, 1.0])
def test_analytic_at_zero_is_initial(p):
    np.testing.assert_allclose(
        xstate_array(analytic_elements(p, 1.0, G12, 0.0)),
        xstate_array(initial_state_matrix(p)), atol=1e-15)


def test_analytic_independent_atoms():
    x = analytic_elements(0.9, 1.0, 0.0, 1.0)
    expected = 0.9 * math.exp(-1) * (1 - math.exp(-1))
    assert expected == pytest.approx(0.20925, abs=1e-4)
    assert x.rho_ss == pytest.approx(expected, rel=1e-14)
    assert x.rho_aa == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("gamma12,omega12", [(0.0, 0.0), (G12, 0.0), (G12, OM12), (-0.3, 2.0)])
def test_analytic_matches_exponential_of_generator(gamma12, omega12):
    for p in (0.2, 0.9):
        rho0 = initial_state_matrix(p).product_matrix()
        for t in (0.3, 1.0, 4.0, 10.0):
            exact = extract_xstate(product_to_collective(exact_evolution(rho0, 1.0, gamma12, omega12, t)))
            np.testing.assert_allclose(
                xstate_array(analytic_elements(p, 1.0, gamma12, t)), xstate_array(exact), atol=1e-12)


def test_analytic_lambda20_values():
    x = analytic_elements(0.9, 1.0, G12, 1.0)
    assert x.rho_ss == pytest.approx(0.2437, abs=2e-4)
    assert x.rho_aa == pytest.approx(0.00757, abs=5e-5)


def test_analytic_degenerate_limit():
    p, t = 0.9, np.linspace(0, 10, 101)
    x = analytic_elements(p, 1.0, 1.0 - 1e-9, t)
    limit = 2 * t * p * np.exp(-2 * t)
    assert np.max(np.abs(x.rho_ss - limit)) < 1e-8


def test_analytic_vectorized_matches_scalar():
    t = np.array([0.0, 0.5, 2.0])
    xv = analytic_elements(0.7, 1.0, G12, t)
    for i, ti in enumerate(t):
        np.testing.assert_allclose(xstate_array(xv[i]), xstate_array(analytic_elements(0.7, 1.0, G12, ti)))


def test_analytic_domain():
    with pytest.raises(DomainError):
        analytic_elements(0.5, 1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        analytic_elements(0.5, 1.0, 0.5, -1.0)


@settings(max_examples=200)
@given(p=st.floats(0, 1), g12=st.floats(-0.999, 0.999), t=st.floats(0, 50))
def test_analytic_xstate_invariants(p, g12, t):
    x = analytic_elements(p, 1.0, g12, t)
    pops = [x.rho_ee, x.rho_gg, x.rho_ss, x.rho_aa]
    assert min(pops) >= -1e-12
    assert abs(sum(pops) - 1) < 1e-10
    assert abs(x.rho_eg) ** 2 <= x.rho_ee * x.rho_gg + 1e-10


# basis transforms

def test_transform_is_unitary():
    np.testing.assert_allclose(COLLECTIVE_BASIS.conj().T @ COLLECTIVE_BASIS, np.eye(4), atol=1e-15)


def test_single_excitation_in_collective_basis():
    m = product_to_collective(ket(0, 1, 0, 0))
    assert m[2, 2].real == pytest.approx(0.5)
    assert m[3, 3].real == pytest.approx(0.5)
    assert m[2, 3].real == pytest.approx(-0.5)
    assert m[3, 2].real == pytest.approx(-0.5)


def test_doubly_excited_in_collective_basis():
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_allclose(product_to_collective(ket(1, 0, 0, 0)), expected, atol=1e-15)


def test_round_trip(rng):
    for _ in range(100):
        rho = random_density_matrix(rng)
        np.testing.assert_allclose(collective_to_product(product_to_collective(rho)), rho, atol=1e-12)


def test_extract_xstate():
    m = product_to_collective(initial_state_matrix(0.9).product_matrix())
    x = extract_xstate(m)
    np.testing.assert_allclose(xstate_array(x), [0.9, 0.1, 0, 0, 0.3], atol=1e-15)


def test_extract_xstate_rejects_leakage():
    m = initial_state_matrix(0.9).collective_matrix()
    m[2, 1] = m[1, 2] = 0.01
    with pytest.raises(StructuralError):
        extract_xstate(m)


# generator

def test_ground_state_is_stationary():
    c = coupling_from_separation(0.05)
    np.testing.assert_allclose(liouvillian_apply(ket(0, 0, 0, 1), c), 0, atol=1e-15)


def test_doubly_excited_decays_at_twice_gamma():
    c = coupling_from_separation(0.05)
    d = liouvillian_apply(ket(1, 0, 0, 0), c)
    assert d[0, 0].real == pytest.approx(-2.0, abs=1e-14)


def test_symmetric_and_antisymmetric_decay_rates():
    c = coupling_from_separation(0.05)
    s2 = math.sqrt(0.5)
    ds = product_to_collective(liouvillian_apply(ket(0, s2, s2, 0), c))
    da = product_to_collective(liouvillian_apply(ket(0, -s2, s2, 0), c))
    assert ds[2, 2].real == pytest.approx(-(1 + c.gamma12), abs=1e-13)
    assert da[3, 3].real == pytest.approx(-(1 - c.gamma12), abs=1e-13)


def test_generator_matches_independent_superoperator(rng):
    from conftest import _superoperator
    c = coupling_from_separation(0.13)
    gen = _superoperator(c.gamma, c.gamma12, c.omega12)
    for _ in range(20):
        rho = random_density_matrix(rng)
        expected = (gen @ rho.reshape(-1, order="F")).reshape(4, 4, order="F")
        np.testing.assert_allclose(liouvillian_apply(rho, c), expected, atol=1e-12)


def test_generator_is_traceless(rng):
    c = coupling_from_separation(0.05)
    for _ in range(100):
        assert abs(np.trace(liouvillian_apply(random_density_matrix(rng), c))) < 1e-12


# integrator

@pytest.mark.parametrize("gamma12,omega12", [(0.0, 0.0), (G12, OM12)])
def test_integrator_matches_closed_form(gamma12, omega12):
    c = CollectiveCoupling(1.0, gamma12, omega12)
    traj = integrate(initial_state_matrix(0.9).product_matrix(), c, 3.0, 1e-3, save_every=10)
    ref = analytic_trajectory(0.9, c, traj.times)
    for name in ("rho_ee", "rho_gg", "rho_ss", "rho_aa", "rho_eg"):
        assert np.max(np.abs(getattr(traj.states, name) - getattr(ref.states, name))) < 1e-8
    assert traj.p == pytest.approx(0.9)


def test_integrator_ground_state_constant():
    c = coupling_from_separation(0.05)
    traj = integrate(ket(0, 0, 0, 1), c, 1.0)
    assert np.all(traj.states.rho_gg == 1.0)
    assert np.all(traj.c == 0.0)


def test_integrator_step_checks():
    c = coupling_from_separation(0.05)
    rho0 = ket(0, 0, 0, 1)
    with pytest.raises(ConfigurationError):
        integrate(rho0, c, 1.0, dt=0.01)
    with pytest.raises(ConfigurationError):
        integrate(rho0, c, 0.0)
    with pytest.raises(ConfigurationError):
        integrate(rho0, c, 1.0, dt=-1e-3)
    assert default_step(c) == pytest.approx(1e-3)
    assert default_step(CollectiveCoupling(1.0, 0.9, 500.0)) == pytest.approx(2e-4)


def test_integrator_rejects_one_photon_coherence():
    c = CollectiveCoupling.independent()
    s2 = math.sqrt(0.5)
    with pytest.raises(StructuralError):
        integrate(ket(s2, s2, 0, 0), c, 0.1)


def test_integrated_leakage_at_t1():
    c = coupling_from_separation(0.05)
    traj = integrate(initial_state_matrix(0.9).product_matrix(), c, 1.0)
    assert off_x_leakage(product_to_collective(traj.rho[-1])) < 1e-10
    extract_xstate(product_to_collective(traj.rho[-1]))


def test_analytic_finite_at_long_times():
    x = analytic_elements(0.9, 1.0, G12, np.array([500.0, 1e4]))
    for name in ("rho_ee", "rho_gg", "rho_ss", "rho_aa", "rho_eg"):
        assert np.all(np.isfinite(getattr(x, name)))
    assert np.all(x.rho_gg <= 1.0)
