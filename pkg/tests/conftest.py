import numpy as np
import pytest
from scipy.linalg import expm


def _superoperator(gamma, gamma12, omega12):
    """Column-stacked Lindblad generator built from scratch, independent of the package."""
    lower = np.array([[0, 0], [1, 0]], dtype=complex)
    sm = [np.kron(lower, np.eye(2)), np.kron(np.eye(2), lower)]
    sp = [m.conj().T for m in sm]
    eye = np.eye(4)
    h = omega12 * (sp[0] @ sm[1] + sp[1] @ sm[0])
    gam = np.array([[gamma, gamma12], [gamma12, gamma]])
    gen = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for i in range(2):
        for j in range(2):
            a = sp[i] @ sm[j]
            gen += gam[i, j] * (np.kron(sp[i].T, sm[j]) - 0.5 * np.kron(eye, a) - 0.5 * np.kron(a.T, eye))
    return gen


def exact_evolution(rho0, gamma, gamma12, omega12, t):
    gen = _superoperator(gamma, gamma12, omega12)
    vec = expm(gen * t) @ np.asarray(rho0, dtype=complex).reshape(-1, order="F")
    return vec.reshape(4, 4, order="F")


@pytest.fixture
def rng():
    return np.random.default_rng(20061019)


def random_density_matrix(rng, rank=None):
    rank = rank or 4
    a = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_xstate_params(rng, boundary=False):
    """Random valid X-state entries (ee, gg, ss, aa, eg)."""
    pops = rng.dirichlet(np.ones(4) * rng.choice([0.2, 1.0, 5.0]))
    if rng.random() < 0.2:
        pops[rng.integers(4)] = 0.0
        pops /= pops.sum()
    ee, gg, ss, aa = pops
    amp = np.sqrt(ee * gg) * (1.0 if boundary else rng.random())
    return ee, gg, ss, aa, amp * np.exp(2j * np.pi * rng.random())
