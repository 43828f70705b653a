"""Wootters concurrence of two-qubit states.

Two routes are provided. :func:`wootters_concurrence` works for any 4x4
density matrix in the product basis (e1e2, e1g2, g1e2, g1g2).
:func:`x_state_weights` is the closed form for states that are block
diagonal in the collective basis, and is vectorized over numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalDegeneracyError

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)

CLAMP_TOL = 1e-9
DEGENERACY_TOL = 1e-6

NONE = "none"
ONE_PHOTON = "one_photon_class"
TWO_PHOTON = "two_photon_class"


def spin_flip(rho):
    """Return ``(sy x sy) rho* (sy x sy)`` for a product-basis matrix."""
    rho = np.asarray(rho, dtype=complex)
    return SIGMA_YY @ rho.conj() @ SIGMA_YY


def _check_r_spectrum(rho):
    # R = rho * rho_tilde is similar to a PSD matrix for any valid state.
    lam = np.linalg.eigvals(rho @ spin_flip(rho))
    scale = max(1.0, float(np.abs(lam).max()))
    if np.abs(lam.imag).max() > DEGENERACY_TOL * scale or lam.real.min() < -DEGENERACY_TOL * scale:
        raise NumericalDegeneracyError(
            f"eigenvalues of rho*rho_tilde are not real nonnegative: {lam}"
        )
    return lam


def sqrt_r_eigenvalues(rho):
    """Square roots of the eigenvalues of ``rho @ spin_flip(rho)``, descending.

    They are obtained as singular values of ``W.T @ (sy x sy) @ W`` where
    ``rho = W W^dagger``; this keeps absolute accuracy near zero, which
    taking square roots of computed eigenvalues does not.
    """
    rho = np.asarray(rho, dtype=complex)
    lam = _check_r_spectrum(rho)
    mu, vecs = np.linalg.eigh(0.5 * (rho + rho.conj().T))
    if mu.min() < -CLAMP_TOL:
        raise NumericalDegeneracyError(f"density matrix has negative eigenvalues: {mu}")
    mu = np.clip(mu, 0.0, None)
    w = vecs * np.sqrt(mu)
    tau = w.T @ SIGMA_YY @ w
    roots = np.linalg.svd(tau, compute_uv=False)
    if abs(roots @ roots - lam.real.sum()) > DEGENERACY_TOL * max(1.0, roots @ roots):
        raise NumericalDegeneracyError("spectrum of rho*rho_tilde is inconsistent")
    return roots


def wootters_concurrence(rho) -> float:
    """Concurrence of an arbitrary two-qubit density matrix.

    Parameters
    ----------
    rho : array_like, shape (4, 4)
        Density matrix in the product basis ordering e1e2, e1g2, g1e2, g1g2.

    Returns
    -------
    float
        ``max(0, s1 - s2 - s3 - s4)`` with ``s_i`` the descending square
        roots of the eigenvalues of ``rho @ spin_flip(rho)``.

    Raises
    ------
    NumericalDegeneracyError
        If those eigenvalues carry imaginary parts or negative values
        beyond 1e-6, which means ``rho`` is not a valid state.
    """
    s = sqrt_r_eigenvalues(rho)
    return float(max(0.0, s[0] - s[1] - s[2] - s[3]))


@dataclass(frozen=True)
class ConcurrenceBreakdown:
    """Concurrence together with its two X-state weights.

    ``c1`` measures entanglement carried by the e-g coherence, ``c2`` the
    imbalance between the symmetric and antisymmetric populations.
    Fields are floats or equally shaped arrays.
    """

    c: float
    c1: float
    c2: float

    @property
    def dominant(self):
        c1, c2 = np.asarray(self.c1), np.asarray(self.c2)
        tag = np.where(c1 >= c2, ONE_PHOTON, TWO_PHOTON)
        tag = np.where(np.maximum(c1, c2) > 0.0, tag, NONE)
        return str(tag) if tag.ndim == 0 else tag


def x_state_weights(x) -> ConcurrenceBreakdown:
    """Closed-form concurrence weights of a collective-basis X state."""
    ss = np.asarray(x.rho_ss, dtype=float)
    aa = np.asarray(x.rho_aa, dtype=float)
    ee_gg = np.clip(np.asarray(x.rho_ee) * np.asarray(x.rho_gg), 0.0, None)
    c1 = 2.0 * np.abs(x.rho_eg) - (ss + aa)
    c2 = np.abs(ss - aa) - 2.0 * np.sqrt(ee_gg)
    c = np.maximum(0.0, np.maximum(c1, c2))
    if c.ndim == 0:
        return ConcurrenceBreakdown(float(c), float(c1), float(c2))
    return ConcurrenceBreakdown(c, c1, c2)


def x_state_concurrence(x):
    return x_state_weights(x).c
