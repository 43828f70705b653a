"""Two-atom density-matrix evolution under collective spontaneous emission.

Conventions
-----------
* Product basis ordering: ``|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>``.
* Collective basis ordering: ``|e>, |g>, |s>, |a>`` with
  ``|s> = (|g1 e2> + |e1 g2>)/sqrt2`` and ``|a> = (|g1 e2> - |e1 g2>)/sqrt2``.
* Frame rotating at the atomic frequency, so ``omega_0`` never appears.
* Times are measured in units of ``1/gamma`` when ``gamma = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .collective_params import CollectiveCoupling
from .concurrence import ConcurrenceBreakdown, x_state_weights
from .errors import ConfigurationError, DomainError, IntegrationError, StructuralError

_SQRT_HALF = math.sqrt(0.5)

# columns are |e>, |g>, |s>, |a> written in the product basis
COLLECTIVE_BASIS = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, _SQRT_HALF, -_SQRT_HALF],
        [0.0, 0.0, _SQRT_HALF, _SQRT_HALF],
        [0.0, 1.0, 0.0, 0.0],
    ],
    dtype=complex,
)

_LOWER = np.array([[0.0, 0.0], [1.0, 0.0]])  # |g><e| in the (e, g) basis
_EYE2 = np.eye(2)
S_MINUS = (np.kron(_LOWER, _EYE2).astype(complex), np.kron(_EYE2, _LOWER).astype(complex))
S_PLUS = tuple(s.conj().T for s in S_MINUS)

# (row, col) positions in the collective matrix that are not part of the X block
_OFF_X = [(i, j) for i in range(4) for j in range(4) if i != j and {i, j} != {0, 1}]

MAX_TRACE_DRIFT = 1e-6


@dataclass(frozen=True)
class InitialState:
    """Weight ``p`` of the doubly excited state in ``sqrt(p)|e> + sqrt(1-p)|g>``."""

    p: float

    def __post_init__(self):
        _check_probability(self.p)


@dataclass(frozen=True)
class XState:
    """The five independent entries of a collective-basis X state.

    Each field is a float, or an array when describing a whole trajectory.
    """

    rho_ee: float
    rho_gg: float
    rho_ss: float
    rho_aa: float
    rho_eg: complex

    def __getitem__(self, idx):
        return XState(
            np.asarray(self.rho_ee)[idx],
            np.asarray(self.rho_gg)[idx],
            np.asarray(self.rho_ss)[idx],
            np.asarray(self.rho_aa)[idx],
            np.asarray(self.rho_eg)[idx],
        )

    def collective_matrix(self):
        """Dense 4x4 matrix in the (e, g, s, a) basis; scalar fields only."""
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.rho_ee, self.rho_gg, self.rho_ss, self.rho_aa
        m[0, 1] = self.rho_eg
        m[1, 0] = np.conj(self.rho_eg)
        return m

    def product_matrix(self):
        return collective_to_product(self.collective_matrix())


def _check_probability(p):
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p!r}")


def initial_state_matrix(p: float) -> XState:
    """X-state entries of ``sqrt(p)|e> + sqrt(1-p)|g>``."""
    _check_probability(p)
    return XState(p, 1.0 - p, 0.0, 0.0, math.sqrt(p * (1.0 - p)))


def analytic_elements(p: float, gamma: float, gamma12: float, t) -> XState:
    """Closed-form X-state entries at time(s) ``t``.

    The single-excitation populations are written with ``expm1`` so the
    expressions stay accurate as ``gamma12 -> gamma``, at small ``t`` and at
    large ``t``.
    Independent of the dipole-dipole shift.
    """
    _check_probability(p)
    if not gamma > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma!r}")
    if not abs(gamma12) < gamma:
        raise DomainError(f"|gamma12| must be below gamma, got {gamma12!r}")
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0):
        raise DomainError("times must be nonnegative")
    slow, fast = gamma - gamma12, gamma + gamma12
    ee = p * np.exp(-2.0 * gamma * t)
    # exp(-2 gamma t) * expm1(x t) rewritten so large t cannot overflow
    ss = p * (fast / slow) * np.exp(-fast * t) * -np.expm1(-slow * t)
    aa = p * (slow / fast) * np.exp(-slow * t) * -np.expm1(-fast * t)
    gg = 1.0 - ee - ss - aa
    eg = math.sqrt(p * (1.0 - p)) * np.exp(-gamma * t)
    if t.ndim == 0:
        return XState(float(ee), float(gg), float(ss), float(aa), float(eg))
    return XState(ee, gg, ss, aa, eg)


def product_to_collective(rho):
    rho = np.asarray(rho, dtype=complex)
    return COLLECTIVE_BASIS.conj().T @ rho @ COLLECTIVE_BASIS


def collective_to_product(m):
    m = np.asarray(m, dtype=complex)
    return COLLECTIVE_BASIS @ m @ COLLECTIVE_BASIS.conj().T


def off_x_leakage(m) -> float:
    """Largest one-photon coherence (|e-s|, |e-a|, |s-g|, |a-g|, |s-a|) of a collective matrix."""
    m = np.asarray(m)
    return float(max(abs(m[..., i, j]).max() for i, j in _OFF_X))


def extract_xstate(m, tol: float = 1e-6) -> XState:
    """Read the X entries of a collective-basis matrix.

    Raises StructuralError when any one-photon coherence exceeds ``tol``.
    """
    leak = off_x_leakage(m)
    if leak >= tol:
        raise StructuralError(f"one-photon coherence {leak:.3g} exceeds {tol:g}")
    return XState(m[0, 0].real, m[1, 1].real, m[2, 2].real, m[3, 3].real, complex(m[0, 1]))


def liouvillian_apply(rho, coupling: CollectiveCoupling):
    """Time derivative of ``rho`` (product basis) under the collective master equation.

    Includes the dipole-dipole exchange ``Omega12 (S1+ S2- + S2+ S1-)`` and the
    dissipator with ``gamma_11 = gamma_22 = gamma``, ``gamma_12 = gamma_21``.
    """
    rho = np.asarray(rho, dtype=complex)
    gam = ((coupling.gamma, coupling.gamma12), (coupling.gamma12, coupling.gamma))
    h = coupling.omega12 * (S_PLUS[0] @ S_MINUS[1] + S_PLUS[1] @ S_MINUS[0])
    drho = -1j * (h @ rho - rho @ h)
    for i in range(2):
        for j in range(2):
            g = gam[i][j]
            if g == 0.0:
                continue
            pm = S_PLUS[i] @ S_MINUS[j]
            drho += g * (S_MINUS[j] @ rho @ S_PLUS[i] - 0.5 * (pm @ rho + rho @ pm))
    return drho


def max_step(coupling: CollectiveCoupling) -> float:
    """Largest admissible RK4 step: resolves both decay and exchange scales."""
    return 0.1 / max(coupling.gamma, abs(coupling.omega12))


def default_step(coupling: CollectiveCoupling) -> float:
    return min(1e-3 / coupling.gamma, max_step(coupling))


@dataclass
class Trajectory:
    """Sampled evolution of an X state with its concurrence weights.

    ``p`` and ``coupling`` record the parameters needed to re-evaluate the
    closed form; ``rho`` holds product-basis matrices for integrated runs.
    """

    times: np.ndarray
    states: XState
    weights: ConcurrenceBreakdown
    p: float | None = None
    coupling: CollectiveCoupling | None = None
    rho: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        if self.times.ndim != 1 or self.times.size == 0:
            raise ValueError("times must be a non-empty 1-d array")
        if np.any(np.diff(self.times) <= 0.0):
            raise ValueError("times must be strictly increasing")
        if np.shape(self.states.rho_ee) != self.times.shape:
            raise ValueError("one state per time is required")

    def __len__(self):
        return self.times.size

    @property
    def c(self):
        return self.weights.c

    @property
    def c1(self):
        return self.weights.c1

    @property
    def c2(self):
        return self.weights.c2


def analytic_trajectory(p: float, coupling: CollectiveCoupling, times) -> Trajectory:
    """Closed-form trajectory on the given time grid."""
    times = np.asarray(times, dtype=float)
    x = analytic_elements(p, coupling.gamma, coupling.gamma12, times)
    return Trajectory(times, x, x_state_weights(x), p=p, coupling=coupling)


def _rk4_step(rho, coupling, h):
    k1 = liouvillian_apply(rho, coupling)
    k2 = liouvillian_apply(rho + 0.5 * h * k1, coupling)
    k3 = liouvillian_apply(rho + 0.5 * h * k2, coupling)
    k4 = liouvillian_apply(rho + h * k3, coupling)
    return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _initial_p(x0: XState):
    """``p`` if the state is of the form sqrt(p)|e> + sqrt(1-p)|g>, else None."""
    p = float(x0.rho_ee)
    if (
        abs(x0.rho_ss) < 1e-12
        and abs(x0.rho_aa) < 1e-12
        and abs(x0.rho_eg - math.sqrt(max(p * (1.0 - p), 0.0))) < 1e-12
    ):
        return p
    return None


def integrate(rho0, coupling: CollectiveCoupling, t_end: float, dt: float | None = None,
              save_every: int = 1) -> Trajectory:
    """Integrate the master equation with fixed-step classical RK4.

    Parameters
    ----------
    rho0 : array_like, shape (4, 4)
        Initial density matrix in the product basis. It must stay an X state.
    coupling : CollectiveCoupling
    t_end : float
        Final time; the step is shrunk slightly so it divides ``t_end``.
    dt : float, optional
        Step size, at most ``0.1/max(gamma, |omega12|)``. Defaults to
        ``min(1e-3/gamma, 0.1/|omega12|)``.
    save_every : int
        Store every n-th step.

    Raises
    ------
    ConfigurationError
        Step too large, or non-positive ``dt``/``t_end``.
    IntegrationError
        Trace drifts by more than 1e-6.
    StructuralError
        A stored state develops one-photon coherences.
    """
    if not t_end > 0.0:
        raise ConfigurationError(f"t_end must be positive, got {t_end!r}")
    if dt is None:
        dt = default_step(coupling)
    if not dt > 0.0:
        raise ConfigurationError(f"dt must be positive, got {dt!r}")
    if dt > max_step(coupling) * (1.0 + 1e-12):
        raise ConfigurationError(
            f"dt={dt:g} exceeds the stable step {max_step(coupling):g} for these couplings"
        )
    if save_every < 1:
        raise ConfigurationError("save_every must be >= 1")
    n_steps = math.ceil(t_end / dt - 1e-9)
    n_steps = save_every * math.ceil(n_steps / save_every)
    h = t_end / n_steps

    rho = np.array(rho0, dtype=complex)
    saved = [rho.copy()]
    for k in range(1, n_steps + 1):
        rho = _rk4_step(rho, coupling, h)
        if k % save_every == 0:
            drift = abs(np.trace(rho) - 1.0)
            if drift > MAX_TRACE_DRIFT:
                raise IntegrationError(f"trace drifted by {drift:.3g} at t={k * h:g}")
            saved.append(rho.copy())
    rhos = np.array(saved)
    times = h * save_every * np.arange(len(rhos))

    xs = [extract_xstate(product_to_collective(r)) for r in rhos]
    states = XState(
        np.array([x.rho_ee for x in xs]),
        np.array([x.rho_gg for x in xs]),
        np.array([x.rho_ss for x in xs]),
        np.array([x.rho_aa for x in xs]),
        np.array([x.rho_eg for x in xs]),
    )
    return Trajectory(times, states, x_state_weights(states), p=_initial_p(xs[0]),
                      coupling=coupling, rho=rhos)
