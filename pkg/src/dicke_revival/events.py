"""Entanglement sudden death, dark periods and revivals.

Closed-form and approximate event times, plus a detector that locates
where the concurrence enters and leaves its flat zero stretches on a
sampled trajectory and refines each crossing on the closed form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .collective_params import CollectiveCoupling, coupling_from_separation
from .concurrence import x_state_weights
from .dynamics import Trajectory, analytic_elements, analytic_trajectory
from .errors import DomainError, ResolutionError

DEATH = "death"
REVIVAL = "revival"

DEFAULT_THRESHOLD = 1e-12
DEFAULT_T_MAX = 20.0


@dataclass(frozen=True)
class RootBracket:
    lo: float
    hi: float
    tolerance: float = 1e-9

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")

    def solve(self, f) -> float:
        return bisect(f, self.lo, self.hi, xtol=self.tolerance, maxiter=200)


@dataclass
class EntanglementEvents:
    """Ordered death/revival crossings of a concurrence trajectory.

    ``dark_intervals`` covers every stretch of zero concurrence; an
    interval still open at the end of the trajectory closes at its last time.
    """

    crossings: list = field(default_factory=list)
    dark_intervals: list = field(default_factory=list)
    t_end: float | None = None

    @property
    def deaths(self):
        return [t for t, d in self.crossings if d == DEATH]

    @property
    def revivals(self):
        return [t for t, d in self.crossings if d == REVIVAL]

    @property
    def death_time(self):
        d = self.deaths
        return d[0] if d else None

    @property
    def first_revival(self):
        r = self.revivals
        return r[0] if r else None

    @property
    def second_revival(self):
        r = self.revivals
        return r[1] if len(r) > 1 else None

    def as_dict(self):
        return {
            "death_time": self.death_time,
            "first_revival": self.first_revival,
            "second_revival": self.second_revival,
            "crossings": [[t, d] for t, d in self.crossings],
            "dark_intervals": [list(iv) for iv in self.dark_intervals],
        }


def death_time_independent(p: float, gamma: float = 1.0):
    """Sudden-death time for independent atoms, or None when ``p <= 1/2``."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p must lie in [0, 1], got {p!r}")
    if p <= 0.5:
        return None
    return math.log((p + math.sqrt(p * (1.0 - p))) / (2.0 * p - 1.0)) / gamma


def approx_death_revival(p: float, gamma: float = 1.0):
    """Death and revival times from ``x exp(-x) = sqrt((1-p)/p)``, ``x = gamma t``.

    Valid for strong collective damping (``gamma12`` close to ``gamma``).
    Two distinct roots exist only for ``p > e^2/(1+e^2)``; otherwise None.
    """
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p!r}")
    level = math.sqrt((1.0 - p) / p)
    # the degenerate double root at x = 1 counts as no solution
    if not level < math.exp(-1.0) * (1.0 - 1e-12):
        return None

    def f(x):
        return x * math.exp(-x) - level

    t_d = RootBracket(0.0, 1.0, 1e-12).solve(f)
    t_r = RootBracket(1.0, 40.0, 1e-12).solve(f)
    return t_d / gamma, t_r / gamma


def second_revival_estimate(p: float, coupling: CollectiveCoupling) -> float:
    """Approximate onset of the long-lived, antisymmetric-state entanglement."""
    if not 0.0 < p <= 1.0:
        raise DomainError(f"p must lie in (0, 1], got {p!r}")
    g, g12 = coupling.gamma, coupling.gamma12
    if not 0.0 < g12 < g:
        raise DomainError(f"needs 0 < gamma12 < gamma, got gamma12={g12!r}")
    return math.log(4.0 * g / (math.sqrt(p) * (g - g12))) / g12


def _max_weight(p, coupling):
    def g(t):
        w = x_state_weights(analytic_elements(p, coupling.gamma, coupling.gamma12, t))
        return max(w.c1, w.c2)

    return g


def find_zero_crossings(trajectory: Trajectory, threshold: float = DEFAULT_THRESHOLD,
                        tolerance: float = 1e-9) -> EntanglementEvents:
    """Detect deaths and revivals of the concurrence along ``trajectory``.

    A death is a step from ``C > threshold`` to ``C <= threshold`` that
    stays there for at least one more sample; isolated zero samples are
    ignored. Each crossing is refined to ``tolerance`` by bisection on
    ``max(C1, C2) - threshold`` of the closed form, so the trajectory must
    carry ``p`` and ``coupling``.

    Raises
    ------
    ResolutionError
        When the closed form does not change sign over a sampled step, or
        the trajectory lacks the parameters needed for refinement.
    """
    if threshold < 0.0:
        raise ValueError("threshold must be nonnegative")
    times = trajectory.times
    alive = np.asarray(trajectory.c) > threshold
    # a one-sample dip inside an entangled stretch is not a dark period
    lone = ~alive[1:-1] & alive[:-2] & alive[2:]
    alive[1:-1] |= lone
    if alive.size > 1 and alive[-2] and not alive[-1]:
        alive[-1] = True

    steps = np.flatnonzero(alive[1:] != alive[:-1])
    if steps.size and (trajectory.p is None or trajectory.coupling is None):
        raise ResolutionError("trajectory carries no closed-form parameters to refine on")
    events = EntanglementEvents(t_end=float(times[-1]))
    if steps.size:
        g = _max_weight(trajectory.p, trajectory.coupling)

    for i in steps:
        lo, hi = float(times[i]), float(times[i + 1])
        direction = DEATH if alive[i] else REVIVAL

        def f(t):
            return g(t) - threshold

        f_lo, f_hi = f(lo), f(hi)
        if (f_lo > 0.0) == (f_hi > 0.0):
            raise ResolutionError(
                f"no sign change of the closed form on [{lo:g}, {hi:g}]; grid too coarse"
            )
        events.crossings.append((RootBracket(lo, hi, tolerance).solve(f), direction))

    start = None if alive[0] else float(times[0])
    for t, d in events.crossings:
        if d == DEATH:
            start = t
        else:
            events.dark_intervals.append((start, t))
            start = None
    if start is not None:
        events.dark_intervals.append((start, float(times[-1])))
    return events


def death_time_scan(r_over_lambda, p_grid, t_max: float = DEFAULT_T_MAX, dt: float = 1e-3,
                    gamma: float = 1.0):
    """First sudden-death time for each ``p`` at a given separation.

    ``r_over_lambda=None`` means independent atoms. Returns a list of
    ``(p, death_time)`` with ``None`` where no death occurs before ``t_max``
    (including states that start unentangled).
    """
    if r_over_lambda is None:
        coupling = CollectiveCoupling.independent(gamma)
    else:
        coupling = coupling_from_separation(r_over_lambda, gamma)
    n = math.ceil(t_max / dt - 1e-9)
    times = np.linspace(0.0, t_max, n + 1)
    out = []
    for p in p_grid:
        traj = analytic_trajectory(float(p), coupling, times)
        if not traj.c[0] > DEFAULT_THRESHOLD:
            out.append((float(p), None))
            continue
        out.append((float(p), find_zero_crossings(traj).death_time))
    return out
