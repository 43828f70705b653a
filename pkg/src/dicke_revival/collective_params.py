"""Distance-dependent collective rates of two identical dipoles.

The dipoles are parallel and polarized perpendicular to the interatomic
axis. Rates are returned in units of the single-atom decay rate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Below this kr the closed form of the collective damping loses ~(kr)^-3 * eps
# to cancellation; the 3-term Taylor series is exact to < 1e-9 here.
SERIES_THRESHOLD = 0.05


def _check_kr(kr: float) -> float:
    kr = float(kr)
    if not math.isfinite(kr) or kr <= 0.0:
        raise DomainError(f"kr must be finite and positive, got {kr!r}")
    return kr


@dataclass(frozen=True)
class Separation:
    """Interatomic distance expressed as r12/lambda and as k*r12."""

    r_over_lambda: float

    def __post_init__(self):
        r = float(self.r_over_lambda)
        if not math.isfinite(r) or r <= 0.0:
            raise DomainError(f"r_over_lambda must be finite and positive, got {r!r}")
        object.__setattr__(self, "r_over_lambda", r)

    @property
    def kr(self) -> float:
        return 2.0 * math.pi * self.r_over_lambda


@dataclass(frozen=True)
class CollectiveCoupling:
    """Rate triple (gamma, gamma12, omega12).

    ``separation`` is None for independent atoms (gamma12 = omega12 = 0).
    """

    gamma: float = 1.0
    gamma12: float = 0.0
    omega12: float = 0.0
    separation: Separation | None = None

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise DomainError(f"gamma must be positive, got {self.gamma!r}")
        if not abs(self.gamma12) < self.gamma:
            raise DomainError(
                f"|gamma12| must be below gamma, got gamma12={self.gamma12!r}, gamma={self.gamma!r}"
            )

    @classmethod
    def independent(cls, gamma: float = 1.0) -> "CollectiveCoupling":
        return cls(gamma=gamma)


def collective_damping(kr: float) -> float:
    """Collective damping gamma12/gamma as a function of k*r12.

    Parameters
    ----------
    kr : float
        Dimensionless separation k*r12, strictly positive.

    Returns
    -------
    float
        ``1.5*(sin x/x + cos x/x**2 - sin x/x**3)``; a Taylor series is
        used for ``x < SERIES_THRESHOLD``. Tends to 1 as ``x -> 0``.
    """
    x = _check_kr(kr)
    if x < SERIES_THRESHOLD:
        x2 = x * x
        return 1.0 - x2 / 5.0 + 3.0 * x2 * x2 / 280.0
    s, c = math.sin(x), math.cos(x)
    return 1.5 * (s / x + c / x**2 - s / x**3)


def dipole_dipole_shift(kr: float) -> float:
    """Dipole-dipole shift omega12/gamma; grows like 0.75/kr**3 at small kr."""
    x = _check_kr(kr)
    s, c = math.sin(x), math.cos(x)
    return 0.75 * (-c / x + s / x**2 + c / x**3)


def coupling_from_separation(r_over_lambda: float, gamma: float = 1.0) -> CollectiveCoupling:
    """Bundle both collective rates for atoms a distance ``r_over_lambda`` wavelengths apart."""
    if not gamma > 0.0:
        raise DomainError(f"gamma must be positive, got {gamma!r}")
    sep = Separation(r_over_lambda)
    return CollectiveCoupling(
        gamma=float(gamma),
        gamma12=gamma * collective_damping(sep.kr),
        omega12=gamma * dipole_dipole_shift(sep.kr),
        separation=sep,
    )
