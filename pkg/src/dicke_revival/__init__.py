"""Entanglement dark periods and revivals of two collectively damped qubits."""
from .collective_params import (
    CollectiveCoupling,
    Separation,
    collective_damping,
    coupling_from_separation,
    dipole_dipole_shift,
)
from .concurrence import (
    ConcurrenceBreakdown,
    spin_flip,
    wootters_concurrence,
    x_state_concurrence,
    x_state_weights,
)
from .dynamics import (
    InitialState,
    Trajectory,
    XState,
    analytic_elements,
    analytic_trajectory,
    collective_to_product,
    extract_xstate,
    initial_state_matrix,
    integrate,
    liouvillian_apply,
    product_to_collective,
)
from .errors import (
    ConfigurationError,
    DomainError,
    IntegrationError,
    NumericalDegeneracyError,
    ResolutionError,
    StructuralError,
)
from .events import (
    EntanglementEvents,
    approx_death_revival,
    death_time_independent,
    death_time_scan,
    find_zero_crossings,
    second_revival_estimate,
)

__version__ = "0.1.0"
