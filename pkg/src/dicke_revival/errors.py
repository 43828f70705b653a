"""Exception types raised across the package."""


class DickeRevivalError(Exception):
    """Base class for all package errors."""


class DomainError(DickeRevivalError, ValueError):
    """An argument lies outside the physical domain of a formula."""


class ConfigurationError(DickeRevivalError, ValueError):
    """Inconsistent run settings, e.g. a time step too coarse for the couplings."""


class IntegrationError(DickeRevivalError, RuntimeError):
    """The numerical integration drifted beyond its invariant tolerance."""


class StructuralError(DickeRevivalError, RuntimeError):
    """A density matrix lost the block (X) structure it should keep."""


class NumericalDegeneracyError(DickeRevivalError, ArithmeticError):
    """Eigenvalues that should be real and nonnegative are not, beyond noise."""


class ResolutionError(DickeRevivalError, RuntimeError):
    """A sampled crossing could not be bracketed for refinement."""
