"""Exception hierarchy shared by every udwf module."""

from __future__ import annotations


class UDWFError(Exception):
    """Base class for all detector-force errors."""


class FasterThanLight(UDWFError, ValueError):
    """Raised when a velocity reaches or exceeds the speed of light."""


class InvalidSmearing(UDWFError, ValueError):
    """Raised when a smearing width is not strictly positive."""


class NotDensityMatrix(UDWFError, ValueError):
    """Raised when a detector state is not a positive unit-trace density matrix."""


class ZeroMomentum(UDWFError, ValueError):
    """Raised when a field mode with |k| = 0 is requested."""


class PointBeyondPlate(UDWFError, ValueError):
    """Raised when a correlator point lies on the far side of the plate."""


class PoleOutsideDomain(UDWFError, ValueError):
    """Raised when a principal-value pole is not inside the integration interval."""


class NonPositiveShell(UDWFError, ValueError):
    """Raised when a resonance shell sits at s <= 0 and cannot be reached."""


class NormalizationMismatch(UDWFError, ValueError):
    """Raised when force components with different normalizations are combined."""


class DomainError(UDWFError, ValueError):
    """Raised when a special function is evaluated outside its domain."""


class UnknownRegime(UDWFError, KeyError):
    """Raised when a regime key has no closed form in the catalogue."""


class UnknownFigure(UDWFError, KeyError):
    """Raised when a figure id is not known."""


class IntegrationFailure(UDWFError):
    """Raised when an ODE integration of a worldline fails."""


class NonFiniteIntegrand(UDWFError):
    """Raised when an integrand returns NaN or infinity."""


class ToleranceNotMet(UDWFError):
    """Raised when a quadrature result did not reach the requested tolerance."""
