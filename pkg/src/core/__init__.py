"""Shared types, validation and conventions."""

from src.core.errors import (
    DomainError,
    FasterThanLight,
    IntegrationFailure,
    InvalidSmearing,
    NonFiniteIntegrand,
    NonPositiveShell,
    NormalizationMismatch,
    NotDensityMatrix,
    PointBeyondPlate,
    PoleOutsideDomain,
    ToleranceNotMet,
    UDWFError,
    UnknownFigure,
    UnknownRegime,
    ZeroMomentum,
)
from src.core.params import (
    NATURAL_SCALES,
    SI_SCALES,
    Boundary,
    DetectorParams,
    DetectorState,
    DimensionlessGroups,
    FreeSpace,
    PhysicalScales,
    Plate,
    SwitchingWindow,
    force_unit,
    from_dimensionless,
    lorentz_factor,
    natural_inputs,
    natural_params,
    require_finite_size,
    to_dimensionless,
    validate_state,
)

__all__ = [
    "NATURAL_SCALES",
    "SI_SCALES",
    "Boundary",
    "DetectorParams",
    "DetectorState",
    "DimensionlessGroups",
    "DomainError",
    "FasterThanLight",
    "FreeSpace",
    "IntegrationFailure",
    "InvalidSmearing",
    "NonFiniteIntegrand",
    "NonPositiveShell",
    "NormalizationMismatch",
    "NotDensityMatrix",
    "PhysicalScales",
    "Plate",
    "PointBeyondPlate",
    "PoleOutsideDomain",
    "SwitchingWindow",
    "ToleranceNotMet",
    "UDWFError",
    "UnknownFigure",
    "UnknownRegime",
    "ZeroMomentum",
    "force_unit",
    "from_dimensionless",
    "lorentz_factor",
    "natural_inputs",
    "natural_params",
    "require_finite_size",
    "to_dimensionless",
    "validate_state",
]
