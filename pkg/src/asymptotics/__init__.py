"""Closed-form limits, special functions and angular integrals."""

from src.asymptotics.angular import (
    ANGULAR_KINDS,
    LIMIT_KINDS,
    angular_integral,
    angular_limit_C,
    azimuthal_integral,
    exact_angular_integral,
)
from src.asymptotics.catalogue import (
    COMPONENTS,
    CONTRIBUTIONS,
    DISTANCES,
    STATES,
    TIMES,
    VELOCITIES,
    RegimeKey,
    all_keys,
    asymptote,
    asymptote_terms,
    ground_casimir_bracket,
    ground_friction_bracket,
    keys_for,
    pointlike_bracket,
    pointlike_near_plate,
)
from src.asymptotics.meijer import MEIJER_KINDS, meijer_limits, meijer_principal_value, meijer_reduced
from src.asymptotics.special import SPECIAL_FUNCTIONS, special_eval

__all__ = [
    "ANGULAR_KINDS",
    "COMPONENTS",
    "CONTRIBUTIONS",
    "DISTANCES",
    "LIMIT_KINDS",
    "MEIJER_KINDS",
    "SPECIAL_FUNCTIONS",
    "STATES",
    "TIMES",
    "VELOCITIES",
    "RegimeKey",
    "all_keys",
    "angular_integral",
    "angular_limit_C",
    "asymptote",
    "azimuthal_integral",
    "asymptote_terms",
    "exact_angular_integral",
    "ground_casimir_bracket",
    "ground_friction_bracket",
    "keys_for",
    "meijer_limits",
    "meijer_principal_value",
    "meijer_reduced",
    "pointlike_bracket",
    "pointlike_near_plate",
    "special_eval",
]
