from src.force.components import (
    CASIMIR,
    COMPONENT_NAMES,
    FINITE_TIME,
    FRICTION,
    LONG_TIME,
    NORMALIZATIONS,
    RAW,
    REGIMES,
    SI_NEWTON,
    ForceComponents,
    check_regime,
    mix_force,
    normalization_divisor,
    normalize,
    zero_force,
)
from src.force.free import (
    FREE_PREFACTOR,
    force_free,
    force_free_reduced_ground,
    free_channel,
    reduced_friction_integral,
)
from src.force.kernels import (
    AlphaSplit,
    PlateIntegrandPieces,
    StateWeight,
    alpha_split,
    beta_factor,
    boosted_k_squared,
    detector_frequency,
    extrapolate_regulator,
    gaussian_smearing_ft,
    plate_pieces,
    shell_momentum,
    smearing_weight,
    switching_terms,
)
from src.force.plate import ANGULAR_MODES, PLATE_PREFACTOR, force_plate, plate_channel, plate_shell_term
from src.force.upsilon import upsilon_general, upsilon_inertial

__all__ = [
    "ANGULAR_MODES",
    "CASIMIR",
    "COMPONENT_NAMES",
    "FINITE_TIME",
    "FREE_PREFACTOR",
    "FRICTION",
    "LONG_TIME",
    "NORMALIZATIONS",
    "PLATE_PREFACTOR",
    "RAW",
    "REGIMES",
    "SI_NEWTON",
    "AlphaSplit",
    "ForceComponents",
    "PlateIntegrandPieces",
    "StateWeight",
    "alpha_split",
    "beta_factor",
    "boosted_k_squared",
    "check_regime",
    "detector_frequency",
    "extrapolate_regulator",
    "force_free",
    "force_free_reduced_ground",
    "force_plate",
    "free_channel",
    "gaussian_smearing_ft",
    "mix_force",
    "normalization_divisor",
    "normalize",
    "plate_channel",
    "plate_pieces",
    "plate_shell_term",
    "reduced_friction_integral",
    "shell_momentum",
    "smearing_weight",
    "switching_terms",
    "upsilon_general",
    "upsilon_inertial",
    "zero_force",
]
