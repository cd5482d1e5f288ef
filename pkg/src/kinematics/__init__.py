from src.kinematics.lorentz import (
    METRIC,
    FourVector,
    General,
    GeneratorSet,
    Inertial,
    LorentzMatrix,
    TrajectorySpec,
    WorldlineSolution,
    boost_matrix,
    comoving_to_lab,
    generators,
    instantaneous_lorentz,
    integrate_worldline,
    lab_covector,
    lorentz_at,
    tilde_momentum,
    worldline,
)

__all__ = [
    "METRIC",
    "FourVector",
    "General",
    "GeneratorSet",
    "Inertial",
    "LorentzMatrix",
    "TrajectorySpec",
    "WorldlineSolution",
    "boost_matrix",
    "comoving_to_lab",
    "generators",
    "instantaneous_lorentz",
    "integrate_worldline",
    "lab_covector",
    "lorentz_at",
    "tilde_momentum",
    "worldline",
]
