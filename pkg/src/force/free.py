"""Four-force on a smeared detector in free space."""

from __future__ import annotations

import math

import numpy as np

from src.core.events import emit
from src.core.params import (
    NATURAL_SCALES,
    DetectorParams,
    DetectorState,
    FreeSpace,
    PhysicalScales,
    SwitchingWindow,
    lorentz_factor,
    natural_inputs,
)
from src.force.components import (
    FINITE_TIME,
    LONG_TIME,
    ForceComponents,
    check_regime,
    mix_force,
    zero_force,
)
from src.force.kernels import (
    StateWeight,
    alpha_split,
    boosted_k_squared,
    shell_momentum,
    smearing_weight,
    switching_terms,
)
from src.numerics.quadrature import (
    QuadratureResult,
    ToleranceSpec,
    integrate_1d,
    integrate_sphere,
    onshell_surface_integral,
)

# Overall factor of the free-space integrand, anchored to the reduced friction integral.
FREE_PREFACTOR = -1.0 / (8.0 * math.pi**3)

S_MAX = 12.0
REGULATOR_SPAN = 40.0

DEFAULT_TOLERANCE = ToleranceSpec(rel_tol=1e-10)


def radial_cutoff(s_star: float = 0.0, regulator: float = 0.0) -> float:
    """Upper end of radial integrals in units of 1/sigma."""
    return max(S_MAX, s_star + REGULATOR_SPAN * regulator)


def regulator_breakpoints(s_star: float, regulator: float) -> list[float]:
    """Breakpoints resolving a Lorentzian of width Gamma centred on the shell."""
    if s_star <= 0:
        return []
    points = {s_star}
    if regulator > 0:
        for width in (1.0, 10.0):
            points.update({s_star - width * regulator, s_star + width * regulator})
    return sorted(p for p in points if p > 0)


def comoving_covector(theta: np.ndarray, phi: np.ndarray, v: float) -> tuple[np.ndarray, ...]:
    """k_mu / s for a mode with detector-frame direction (theta, phi) about the x axis."""
    gamma = lorentz_factor(v)
    cos = np.cos(theta)
    sin = np.sin(theta)
    return (
        -gamma * (1.0 + v * cos),
        gamma * (cos + v),
        sin * np.cos(phi),
        sin * np.sin(phi),
    )


def lab_direction(theta: np.ndarray, phi: np.ndarray) -> tuple[np.ndarray, ...]:
    """k_mu / |k| for a lab direction (theta, phi) about the x axis."""
    sin = np.sin(theta)
    return (
        -np.ones_like(theta * phi),
        np.cos(theta) * np.ones_like(phi),
        sin * np.cos(phi),
        sin * np.sin(phi),
    )


def _shell_weight(theta: np.ndarray, phi: np.ndarray, s_star: float, v: float) -> np.ndarray:
    return smearing_weight(np.sqrt(boosted_k_squared(shell_momentum(theta, phi, s_star, v), v)))


def angular_factors(v: float, tol: ToleranceSpec) -> list[QuadratureResult]:
    """Integrals of k_mu/s over detector-frame directions, one per component."""
    return [
        integrate_sphere(
            lambda theta, phi, mu=mu: comoving_covector(theta, phi, v)[mu],
            tol,
            context=f"free_angular[{mu}]",
        )
        for mu in range(4)
    ]


def _radial_free(omega: float, window: SwitchingWindow, regime: str, regulator: float, tol: ToleranceSpec) -> QuadratureResult:
    s_star = -omega
    delta_tau = window.delta_tau
    if regime == FINITE_TIME:
        if delta_tau == 0:
            return QuadratureResult(0.0, 0.0, 1)

        def integrand(s: np.ndarray) -> np.ndarray:
            return s**2 * smearing_weight(s) * switching_terms(omega + s, delta_tau)[1]

        return integrate_1d(
            integrand,
            0.0,
            radial_cutoff(s_star),
            tol,
            breakpoints=[s_star] if s_star > 0 else [],
            panel_width=math.pi / delta_tau,
            context="free_radial",
        )

    def lorentzian(s: np.ndarray) -> np.ndarray:
        return s**2 * smearing_weight(s) * alpha_split(omega, -s, regulator).alpha_i

    return integrate_1d(
        lorentzian,
        0.0,
        radial_cutoff(s_star, regulator),
        tol,
        breakpoints=regulator_breakpoints(s_star, regulator),
        context="free_radial_regulated",
    )


def free_channel(
    omega: float,
    v: float,
    window: SwitchingWindow,
    regime: str,
    regulator: float,
    tol: ToleranceSpec,
) -> ForceComponents:
    """Force for one effective gap (omega = Omega ground, -Omega excited)."""
    if regime == LONG_TIME and regulator == 0:
        s_star = -omega
        if s_star <= 0:
            return zero_force()
        split = alpha_split(omega, -s_star, 0.0)
        values = []
        errors = []
        converged = True
        for mu in range(4):
            shell = onshell_surface_integral(
                lambda theta, phi, mu=mu: lab_direction(theta, phi)[mu] * _shell_weight(theta, phi, s_star, v),
                s_star,
                tol,
                velocity=v,
                context=f"free_shell[{mu}]",
            )
            factor = FREE_PREFACTOR * split.delta_weight
            values.append(factor * float(np.real(shell.value)))
            errors.append(abs(factor) * shell.error_estimate)
            converged = converged and shell.converged
        return ForceComponents(F=tuple(values), err=tuple(errors), converged=converged)

    radial = _radial_free(omega, window, regime, regulator, tol)
    angles = angular_factors(v, tol)
    values = tuple(FREE_PREFACTOR * float(np.real(a.value)) * radial.value for a in angles)
    errors = tuple(
        abs(FREE_PREFACTOR) * (abs(a.value) * radial.error_estimate + abs(radial.value) * a.error_estimate)
        for a in angles
    )
    converged = radial.converged and all(a.converged for a in angles)
    return ForceComponents(F=values, err=errors, converged=converged)


def force_free(
    params: DetectorParams,
    state: DetectorState,
    v: float,
    window: SwitchingWindow,
    regime: str = FINITE_TIME,
    tol: ToleranceSpec | None = None,
    scales: PhysicalScales = NATURAL_SCALES,
) -> ForceComponents:
    """Four-force in free space, in units of hbar*c*lambda^2/sigma^2.

    Finite-time evaluation ignores the regulator; the long-time limit uses the
    distributional split at Gamma = 0 and the Lorentzian alpha otherwise.
    """
    check_regime(regime)
    tol = tol or DEFAULT_TOLERANCE
    weight = StateWeight.from_state(state)
    natural, _, beta, window = natural_inputs(params, FreeSpace(), v, window, scales)
    lorentz_factor(beta)
    (w_ground, omega_ground), (w_excited, omega_excited) = weight.channels(natural.gap_omega)
    regulator = natural.regulator_gamma
    ground = free_channel(omega_ground, beta, window, regime, regulator, tol) if w_ground > 0 else zero_force()
    excited = free_channel(omega_excited, beta, window, regime, regulator, tol) if w_excited > 0 else zero_force()
    result = mix_force(weight.a, ground, excited)
    emit(
        "force_evaluated",
        {"boundary": "free", "regime": regime, "a": weight.a, "F": result.F, "converged": result.converged},
        level="DEBUG",
    )
    return result


def reduced_friction_integral(
    x_gap: float, delta_tau: float, tol: ToleranceSpec | None = None
) -> QuadratureResult:
    """int_0^inf s^2 exp(-s^2/2) sin(dtau (s + x)) / (s + x) ds for the ground state."""
    tol = tol or DEFAULT_TOLERANCE
    if delta_tau == 0:
        return QuadratureResult(0.0, 0.0, 1)

    def integrand(s: np.ndarray) -> np.ndarray:
        return s**2 * smearing_weight(s) * delta_tau * np.sinc(delta_tau * (s + x_gap) / math.pi)

    return integrate_1d(
        integrand,
        0.0,
        math.inf,
        tol,
        breakpoints=[S_MAX],
        panel_width=math.pi / delta_tau,
        context="free_reduced",
    )


def force_free_reduced_ground(
    params: DetectorParams,
    v: float,
    window: SwitchingWindow,
    tol: ToleranceSpec | None = None,
    scales: PhysicalScales = NATURAL_SCALES,
) -> float:
    """Ground-state friction F_x from the single radial integral left after the angular one."""
    natural, _, beta, window = natural_inputs(params, FreeSpace(), v, window, scales)
    gamma = lorentz_factor(beta)
    radial = reduced_friction_integral(natural.gap_omega, window.delta_tau, tol)
    return -gamma * beta / (2.0 * math.pi**2) * float(radial.value)
