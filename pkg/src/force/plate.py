"""Plate correction to the four-force of a detector moving parallel to a reflecting plate.

With s the detector-frame frequency and C = omega + s, each component reduces to

    dF_mu = sign_mu / (4 pi^2 gamma^3) int ds s^2 W(s) c_mu(s) I_mu(v, s d)

where c_mu is the V_R (t, x) or V_I (z) coefficient of the A/B bracket and I_mu
the polar-angle integral (It, I0, I1). In the long-time limit at Gamma = 0 the
excited state adds an on-shell term evaluated over the resonance surface.
"""

from __future__ import annotations

from dataclasses import replace
import math
from typing import Callable

import numpy as np

from src.asymptotics.angular import angular_integral, azimuthal_integral, exact_angular_integral
from src.core.events import emit
from src.core.params import (
    NATURAL_SCALES,
    DetectorParams,
    DetectorState,
    PhysicalScales,
    Plate,
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
from src.force.free import DEFAULT_TOLERANCE, lab_direction, radial_cutoff, regulator_breakpoints
from src.force.kernels import (
    StateWeight,
    alpha_split,
    boosted_k_squared,
    detector_frequency,
    plate_pieces,
    shell_momentum,
    smearing_weight,
    switching_terms,
)
from src.numerics.quadrature import (
    QuadratureResult,
    ToleranceSpec,
    integrate_1d,
    integrate_pv,
    onshell_surface_integral,
)

PLATE_PREFACTOR = 1.0 / (8.0 * math.pi**3)

CLOSED = "closed"
QUADRATURE = "quadrature"
ANGULAR_MODES = (CLOSED, QUADRATURE)

# component index -> (angular kind, plate phase that survives the azimuthal integral, sign)
_COMPONENTS = {
    0: ("It", 1.0 + 0j, -1.0),
    1: ("I0", 1.0 + 0j, 1.0),
    3: ("I1", 1j, 1.0),
}
TRANSVERSE = 2
_PHASES = {"re": 1.0 + 0j, "im": 1j}

Radial = Callable[[np.ndarray], np.ndarray]


def _angular(kind: str, v: float, d: float, mode: str) -> Radial:
    if mode == CLOSED:
        return lambda s: exact_angular_integral(kind, v, s * d)
    return lambda s: np.array([angular_integral(kind, v, float(si) * d) for si in np.ravel(s)])


def _transverse(phase: str, v: float, d: float) -> Radial:
    return lambda s: np.array([azimuthal_integral("y", v, float(si) * d, phase) for si in np.ravel(s)])


def _terms(mu: int, v: float, d: float, mode: str) -> list[tuple[complex, Radial]]:
    """(plate phase, angular factor) pairs whose sum is the angular part of component mu."""
    if mu == TRANSVERSE:
        return [(value, _transverse(phase, v, d)) for phase, value in _PHASES.items()]
    kind, phase, _ = _COMPONENTS[mu]
    return [(phase, _angular(kind, v, d, mode))]


def _panel_width(d: float, window: SwitchingWindow, regime: str) -> float:
    width = math.pi / (2.0 * d)
    if regime == FINITE_TIME and window.delta_tau > 0:
        width = min(width, math.pi / window.delta_tau)
    return width


def _component_integral(
    mu: int,
    omega: float,
    v: float,
    plate: Plate,
    window: SwitchingWindow,
    regime: str,
    regulator: float,
    angular: str,
    tol: ToleranceSpec,
) -> QuadratureResult:
    sign = _COMPONENTS[mu][2] if mu in _COMPONENTS else 1.0
    gamma = lorentz_factor(v)
    scale = sign / (4.0 * math.pi**2 * gamma**3)
    terms = _terms(mu, v, plate.distance, angular)
    R = complex(plate.reflection)
    s_star = -omega
    width = _panel_width(plate.distance, window, regime)
    context = f"plate_radial[{'txyz'[mu]}]"

    if regime == FINITE_TIME:
        if window.delta_tau == 0:
            return QuadratureResult(0.0, 0.0, 1)
        units = [(plate_pieces(1.0, 0.0, R, phase, 0.0), angle) for phase, angle in terms]

        def integrand(s: np.ndarray) -> np.ndarray:
            s2, s1 = switching_terms(omega + s, window.delta_tau)
            bracket = sum((unit.A * s2 + unit.B * s1) * angle(s) for unit, angle in units)
            return scale * s**2 * smearing_weight(s) * bracket

        return integrate_1d(
            integrand,
            0.0,
            radial_cutoff(s_star),
            tol,
            breakpoints=[s_star] if s_star > 0 else [],
            panel_width=width,
            context=context,
        )

    if regulator > 0:

        def regulated(s: np.ndarray) -> np.ndarray:
            split = alpha_split(omega, -s, regulator)
            bracket = sum(
                plate_pieces(split.alpha_r, split.alpha_i, R, phase, omega + s).long_time_bracket() * angle(s)
                for phase, angle in terms
            )
            return scale * s**2 * smearing_weight(s) * bracket

        return integrate_1d(
            regulated,
            0.0,
            radial_cutoff(s_star, regulator),
            tol,
            breakpoints=regulator_breakpoints(s_star, regulator),
            panel_width=width,
            context=context,
        )

    principal = [(plate_pieces(1.0, 0.0, R, phase, 0.0).long_time_bracket(), angle) for phase, angle in terms]

    def numerator(s: np.ndarray) -> np.ndarray:
        return scale * s**2 * smearing_weight(s) * sum(p * angle(s) for p, angle in principal)

    if s_star > 0:
        return integrate_pv(numerator, s_star, 0.0, radial_cutoff(s_star), tol, panel_width=width, context=context)
    return integrate_1d(
        lambda s: numerator(s) / (omega + s),
        0.0,
        radial_cutoff(),
        tol,
        panel_width=width,
        context=context,
    )


def plate_shell_term(omega: float, v: float, plate: Plate, tol: ToleranceSpec) -> ForceComponents:
    """On-shell contribution of the Gamma -> 0 limit, nonzero only for a reachable shell."""
    s_star = -omega
    if s_star <= 0:
        return zero_force()
    split = alpha_split(omega, -s_star, 0.0)
    R = complex(plate.reflection)
    values = []
    errors = []
    converged = True
    for mu in range(4):

        def on_shell(theta: np.ndarray, phi: np.ndarray, mu: int = mu) -> np.ndarray:
            k = shell_momentum(theta, phi, s_star, v)
            weight = smearing_weight(np.sqrt(boosted_k_squared(k, v)))
            V = np.exp(2j * plate.distance * k[..., 2])
            pieces = plate_pieces(0.0, 1.0, R, V, omega + detector_frequency(k, v))
            return lab_direction(theta, phi)[mu] * weight * pieces.long_time_bracket()

        shell = onshell_surface_integral(on_shell, s_star, tol, velocity=v, context=f"plate_shell[{mu}]")
        factor = PLATE_PREFACTOR * split.delta_weight
        values.append(factor * float(np.real(shell.value)))
        errors.append(abs(factor) * shell.error_estimate)
        converged = converged and shell.converged
    return ForceComponents(F=tuple(values), err=tuple(errors), converged=converged)


def plate_channel(
    omega: float,
    v: float,
    plate: Plate,
    window: SwitchingWindow,
    regime: str,
    regulator: float = 0.0,
    angular: str = CLOSED,
    tol: ToleranceSpec | None = None,
) -> ForceComponents:
    """Plate correction for one effective gap (omega = Omega ground, -Omega excited).

    With angular="quadrature" the transverse component is integrated with its
    azimuth resolved, to the relative tolerance of the largest other component.
    In closed form it is zero, since the transverse direction integrates to zero
    over the azimuth.
    """
    tol = tol or DEFAULT_TOLERANCE
    values = [0.0, 0.0, 0.0, 0.0]
    errors = [0.0, 0.0, 0.0, 0.0]
    converged = True
    for mu in _COMPONENTS:
        result = _component_integral(mu, omega, v, plate, window, regime, regulator, angular, tol)
        values[mu] = float(np.real(result.value))
        errors[mu] = result.error_estimate
        converged = converged and result.converged
    if angular == QUADRATURE:
        reference = max(abs(value) for value in values)
        transverse_tol = replace(tol, abs_tol=max(tol.abs_tol, tol.rel_tol * reference))
        result = _component_integral(
            TRANSVERSE, omega, v, plate, window, regime, regulator, angular, transverse_tol
        )
        values[TRANSVERSE] = float(np.real(result.value))
        errors[TRANSVERSE] = result.error_estimate
        converged = converged and result.converged
    smooth = ForceComponents(F=tuple(values), err=tuple(errors), converged=converged)
    if regime == FINITE_TIME or regulator > 0:
        return smooth
    shell = plate_shell_term(omega, v, plate, tol)
    total = smooth + shell
    return ForceComponents(total.F, total.err, total.normalization, total.converged, {"pv": smooth, "delta": shell})


def force_plate(
    params: DetectorParams,
    state: DetectorState,
    v: float,
    boundary: Plate,
    window: SwitchingWindow,
    regime: str = FINITE_TIME,
    tol: ToleranceSpec | None = None,
    angular: str = CLOSED,
    scales: PhysicalScales = NATURAL_SCALES,
) -> ForceComponents:
    """Plate correction dF to the four-force, in units of hbar*c*lambda^2/sigma^2.

    Long-time results at Gamma = 0 carry their principal-value and on-shell
    parts under `parts["pv"]` and `parts["delta"]`.
    """
    check_regime(regime)
    if angular not in ANGULAR_MODES:
        raise ValueError(f"Unknown angular mode '{angular}', expected one of {ANGULAR_MODES}")
    if not isinstance(boundary, Plate):
        raise ValueError("force_plate requires a Plate boundary")
    weight = StateWeight.from_state(state)
    natural, plate, beta, window = natural_inputs(params, boundary, v, window, scales)
    lorentz_factor(beta)
    (w_ground, omega_ground), (w_excited, omega_excited) = weight.channels(natural.gap_omega)
    regulator = natural.regulator_gamma

    def channel(omega: float) -> ForceComponents:
        return plate_channel(omega, beta, plate, window, regime, regulator, angular, tol)

    ground = channel(omega_ground) if w_ground > 0 else _empty_like(regime, regulator)
    excited = channel(omega_excited) if w_excited > 0 else _empty_like(regime, regulator)
    result = mix_force(weight.a, ground, excited)
    emit(
        "force_evaluated",
        {
            "boundary": "plate",
            "regime": regime,
            "a": weight.a,
            "d": plate.distance,
            "F": result.F,
            "converged": result.converged,
        },
        level="DEBUG",
    )
    return result


def _empty_like(regime: str, regulator: float) -> ForceComponents:
    if regime == LONG_TIME and regulator == 0:
        return ForceComponents((0.0,) * 4, (0.0,) * 4, parts={"pv": zero_force(), "delta": zero_force()})
    return zero_force()
