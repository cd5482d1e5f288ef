"""Oracle suite: each check measures one property of the engine against its target."""

from __future__ import annotations

from dataclasses import dataclass, field
import math
import time
from typing import Callable

import numpy as np

from src.asymptotics.angular import angular_integral, angular_limit_C
from src.asymptotics.catalogue import RegimeKey, asymptote
from src.asymptotics.meijer import meijer_limits, meijer_reduced
from src.core.events import emit
from src.core.params import DetectorParams, DetectorState, Plate, SwitchingWindow, lorentz_factor
from src.field.correlator import ModeLabel, free_wightman_k, image_wightman_k, plate_kernel
from src.force.components import FINITE_TIME, LONG_TIME, ForceComponents
from src.force.free import force_free, force_free_reduced_ground
from src.force.plate import QUADRATURE, force_plate
from src.kinematics.lorentz import FourVector
from src.numerics.quadrature import ToleranceSpec

VERIFY_TOLERANCE = ToleranceSpec(rel_tol=1e-8, abs_tol=1e-15)
VERIFY_SEED = 20_160_914

FAST_SUITE = (1, 5, 9, 10, 12)
SUITES = ("fast", "full")

GROUND = DetectorState(excited_pop=0.0)
EXCITED = DetectorState(excited_pop=1.0)
EQUAL_REFLECTION = complex(1.0, 1.0) / math.sqrt(2.0)


@dataclass(frozen=True)
class CriterionResult:
    """Measured value of one check next to its target and tolerance."""

    number: int
    name: str
    measured: float
    target: float
    tolerance: float
    passed: bool
    seconds: float = 0.0
    notes: tuple[str, ...] = ()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.number:2d} {self.name}: measured={self.measured:.6g} "
            f"target={self.target:.6g} tol={self.tolerance:.3g} ({self.seconds:.1f}s)"
        )


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    results: list[CriterionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> list[int]:
        return [result.number for result in self.results if not result.passed]

    def lines(self) -> list[str]:
        lines = []
        for result in self.results:
            lines.append(result.line())
            lines += [f"     note: {note}" for note in result.notes]
        passed = len(self.results) - len(self.failures)
        lines.append(f"{'PASSED' if self.passed else 'FAILED'}: {passed}/{len(self.results)}")
        return lines


Measurement = tuple[float, float, float, bool, tuple[str, ...]]


def _params(omega: float = 1.0) -> DetectorParams:
    return DetectorParams(gap_omega=omega, smearing_sigma=1.0)


def _within(measured: float, target: float, tolerance: float) -> bool:
    return math.isfinite(measured) and abs(measured - target) <= tolerance


def _worst(ratios: list[float]) -> float:
    """The ratio farthest from one."""
    return max(ratios, key=lambda r: abs(r - 1.0) if math.isfinite(r) else math.inf)


def _free_dual() -> Measurement:
    worst = 0.0
    for v in (0.1, 0.5, 0.9):
        for t_gap in (0.1, 1.0, 10.0):
            for x_gap in (0.5, 1.0, 5.0):
                params = _params(x_gap)
                window = SwitchingWindow(t_gap / x_gap)
                full = force_free(params, GROUND, v, window, tol=VERIFY_TOLERANCE).x
                reduced = force_free_reduced_ground(params, v, window, VERIFY_TOLERANCE)
                worst = max(worst, abs(full - reduced) / abs(reduced))
    return worst, 0.0, 1e-4, worst <= 1e-4, ()


def _free_short_time() -> Measurement:
    params = _params(1.0)
    window = SwitchingWindow(1e-3)
    ratios = []
    for name, state in (("ground", GROUND), ("excited", EXCITED)):
        numeric = force_free(params, state, 0.5, window, tol=VERIFY_TOLERANCE).x
        closed = asymptote(RegimeKey(name, "friction_x", "short", "free"), params, 0.5, window=window)
        ratios.append(numeric / closed)
    measured = _worst(ratios)
    return measured, 1.0, 0.02, _within(measured, 1.0, 0.02), ()


def _free_envelope() -> Measurement:
    params = _params(1.0)
    tol = ToleranceSpec(rel_tol=1e-6, abs_tol=1e-16)
    peaks = np.arange(math.ceil(30.0 / math.pi), math.floor(300.0 / math.pi) + 1) * math.pi
    magnitudes = [abs(force_free_reduced_ground(params, 0.5, SwitchingWindow(float(t)), tol)) for t in peaks]
    slope = float(np.polyfit(np.log(peaks), np.log(magnitudes), 1)[0])
    return slope, -3.0, 0.1, _within(slope, -3.0, 0.1), ()


def _excited_steady() -> Measurement:
    params = _params(1.0)
    v = 0.5
    window = SwitchingWindow(100.0)
    total = (
        force_free(params, EXCITED, v, window, tol=VERIFY_TOLERANCE).x
        + force_free(params, GROUND, v, window, tol=VERIFY_TOLERANCE).x
    )
    gamma = lorentz_factor(v)
    reference = -gamma * v * math.exp(-0.5) / (2.0 * math.pi)
    ratio = total / reference
    return ratio, 1.0, 0.02, _within(ratio, 1.0, 0.02), ()


def _casimir_velocity() -> Measurement:
    params = _params(1.0)
    plate = Plate(50.0, 1.0 + 0j)
    window = SwitchingWindow(0.0)
    fast = force_plate(params, GROUND, 0.999, plate, window, LONG_TIME, tol=VERIFY_TOLERANCE).z
    slow = force_plate(params, GROUND, 0.001, plate, window, LONG_TIME, tol=VERIFY_TOLERANCE).z
    ratio = fast / slow
    high = asymptote(RegimeKey("ground", "casimir_z", "long", "large_d", "high_v"), params, 0.999, 50.0, 1.0)
    low = asymptote(RegimeKey("ground", "casimir_z", "long", "large_d", "small_v"), params, 0.001, 50.0, 1.0)
    notes = (
        f"small-velocity closed form / engine = {low / slow:.6g}",
        f"high-velocity closed form / engine = {high / fast:.6g} (informational)",
    )
    return ratio, 1.0, 0.05, _within(ratio, 1.0, 0.05), notes


def _casimir_contact() -> Measurement:
    params = _params(1.0)
    plate = Plate(0.01, 1.0 + 0j)
    numeric = force_plate(params, GROUND, 0.999, plate, SwitchingWindow(0.0), LONG_TIME, tol=VERIFY_TOLERANCE).z
    closed = asymptote(RegimeKey("ground", "casimir_z", "long", "small_d"), params, 0.999, 0.01, 1.0)
    ratio = numeric / closed
    return ratio, 1.0, 0.03, _within(ratio, 1.0, 0.03), ()


def _pointlike_limits() -> Measurement:
    params = _params(1.0)
    key = RegimeKey("ground", "casimir_z", "long", "pointlike", "small_v")
    far_d = 50.0
    near_d = 5e-4
    far = asymptote(key, params, 0.0, far_d, 1.0) / (-1.0 / (8.0 * math.pi**2 * far_d**3))
    near = asymptote(key, params, 0.0, near_d, 1.0) / (-1.0 / (16.0 * math.pi * near_d**2))
    measured = _worst([far, near])
    notes = (f"x = 100: {far:.6g}", f"x = 1e-3: {near:.6g}")
    return measured, 1.0, 0.02, _within(measured, 1.0, 0.02), notes


def _friction_factorization() -> Measurement:
    params = _params(1.0)
    free = [
        force_free_reduced_ground(params, v, SwitchingWindow(1.0), VERIFY_TOLERANCE) / (lorentz_factor(v) * v)
        for v in (0.1, 0.5, 0.9)
    ]
    free_spread = (max(free) - min(free)) / abs(free[0])
    corners = ((FINITE_TIME, 0.01), (FINITE_TIME, 10.0), (LONG_TIME, 0.01), (LONG_TIME, 10.0))
    plate_spread = 0.0
    for regime, d in corners:
        window = SwitchingWindow(1e-3 if regime == FINITE_TIME else 0.0)
        reduced = [
            force_plate(params, GROUND, v, Plate(d, EQUAL_REFLECTION), window, regime, tol=VERIFY_TOLERANCE).x
            / (lorentz_factor(v) * v)
            for v in (0.1, 0.9)
        ]
        plate_spread = max(plate_spread, abs(reduced[1] - reduced[0]) / abs(reduced[0]))
    passed = free_spread <= 1e-12 and plate_spread <= 0.01
    notes = (f"free-space spread {free_spread:.3g} (target 1e-12)", f"plate spread {plate_spread:.3g} (target 1e-2)")
    return max(free_spread, plate_spread), 0.0, 0.01, passed, notes


def _coherence_independence() -> Measurement:
    rng = np.random.default_rng(VERIFY_SEED)
    a = 0.3
    params = _params(1.0)
    plate = Plate(1.0, EQUAL_REFLECTION)
    window = SwitchingWindow(1.0)

    def outputs(state: DetectorState) -> tuple[ForceComponents, ForceComponents]:
        return (
            force_free(params, state, 0.5, window, tol=VERIFY_TOLERANCE),
            force_plate(params, state, 0.5, plate, window, tol=VERIFY_TOLERANCE),
        )

    baseline = outputs(DetectorState(excited_pop=a))
    mismatches = 0
    for _ in range(20):
        radius = math.sqrt(a * (1.0 - a) * rng.uniform())
        phase = rng.uniform(0.0, 2.0 * math.pi)
        b = complex(radius * math.cos(phase), radius * math.sin(phase))
        candidate = outputs(DetectorState(excited_pop=a, coherence=b))
        if any(c.F != base.F or c.err != base.err for c, base in zip(candidate, baseline)):
            mismatches += 1
    return float(mismatches), 0.0, 0.0, mismatches == 0, ()


def _transverse_symmetry() -> Measurement:
    params = _params(1.0)
    window = SwitchingWindow(1.0)
    plate = Plate(1.0, EQUAL_REFLECTION)
    results = [
        force_free(params, GROUND, 0.5, window, tol=VERIFY_TOLERANCE),
        force_free(params, EXCITED, 0.5, window, LONG_TIME, tol=VERIFY_TOLERANCE),
        force_plate(params, GROUND, 0.5, plate, window, FINITE_TIME, tol=VERIFY_TOLERANCE, angular=QUADRATURE),
        force_plate(params, EXCITED, 0.5, plate, window, LONG_TIME, tol=VERIFY_TOLERANCE, angular=QUADRATURE),
    ]
    worst = max(abs(r.y) / max(abs(r.x) + abs(r.z), 1e-300) for r in results)
    return worst, 0.0, 1e-8, worst <= 1e-8, ()


def _angular_limits() -> Measurement:
    v = 0.999
    gamma = lorentz_factor(v)
    far0 = angular_integral("I0", v, 50.0) / angular_limit_C("C0", v, 50.0)
    far1 = angular_integral("I1", v, 50.0) / angular_limit_C("C1", v, 50.0)
    near0 = angular_integral("I0", v, 1e-3) / (2.0 * v * gamma**4)
    near1 = angular_integral("I1", v, 1e-3) / (4.0 / 3.0 * gamma**3 * 1e-3)
    checks = [(far0, 1e-3), (far1, 1e-2), (near0, 1e-2), (near1, 1e-2)]
    passed = all(_within(ratio, 1.0, tol) for ratio, tol in checks)
    notes = (f"I0/C0 = {far0:.8g}", f"I1/C1 = {far1:.8g}", f"small-dt I0 {near0:.6g}, I1 {near1:.6g}")
    return _worst([far0, far1, near0, near1]), 1.0, 1e-2, passed, notes


def _correlator_forms() -> Measurement:
    rng = np.random.default_rng(VERIFY_SEED)
    worst = 0.0
    dirichlet_failures = 0
    for _ in range(200):
        k = ModeLabel(tuple(float(c) for c in rng.normal(size=3)))
        d = float(rng.uniform(0.5, 3.0))
        r0 = FourVector(np.array([*rng.normal(size=3), rng.uniform(-3.0, d)]))
        z1 = float(rng.uniform(-3.0, d))
        r1 = FourVector(np.array([*rng.normal(size=3), z1]))
        R = complex(*rng.uniform(-0.7, 0.7, size=2))
        image = image_wightman_k(k, r0, r1, d, R)
        free = free_wightman_k(k, r0, r1)
        kernel = free * plate_kernel(k.reflected(), d - z1, R).value
        worst = max(worst, abs(image - kernel) / abs(free))
        surface = FourVector(np.array([*rng.normal(size=3), d]))
        if image_wightman_k(k, r0, surface, d, 1.0 + 0j) != 0:
            dirichlet_failures += 1
    notes = (f"Dirichlet surface failures: {dirichlet_failures}",)
    return worst, 0.0, 1e-12, worst <= 1e-12 and dirichlet_failures == 0, notes


def _meijer_limits() -> Measurement:
    ratios = []
    passed = True
    notes = []
    for kind in ("friction", "casimir"):
        for x_gap, side, tol in ((1e-3, 0, 0.02), (300.0, 1, 0.02), (30.0, 1, 0.07)):
            y = x_gap / math.sqrt(2.0)
            ratio = meijer_reduced(kind, y) / meijer_limits(kind, y)[side]
            ratios.append(ratio)
            passed = passed and _within(ratio, 1.0, tol)
            notes.append(f"{kind} at sigma*Omega={x_gap:g}: {ratio:.6g} (tol {tol:g})")
    return _worst(ratios), 1.0, 0.07, passed, tuple(notes)


def _excited_far_field() -> Measurement:
    params = _params(1.0)
    v = 0.5
    ratios = []
    for k in (0, 1, 2):
        phase = math.pi / 4.0 + 63 * math.pi / 2.0 + k * math.pi / 2.0
        d = phase / 2.0
        plate = Plate(d, EQUAL_REFLECTION)
        force = force_plate(params, EXCITED, v, plate, SwitchingWindow(0.0), LONG_TIME, tol=VERIFY_TOLERANCE)
        for component, attr in (("friction_x", "x"), ("casimir_z", "z")):
            for part in ("pv", "delta"):
                key = RegimeKey("excited", component, "long", "large_d", "any", part)
                closed = asymptote(key, params, v, d, EQUAL_REFLECTION)
                ratios.append(getattr(force.parts[part], attr) / closed)
    measured = _worst(ratios)
    return measured, 1.0, 0.05, _within(measured, 1.0, 0.05), ()


CRITERIA: dict[int, tuple[str, Callable[[], Measurement]]] = {
    1: ("free-space dual formulation", _free_dual),
    2: ("free-space short-time limit", _free_short_time),
    3: ("free-space long-time envelope slope", _free_envelope),
    4: ("free-space excited steady friction", _excited_steady),
    5: ("plate Casimir velocity dependence", _casimir_velocity),
    6: ("plate Casimir small-distance limit", _casimir_contact),
    7: ("pointlike Casimir limits", _pointlike_limits),
    8: ("friction factorization", _friction_factorization),
    9: ("coherence independence", _coherence_independence),
    10: ("transverse force vanishes", _transverse_symmetry),
    11: ("angular integral limits", _angular_limits),
    12: ("image and kernel correlator forms", _correlator_forms),
    13: ("Meijer-G limits", _meijer_limits),
    14: ("excited far-field oscillations", _excited_far_field),
}


def run_criterion(number: int) -> CriterionResult:
    if number not in CRITERIA:
        raise ValueError(f"Unknown criterion {number}, expected one of {sorted(CRITERIA)}")
    name, check = CRITERIA[number]
    started = time.monotonic()
    measured, target, tolerance, passed, notes = check()
    result = CriterionResult(number, name, measured, target, tolerance, passed, time.monotonic() - started, notes)
    emit(
        "verify_criterion",
        {"number": number, "name": name, "measured": measured, "target": target, "passed": passed},
    )
    return result


def cmd_verify(suite: str = "fast") -> VerifyReport:
    """Run the fast (1, 5, 9, 10, 12) or full (1-14) suite."""
    if suite not in SUITES:
        raise ValueError(f"Unknown suite '{suite}', expected one of {SUITES}")
    numbers = FAST_SUITE if suite == "fast" else tuple(sorted(CRITERIA))
    return VerifyReport(suite, [run_criterion(number) for number in numbers])


__all__ = ["CRITERIA", "FAST_SUITE", "CriterionResult", "VerifyReport", "cmd_verify", "run_criterion"]
