from __future__ import annotations

import textwrap

import pytest

from src.config import RunConfig, SweepSpec, load_config, parse_config, resolve_threads
from src.core.errors import FasterThanLight, NotDensityMatrix
from src.core.params import NATURAL_SCALES, SI_SCALES, SPEED_OF_LIGHT_SI, FreeSpace, Plate
from src.force.components import FINITE_TIME, LONG_TIME


VALID_YAML = """
units: "dimensionless"

detector:
  sigma_omega: 2.0
  coupling_lambda: 1.0

state:
  excited_pop: 0.0

trajectory:
  beta_v: 0.5

boundary:
  kind: "free"

window:
  omega_delta_tau: 4.0

regime:
  time: "finite"

tolerances:
  rel_tol: 1.0e-8

output:
  path: null
  format: "csv"
  normalization: "friction_units"

logging:
  level: "info"
  log_dir: "logs/"
"""

PLATE_YAML = """
units: "dimensionless"
threads: 2

detector:
  sigma_omega: 1.0

state:
  excited_pop: 1.0

trajectory:
  beta_v: 0.999

boundary:
  kind: "plate"
  d_over_sigma: 0.5
  reflection_re: 0.0
  reflection_im: 1.0

window:
  omega_delta_tau: 0.001

regime:
  time: "long"
  angular: "closed"

tolerances:
  rel_tol: 1.0e-6
  abs_tol: 1.0e-15

output:
  format: "json"

logging:
  level: "DEBUG"

sweep:
  parameter: "d"
  start: 0.01
  stop: 100.0
  points: 5
  spacing: "log"
"""

SI_YAML = """
units: "si"

detector:
  gap_omega: 3.0e9
  smearing_sigma: 0.2
  coupling_lambda: 1.0e-3

state:
  excited_pop: 0.5
  coherence_re: 0.1

trajectory:
  velocity: 1.0e8

boundary:
  kind: "plate"
  distance: 0.4

window:
  delta_tau: 1.0e-9

regime:
  time: "finite"

tolerances:
  rel_tol: 1.0e-8

output:
  normalization: "si_newton"

logging:
  level: "WARNING"
  log_dir: null
"""


def _write_yaml(tmp_path, contents: str) -> str:
    path = tmp_path / "config.yaml"
    path.write_text(textwrap.dedent(contents))
    return str(path)


def test_load_config_valid(tmp_path, monkeypatch) -> None:
    path = _write_yaml(tmp_path, VALID_YAML)

    monkeypatch.setenv("UDWF_THREADS", "3")
    config = load_config(path)

    assert isinstance(config, RunConfig)
    assert config.units == "dimensionless"
    assert config.scales == NATURAL_SCALES
    assert config.params.gap_omega == 2.0
    assert config.params.smearing_sigma == 1.0
    assert config.velocity == 0.5
    assert config.boundary == FreeSpace()
    assert config.window.delta_tau == pytest.approx(2.0)
    assert config.regime == FINITE_TIME
    assert config.output.normalization == "friction_units"
    assert config.log.level == "INFO"
    assert config.threads == 3
    assert config.sweep is None


def test_load_config_plate_with_sweep(tmp_path) -> None:
    path = _write_yaml(tmp_path, PLATE_YAML)

    config = load_config(path)

    assert config.is_plate
    assert config.boundary == Plate(distance=0.5, reflection=1j)
    assert config.regime == LONG_TIME
    assert config.threads == 2
    assert config.output.path is None
    assert config.log.log_dir is None
    assert config.sweep == SweepSpec("d", 0.01, 100.0, 5, "log")
    assert config.sweep.values() == pytest.approx([0.01, 0.1, 1.0, 10.0, 100.0])


def test_load_config_si_units(tmp_path) -> None:
    path = _write_yaml(tmp_path, SI_YAML)

    config = load_config(path, threads=1)

    assert config.scales == SI_SCALES
    assert config.params.smearing_sigma == 0.2
    assert config.params.coupling_lambda == 1.0e-3
    assert config.boundary.distance == 0.4
    assert config.state.coherence == complex(0.1, 0.0)
    assert config.window.delta_tau == 1.0e-9
    assert config.log.log_dir is None


def test_load_config_missing_file(tmp_path) -> None:
    missing_path = tmp_path / "does_not_exist.yaml"

    with pytest.raises(ValueError):
        load_config(str(missing_path))


def test_load_config_invalid_yaml(tmp_path) -> None:
    path = _write_yaml(tmp_path, "detector: [unclosed\n")

    with pytest.raises(ValueError):
        load_config(path)


def test_load_config_missing_detector(tmp_path) -> None:
    yaml_text = VALID_YAML.replace("detector:", "sensor:")
    path = _write_yaml(tmp_path, yaml_text)

    with pytest.raises(ValueError, match="detector"):
        load_config(path, threads=1)


def test_load_config_missing_distance(tmp_path) -> None:
    yaml_text = PLATE_YAML.replace("d_over_sigma: 0.5", "")
    path = _write_yaml(tmp_path, yaml_text)

    with pytest.raises(ValueError, match="d_over_sigma"):
        load_config(path)


def test_mixed_unit_styles_rejected(tmp_path) -> None:
    yaml_text = VALID_YAML.replace("beta_v: 0.5", "beta_v: 0.5\n  velocity: 1.0e8")
    path = _write_yaml(tmp_path, yaml_text)

    with pytest.raises(ValueError, match="velocity"):
        load_config(path, threads=1)


def test_superluminal_velocity_rejected(tmp_path) -> None:
    path = _write_yaml(tmp_path, VALID_YAML.replace("beta_v: 0.5", "beta_v: 1.0"))

    with pytest.raises(FasterThanLight):
        load_config(path, threads=1)


def test_non_positive_state_rejected(tmp_path) -> None:
    yaml_text = VALID_YAML.replace("excited_pop: 0.0", "excited_pop: 0.5\n  coherence_re: 0.6")
    path = _write_yaml(tmp_path, yaml_text)

    with pytest.raises(NotDensityMatrix):
        load_config(path, threads=1)


def test_zero_gap_rejected_in_dimensionless_units(tmp_path) -> None:
    path = _write_yaml(tmp_path, VALID_YAML.replace("sigma_omega: 2.0", "sigma_omega: 0.0"))

    with pytest.raises(ValueError, match="sigma_omega"):
        load_config(path, threads=1)


def test_unknown_regime_and_format_rejected(tmp_path) -> None:
    bad_regime = _write_yaml(tmp_path, VALID_YAML.replace('time: "finite"', 'time: "forever"'))
    with pytest.raises(ValueError, match="regime.time"):
        load_config(bad_regime, threads=1)

    bad_format = _write_yaml(tmp_path, VALID_YAML.replace('format: "csv"', 'format: "xlsx"'))
    with pytest.raises(ValueError, match="output.format"):
        load_config(bad_format, threads=1)


def test_sweep_d_requires_plate(tmp_path) -> None:
    yaml_text = VALID_YAML + textwrap.dedent(
        """
        sweep:
          parameter: "d"
          start: 1.0
          stop: 2.0
          points: 3
        """
    )
    path = _write_yaml(tmp_path, yaml_text)

    with pytest.raises(ValueError, match="plate"):
        load_config(path, threads=1)


def test_sweep_spec_validation() -> None:
    with pytest.raises(ValueError):
        SweepSpec("mass", 0.0, 1.0, 3)
    with pytest.raises(ValueError):
        SweepSpec("v", 0.0, 0.5, 1)
    with pytest.raises(ValueError):
        SweepSpec("v", 0.0, 0.5, 3, spacing="log")

    assert SweepSpec("v", 0.0, 0.5, 3).values() == [0.0, 0.25, 0.5]


def test_with_value_replaces_swept_parameter(tmp_path) -> None:
    config = load_config(_write_yaml(tmp_path, PLATE_YAML))

    point = config.with_value("d", 2.0)

    assert point.boundary.distance == 2.0
    assert point.boundary.reflection == 1j
    assert point.sweep is None
    assert point.threads == config.threads


def test_with_value_sigma_omega_in_si_units(tmp_path) -> None:
    config = load_config(_write_yaml(tmp_path, SI_YAML), threads=1)

    point = config.with_value("sigma_omega", 2.0)

    assert point.params.gap_omega == pytest.approx(2.0 * SPEED_OF_LIGHT_SI / 0.2)
    assert point.params.smearing_sigma == 0.2


def test_to_mapping_round_trip(tmp_path) -> None:
    config = load_config(_write_yaml(tmp_path, PLATE_YAML))

    rebuilt = parse_config(config.to_mapping())

    assert rebuilt == config


def test_parse_config_rejects_non_mapping() -> None:
    with pytest.raises(ValueError):
        parse_config(["units", "si"])


def test_resolve_threads(monkeypatch) -> None:
    monkeypatch.setenv("UDWF_THREADS", "5")
    assert resolve_threads() == 5
    assert resolve_threads(2) == 2

    monkeypatch.setenv("UDWF_THREADS", "many")
    with pytest.raises(ValueError):
        resolve_threads()

    with pytest.raises(ValueError):
        resolve_threads(0)
