"""Scenario, result and CSV file formats."""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass

from .config import AngleMode, ParliamentConfig, SamplingPolicy
from .errors import ValidationError
from .freewill import AngleMeasure
from .parliament import MarginDistribution, SimulationResult

SEED_ENV = "QPARLIAMENT_SEED"
DEFAULT_SHOTS = 100_000

_FIELDS = {
    "n_a": int, "n_b": int, "n_i": int,
    "r_a": float, "r_b": float,
    "shots": int, "seed": int,
    "angle_mode": str, "measure": str,
}
_REQUIRED = ("n_a", "n_b")


class ScenarioError(ValidationError):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"{SEED_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class Scenario:
    config: ParliamentConfig
    policy: SamplingPolicy
    shots: int = DEFAULT_SHOTS


def _check_type(name, value, kind):
    if kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif kind is float:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    else:
        ok = isinstance(value, str)
    if not ok:
        raise ScenarioError(f"field {name!r}: expected {kind.__name__}, got {json.dumps(value)}")


def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ScenarioError(f"{source}: top level must be a JSON object")
    unknown = sorted(set(data) - set(_FIELDS))
    if unknown:
        raise ScenarioError(f"{source}: unknown field(s) {', '.join(unknown)}")
    for name in _REQUIRED:
        if name not in data:
            raise ScenarioError(f"{source}: missing field {name!r}")
    for name, value in data.items():
        _check_type(name, value, _FIELDS[name])
    try:
        angle_mode = AngleMode(data.get("angle_mode", AngleMode.PER_SHOT.value))
    except ValueError:
        raise ScenarioError(f"{source}: field 'angle_mode': expected 'per-shot' or 'fixed'") from None
    try:
        measure = AngleMeasure(data.get("measure", AngleMeasure.THETA_UNIFORM.value))
    except ValueError:
        raise ScenarioError(
            f"{source}: field 'measure': expected 'theta-uniform' or 'cap-uniform'"
        ) from None
    shots = data.get("shots", DEFAULT_SHOTS)
    if shots < 1:
        raise ScenarioError(f"{source}: field 'shots': must be >= 1")
    try:
        config = ParliamentConfig(
            data["n_a"], data["n_b"], data.get("n_i", 0),
            float(data.get("r_a", 0.0)), float(data.get("r_b", 0.0)),
        )
        policy = SamplingPolicy(angle_mode, measure, data.get("seed", default_seed()))
    except ValidationError as exc:
        raise ScenarioError(f"{source}: {exc}") from None
    return Scenario(config, policy, shots)


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), str(path))


def scenario_dict(scenario: Scenario) -> dict:
    c, p = scenario.config, scenario.policy
    return {
        "n_a": c.n_a, "n_b": c.n_b, "n_i": c.n_i, "r_a": c.r_a, "r_b": c.r_b,
        "shots": scenario.shots, "seed": p.seed,
        "angle_mode": p.angle_mode.value, "measure": p.measure.value,
    }


def exact_result(dist: MarginDistribution) -> dict:
    return {
        "pmf": {str(m): p for m, p in dist.pmf.items()},
        "histogram": {},
        "p_pass": dist.p_pass(),
        "stderr": 0.0,
        "engine": "exact",
    }


def sampled_result(result: SimulationResult) -> dict:
    return {
        "pmf": {str(m): c / result.shots for m, c in sorted(result.histogram.items())},
        "histogram": {str(m): c for m, c in sorted(result.histogram.items())},
        "p_pass": result.p_pass,
        "stderr": result.standard_error,
        "engine": result.engine,
        "shots": result.shots,
        "seed": result.seed,
    }


def result_csv(result: dict) -> str:
    """Rows of (margin, probability, count); count is blank for the exact engine."""
    margins = sorted({int(m) for m in result["pmf"]} | {int(m) for m in result["histogram"]})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["margin", "probability", "count"])
    for m in margins:
        writer.writerow([m, result["pmf"].get(str(m), 0.0), result["histogram"].get(str(m), "")])
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
