"""SweepConfig and its sources: defaults, a TOML key-value file, flags."""

from __future__ import annotations

import math
import tomllib
from collections.abc import Mapping
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any

from paw_entanglement.exceptions import ValidationError
from paw_entanglement.pawclock import DEFAULT_N_GRID, Scenario


class Subcommand(Enum):
    SPEED = "speed"
    QUBIT_CLOCK = "qubit-clock"
    CONTINUOUS = "continuous"
    DISCRETE_CLOCK = "discrete-clock"
    FIDELITY_SWEEP = "fidelity-sweep"
    CONVERGE = "converge"
    COMPARE = "compare"
    VERIFY = "verify"


# Times in units of hbar/epsilon, from weak evolution up to t* = pi/2.
DEFAULT_TIMES: tuple[float, ...] = (0.2, 0.5, 1.0, math.pi / 2)
DEFAULT_DISTANCES: tuple[float, ...] = (0.9, 0.7, 0.5, 0.3, 0.1)
DEFAULT_FIDELITY_ALPHA_SQ: tuple[float, ...] = (1 / 5, 1 / 3, 1 / 2)
DEFAULT_SEED = 1729


@dataclass(frozen=True)
class SweepConfig:
    """Everything one CLI invocation needs; validated on construction."""

    subcommand: Subcommand
    grid_points: int = 201
    output_path: str | None = None
    alpha_sq: tuple[float, ...] | None = None
    times: tuple[float, ...] = DEFAULT_TIMES
    distances: tuple[float, ...] = DEFAULT_DISTANCES
    phi: float = math.pi / 2
    theta: float = math.pi
    scenario: Scenario = Scenario.INTERACTING
    n_grid: tuple[int, ...] = DEFAULT_N_GRID
    n_ticks: int = 16
    coupling: float = 2.0
    include_interacting: bool = True
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.grid_points < 2:
            raise ValidationError(f"grid_points must be >= 2, got {self.grid_points}")
        if self.alpha_sq is not None:
            if not self.alpha_sq:
                raise ValidationError("alpha_sq list is empty")
            for a in self.alpha_sq:
                if not 0.0 <= a <= 1.0:
                    raise ValidationError(f"alpha_sq must be in [0, 1], got {a}")
        if not self.times:
            raise ValidationError("time list is empty")
        for t in self.times:
            if not (math.isfinite(t) and t >= 0):
                raise ValidationError(f"times must be finite and >= 0, got {t}")
        if not self.distances:
            raise ValidationError("distance list is empty")
        for d in self.distances:
            if not 0.0 <= d <= 1.0:
                raise ValidationError(f"distances must be in [0, 1], got {d}")
        for name in ("phi", "theta", "coupling"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ValidationError(f"{name} must be finite and >= 0, got {value}")
        if self.coupling == 0:
            raise ValidationError("coupling must be positive")
        if not self.n_grid or any(n < 2 for n in self.n_grid):
            raise ValidationError(f"n_grid entries must be >= 2, got {self.n_grid}")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:], strict=False)):
            raise ValidationError(f"n_grid must be strictly ascending: {self.n_grid}")
        if self.n_ticks < 2:
            raise ValidationError(f"n_ticks must be >= 2, got {self.n_ticks}")
        if self.seed < 0:
            raise ValidationError(f"seed must be >= 0, got {self.seed}")
        # theta = 2t and phi = coupling * t must stay finite
        for t in self.times:
            if not (math.isfinite(2.0 * t) and math.isfinite(self.coupling * t)):
                raise ValidationError(f"time {t} overflows the evolution angle")

    def alpha_sq_or(self, default: tuple[float, ...]) -> tuple[float, ...]:
        return self.alpha_sq if self.alpha_sq is not None else default


_FIELD_NAMES = {f.name for f in fields(SweepConfig)} - {"subcommand"}
# File keys that differ from the dataclass field names
_FILE_ALIASES = {
    "out": "output_path",
    "time": "times",
    "distance": "distances",
    "interacting": "include_interacting",
}


def parse_number(text: str) -> float:
    """Float, fraction such as `1/3`, or a multiple/fraction of pi (`pi/2`, `2*pi`)."""
    raw = text.strip().lower()
    try:
        if "pi" not in raw:
            numerator, slash, denominator = raw.partition("/")
            if slash:
                return float(numerator) / float(denominator)
            return float(raw)
        if raw == "pi":
            return math.pi
        if raw.startswith("pi/"):
            return math.pi / float(raw[3:])
        if raw.endswith("*pi"):
            return float(raw[:-3]) * math.pi
    except (ValueError, ZeroDivisionError):
        pass
    raise ValidationError(f"cannot parse number {text!r}")


def parse_number_list(text: str) -> tuple[float, ...]:
    return tuple(parse_number(part) for part in text.split(",") if part.strip())


def parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValidationError(f"cannot parse integer list {text!r}") from None


def _as_float(value: Any) -> float:
    if isinstance(value, str):
        return parse_number(value)
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise TypeError(f"expected a number, got {type(value).__name__}")
    return float(value)


def _as_int(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an integer, got {type(value).__name__}")
    return value


def _as_list(value: Any) -> list[Any]:
    return value if isinstance(value, list) else [value]


def _coerce(name: str, value: Any) -> Any:
    if name in ("alpha_sq", "times", "distances"):
        return tuple(_as_float(v) for v in _as_list(value))
    if name == "n_grid":
        return tuple(_as_int(v) for v in _as_list(value))
    if name in ("phi", "theta", "coupling"):
        return _as_float(value)
    if name == "scenario":
        try:
            return Scenario(value)
        except ValueError:
            raise ValidationError(f"unknown scenario {value!r}") from None
    if name in ("grid_points", "n_ticks", "seed"):
        return _as_int(value)
    if name == "include_interacting":
        if not isinstance(value, bool):
            raise TypeError(f"expected true or false, got {value!r}")
        return value
    if name == "output_path":
        if not isinstance(value, str):
            raise TypeError(f"expected a path string, got {value!r}")
        return value
    raise TypeError(f"no coercion for {name}")


def load_config_file(path: str | Path) -> dict[str, Any]:
    """Read a TOML key-value file into SweepConfig keyword arguments."""
    try:
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read config file {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ValidationError(f"malformed config file {path}: {exc}") from None

    values: dict[str, Any] = {}
    for key, value in raw.items():
        name = _FILE_ALIASES.get(key.replace("-", "_"), key.replace("-", "_"))
        if name not in _FIELD_NAMES:
            raise ValidationError(f"unknown config key {key!r} in {path}")
        try:
            values[name] = _coerce(name, value)
        except (TypeError, ValueError):
            raise ValidationError(
                f"bad value for {key!r} in {path}: {value!r}"
            ) from None
    return values


def build_config(
    subcommand: str,
    file_values: Mapping[str, Any] | None = None,
    flag_values: Mapping[str, Any] | None = None,
) -> SweepConfig:
    """Merge sources; flags override file, file overrides defaults."""
    try:
        command = Subcommand(subcommand)
    except ValueError:
        raise ValidationError(f"unknown subcommand {subcommand!r}") from None
    merged: dict[str, Any] = dict(file_values or {})
    merged.update({k: v for k, v in (flag_values or {}).items() if v is not None})
    return SweepConfig(subcommand=command, **merged)
