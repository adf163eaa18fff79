"""Configuration module for certification sweeps."""

import hashlib
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import yaml

from chordcert.errors import ChordCertError
from chordcert.fields import parse_field_spec

logger = logging.getLogger(__name__)

MAX_FIELD_LIMIT = 16
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class RationalCurve:
    """A curve over Q given by its spec string and a point to take multiples of."""
    curve: str
    generator: str


@dataclass
class RationalConfig:
    """Configuration for the spot check over the rationals."""
    curves: List[RationalCurve] = field(
        default_factory=lambda: [RationalCurve(curve="0,0,1,-1,0", generator="(0,0)")]
    )
    points: int = 6
    max_bits: int = 512

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.points < 6:
            raise ValueError(f"Rational spot check needs at least 6 points, got {self.points}")
        if self.max_bits < 8:
            raise ValueError(f"max_bits {self.max_bits} is too small")


@dataclass
class SweepConfig:
    """Configuration for an exhaustive sweep."""
    max_field: int = 7
    exhaustive_max_size: int = 3
    sampled_curves: int = 10
    sample_seed: int = 1
    workers: int = 1
    extension_fields: List[str] = field(default_factory=lambda: ["p=2,k=2,mod=1,1,1"])
    journal_path: Optional[str] = None
    log_level: str = "INFO"
    rational: RationalConfig = field(default_factory=RationalConfig)

    def __post_init__(self):
        """Validate configuration after initialization."""
        if self.max_field < 2 or self.max_field > MAX_FIELD_LIMIT:
            raise ValueError(f"max_field {self.max_field} is outside 2..{MAX_FIELD_LIMIT}")
        if self.exhaustive_max_size < 0:
            raise ValueError("exhaustive_max_size must not be negative")
        if self.sampled_curves < 1:
            raise ValueError("Must sample at least 1 curve per field")
        if self.workers < 1:
            raise ValueError("Must use at least 1 worker")
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"Unknown log level {self.log_level}")
        self.log_level = self.log_level.upper()
        for spec in self.extension_fields:
            try:
                parse_field_spec(spec)
            except ChordCertError as e:
                raise ValueError(f"Invalid extension field {spec!r}: {e}")


def _rational_from_dict(data: Dict[str, Any]) -> RationalConfig:
    curves = [RationalCurve(**entry) for entry in data.get("curves", [])]
    kwargs: Dict[str, Any] = {k: v for k, v in data.items() if k != "curves"}
    if curves:
        kwargs["curves"] = curves
    return RationalConfig(**kwargs)


class ConfigManager:
    """Loads the sweep configuration from YAML and applies environment overrides."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path or os.getenv("CHORDCERT_CONFIG", "./config/sweep.yaml")
        self.sweep_config = self.load_sweep_config()

    def _read_section(self) -> Dict[str, Any]:
        try:
            with open(self.config_path) as f:
                data = yaml.safe_load(f)
        except FileNotFoundError:
            logger.debug(f"Configuration file not found: {self.config_path}; using defaults")
            return {}
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in configuration file: {e}")

        if not isinstance(data, dict) or "sweep" not in data:
            raise ValueError("Configuration file must contain 'sweep' section")
        return dict(data["sweep"] or {})

    def load_sweep_config(self) -> SweepConfig:
        """Load the sweep section, then let environment variables override it."""
        section = self._read_section()
        overrides = {
            "max_field": ("CHORDCERT_MAX_FIELD", int),
            "workers": ("CHORDCERT_WORKERS", int),
            "log_level": ("CHORDCERT_LOG_LEVEL", str),
            "journal_path": ("CHORDCERT_JOURNAL", str),
        }
        for key, (env, cast) in overrides.items():
            value = os.getenv(env)
            if value is not None:
                try:
                    section[key] = cast(value)
                except ValueError:
                    raise ValueError(f"Environment variable {env}={value!r} is not a valid {key}")

        rational = section.pop("rational", None)
        try:
            config = SweepConfig(**section)
        except TypeError as e:
            raise ValueError(f"Error loading configuration: {e}")
        if rational is not None:
            config.rational = _rational_from_dict(rational)
        return config

    def get_config_hash(self) -> str:
        """Hash of the configuration file content, empty when there is no file."""
        try:
            with open(self.config_path, "rb") as f:
                content = f.read()
            return hashlib.md5(content).hexdigest()
        except FileNotFoundError:
            return ""
