"""
Configuration loader for the Co-NOMA optimizer.

Loads settings from a YAML file with one mapping per section (vlc, rf,
phy, scenario, solver, sweep, logging). The file path comes from the
caller, else from CONOMA_CONFIG (a .env file at the project root is
honoured), else config/settings.yaml. Unknown sections or keys and
invalid values raise ConfigError.
"""

import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from ..channel.params import RfParams, ScenarioConfig, VlcParams, dbm_per_hz_to_watts
from ..rates.constants import PhyConstants
from ..solvers.report import SolverOptions
from .errors import CoNomaError, ConfigError


CONFIG_ENV_VAR = "CONOMA_CONFIG"


@dataclass
class SweepDefaults:
    """Default sweep request; CLI flags override individual fields."""

    axis: str = "fov"
    values: list[float] = field(default_factory=lambda: [30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0])
    trials: int = 1000
    methods: list[str] = field(default_factory=lambda: ["co-noma", "noma", "baseline2"])
    seed: int = 0
    output: str = "results/sweep"
    shadowing: bool = True
    workers: int = 1
    fairness: bool = True
    extra_fovs: list[float] = field(default_factory=list)


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "INFO"
    directory: Optional[str] = "logs"


@dataclass
class ScenarioSection:
    """Scenario keys that are not part of the vlc/rf sections."""

    cell_radius: float = 2.5
    num_users: int = 6
    blockage_rate: float = 0.1


@dataclass
class AppConfig:
    """Complete configuration."""

    vlc: VlcParams = field(default_factory=VlcParams)
    rf: RfParams = field(default_factory=RfParams)
    phy: PhyConstants = field(default_factory=PhyConstants)
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    solver: SolverOptions = field(default_factory=SolverOptions)
    sweep: SweepDefaults = field(default_factory=SweepDefaults)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


SECTIONS = ("vlc", "rf", "phy", "scenario", "solver", "sweep", "logging")


def _get_project_root() -> Path:
    """Get project root directory."""
    return Path(__file__).resolve().parent.parent.parent


def _build(cls, section: str, values: Any):
    """Instantiate a section dataclass, rejecting unknown keys."""
    if values is None:
        values = {}
    if not isinstance(values, dict):
        raise ConfigError(f"section '{section}' must be a mapping", section=section)

    allowed = {f.name for f in fields(cls)}
    unknown = sorted(set(values) - allowed)
    if unknown:
        raise ConfigError(f"unknown keys in section '{section}'", section=section, keys=unknown)

    try:
        return cls(**values)
    except ConfigError:
        raise
    except (CoNomaError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid value in section '{section}': {exc}", section=section) from exc


def _rf_section(values: Any) -> RfParams:
    values = dict(values or {})
    if "noise_psd_dbm_hz" in values:
        if "noise_psd" in values:
            raise ConfigError("give either rf.noise_psd or rf.noise_psd_dbm_hz, not both")
        values["noise_psd"] = dbm_per_hz_to_watts(float(values.pop("noise_psd_dbm_hz")))
    return _build(RfParams, "rf", values)


def _vlc_section(values: Any) -> VlcParams:
    values = dict(values or {})
    if isinstance(values.get("ap_position"), list):
        values["ap_position"] = tuple(values["ap_position"])
    return _build(VlcParams, "vlc", values)


def resolve_config_path(config_path: Optional[str] = None, load_env: bool = True) -> Path:
    """Explicit path, else $CONOMA_CONFIG, else config/settings.yaml."""
    project_root = _get_project_root()
    if load_env:
        env_path = project_root / ".env"
        if env_path.exists():
            load_dotenv(env_path)

    if config_path is not None:
        return Path(config_path)
    env_value = os.getenv(CONFIG_ENV_VAR)
    if env_value:
        return Path(env_value)
    return project_root / "config" / "settings.yaml"


def config_from_dict(raw: dict) -> AppConfig:
    """Build an AppConfig from an already parsed YAML mapping."""
    if not isinstance(raw, dict):
        raise ConfigError("configuration root must be a mapping")
    unknown = sorted(set(raw) - set(SECTIONS))
    if unknown:
        raise ConfigError("unknown configuration sections", sections=unknown)

    vlc = _vlc_section(raw.get("vlc"))
    rf = _rf_section(raw.get("rf"))
    scenario_keys = _build(ScenarioSection, "scenario", raw.get("scenario"))
    try:
        scenario = ScenarioConfig(
            vlc=vlc,
            rf=rf,
            cell_radius=scenario_keys.cell_radius,
            num_users=scenario_keys.num_users,
            blockage_rate=scenario_keys.blockage_rate,
        )
    except CoNomaError as exc:
        raise ConfigError(f"invalid scenario: {exc.message}", **exc.context) from exc

    return AppConfig(
        vlc=vlc,
        rf=rf,
        phy=_build(PhyConstants, "phy", raw.get("phy")),
        scenario=scenario,
        solver=_build(SolverOptions, "solver", raw.get("solver")),
        sweep=_build(SweepDefaults, "sweep", raw.get("sweep")),
        logging=_build(LoggingConfig, "logging", raw.get("logging")),
    )


def load_config(
    config_path: Optional[str] = None,
    load_env: bool = True,
) -> AppConfig:
    """
    Load configuration from YAML.

    Args:
        config_path: Path to YAML config file (default: $CONOMA_CONFIG or config/settings.yaml)
        load_env: Whether to load .env file

    Returns:
        AppConfig with all settings; defaults when the default file is absent

    Raises:
        ConfigError: Missing explicit file, malformed YAML, unknown keys or bad values
    """
    path = resolve_config_path(config_path, load_env)
    explicit = config_path is not None or bool(os.getenv(CONFIG_ENV_VAR))

    if not path.exists():
        if explicit:
            raise ConfigError("configuration file not found", path=str(path))
        return AppConfig()

    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"malformed YAML: {exc}", path=str(path)) from exc
    except OSError as exc:
        raise ConfigError(f"cannot read configuration: {exc}", path=str(path)) from exc

    return config_from_dict(raw)
