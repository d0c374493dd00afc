"""Configuration loading: YAML defaults, ``.env`` overrides and validated settings."""
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / 'config' / 'config.yaml'
SEED_ENV_VAR = 'DDVV_SEED'
CONFIG_ENV_VAR = 'DDVV_CONFIG'


class _Section(BaseModel):
    model_config = ConfigDict(extra='forbid', frozen=True)


class PathSettings(_Section):
    """Output directories."""

    logs: str = 'logs'
    reports: str = 'data/reports'


class LogSettings(_Section):
    """Logging level and whether to log to a file."""

    level: str = 'INFO'
    to_file: bool = False


class ProcessingSettings(_Section):
    """Worker threads."""

    max_workers: int = Field(1, ge=1)


class SearchSettings(_Section):
    """Budgets of the multi-start ratio search."""

    restarts: int = Field(64, ge=1)
    max_iters: int = Field(2000, ge=1)
    step_init: float = Field(0.5, gt=0)
    step_shrink: float = Field(0.5, gt=0, lt=1)
    step_max: float = Field(10.0, gt=0)
    grad_tol: float = Field(1e-8, gt=0)
    seed: int = Field(0, ge=0)


class SimplexSettings(_Section):
    """Budgets of the f_Q maximization over the simplex."""

    restarts: int = Field(32, ge=0)
    max_iters: int = Field(2000, ge=1)
    epsilon: float = Field(0.0, ge=0)
    tol: float = Field(1e-12, gt=0)


class LemmaSettings(_Section):
    """Randomized lemma trial counts."""

    trials: int = Field(100_000, ge=1)
    n_range: Tuple[int, int] = (2, 4)


class IdentitySettings(_Section):
    """Range and random-check counts of the identity suite."""

    n_range: Tuple[int, int] = (2, 5)
    phi_pairs: int = Field(1000, ge=0)
    chain_tuples: int = Field(1000, ge=0)


class ToleranceSettings(_Section):
    """Margins above a registered constant before a run is flagged."""

    proved_margin: float = Field(1e-8, gt=0)
    conjecture_margin: float = Field(1e-6, gt=0)


class ToolkitSettings(_Section):
    """Validated view of ``config/config.yaml``."""

    paths: PathSettings = PathSettings()
    log: LogSettings = LogSettings()
    processing: ProcessingSettings = ProcessingSettings()
    search: SearchSettings = SearchSettings()
    simplex: SimplexSettings = SimplexSettings()
    lemmas: LemmaSettings = LemmaSettings()
    identities: IdentitySettings = IdentitySettings()
    tolerances: ToleranceSettings = ToleranceSettings()

    @field_validator('lemmas', 'identities')
    @classmethod
    def _ordered_range(cls, value):
        low, high = value.n_range
        if low < 1 or high < low:
            raise ValueError(f"invalid n_range {value.n_range}")
        return value


def _read_yaml(config_path: Path) -> Dict[str, Any]:
    """Load configuration from YAML file."""
    with open(config_path, 'r') as f:
        return yaml.safe_load(f) or {}


def load_config(config_path: Optional[str] = None) -> ToolkitSettings:
    """Load and validate the toolkit configuration.

    Resolution order for the file: explicit argument, ``DDVV_CONFIG`` (from the
    environment or a ``.env`` file), then the bundled ``config/config.yaml``.
    A missing bundled file yields the built-in defaults.

    Args:
        config_path: Optional path to a YAML configuration file

    Returns:
        Validated settings
    """
    load_dotenv()
    path = config_path or os.getenv(CONFIG_ENV_VAR)
    try:
        if path is not None:
            raw = _read_yaml(Path(path))
        elif DEFAULT_CONFIG_PATH.exists():
            raw = _read_yaml(DEFAULT_CONFIG_PATH)
        else:
            raw = {}
        settings = ToolkitSettings.model_validate(raw)
    except FileNotFoundError as e:
        logger.error(f"Config file not found: {path}")
        raise ConfigError(f"config file not found: {path}") from e
    except (yaml.YAMLError, ValidationError) as e:
        logger.error(f"Invalid configuration: {str(e)}")
        raise ConfigError(str(e)) from e
    logger.debug(f"Loaded configuration from {path or DEFAULT_CONFIG_PATH}")
    return settings


def resolve_seed(explicit: Optional[int], settings: ToolkitSettings) -> int:
    """Pick the run seed: flag, then ``DDVV_SEED``, then the config file."""
    if explicit is not None:
        return int(explicit)
    load_dotenv()
    env_seed = os.getenv(SEED_ENV_VAR)
    if env_seed:
        try:
            return int(env_seed)
        except ValueError as e:
            raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {env_seed!r}") from e
    return settings.search.seed
