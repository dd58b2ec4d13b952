"""Configuration manager for satlab."""

import os
from typing import Any, Dict, Optional

import yaml

from .defaults import DEFAULT_CONFIG
from ..utils.helpers import deep_merge, parse_env_vars
from ..utils.validators import validate_config as validate_config_values
from ..utils.validators import validate_seed


class ConfigValidationError(Exception):
    """Raised when configuration is invalid."""


def validate_config(config: Dict) -> None:
    """Validate the merged configuration."""
    try:
        validate_config_values(config)
    except Exception as e:
        raise ConfigValidationError(str(e)) from e


def _coerce_types(config: Dict[str, Any]) -> Dict[str, Any]:
    # env substitution always yields strings
    constructors = config.get("constructors", {})
    if isinstance(constructors.get("seed"), str):
        try:
            constructors["seed"] = validate_seed(constructors["seed"])
        except Exception as e:
            raise ConfigValidationError(f"constructors.seed: {e}") from e
    if isinstance(constructors.get("theta"), str):
        try:
            constructors["theta"] = float(constructors["theta"])
        except ValueError as e:
            raise ConfigValidationError(f"constructors.theta: {e}") from e
    oracle = config.get("oracle", {})
    if isinstance(oracle.get("jobs"), str) and oracle["jobs"].isdigit():
        oracle["jobs"] = int(oracle["jobs"])
    return config


def load_config(config_path: Optional[str] = "config.yaml") -> Dict[str, Any]:
    """
    Load configuration from YAML with environment variable substitution.

    Features:
    - Expands environment variables (${VAR_NAME} and ${VAR_NAME:-default})
    - Applies default values for missing optional fields
    - Falls back to the built-in defaults when no file exists

    Returns:
        dict: Merged configuration with defaults

    Raises:
        ConfigValidationError: If configuration is invalid
    """
    loaded_config: Dict[str, Any] = {}
    if config_path and os.path.exists(config_path):
        with open(config_path, "r", encoding="utf-8") as f:
            try:
                loaded_config = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigValidationError(f"Invalid YAML in {config_path}: {e}") from e
        if not isinstance(loaded_config, dict):
            raise ConfigValidationError(f"{config_path} must contain a mapping")

    # substitute after merging so defaults may reference the environment too
    merged_config = _coerce_types(parse_env_vars(deep_merge(DEFAULT_CONFIG, loaded_config)))
    validate_config(merged_config)
    return merged_config
