"""
Configuration loading.

The packaged defaults mirror ``config/default.yaml``; a user YAML file is
merged over them section by section.
"""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "default.yaml"

DEFAULT_CONFIG: Dict[str, Any] = {
    "engine": {
        "mode": "auto",
        "depth_cap": 50,
        "k_variant": "rule9",
        "redundancy_k": None,
        "seed": 0,
        "deepening": True,
        "step_limit": 1_000_000,
        "check_invariants": True,
        "verify_models": False,
    },
    "oracle": {
        "atom_limit": 24,
        "max_extra": 3,
        "node_limit": 500_000,
    },
    "shoq": {
        "number_cap": 8,
        "domain_bit_limit": 16,
        "max_domain": 3,
    },
    "reports": {
        "emit_model": False,
        "json_indent": 2,
    },
    "logging": {
        "level": "WARNING",
    },
}


def deep_merge(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Merge ``override`` into a copy of ``base``; nested mappings merge, other values replace."""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def read_yaml(path: str) -> Dict[str, Any]:
    """
    Read a YAML mapping; an empty file reads as ``{}``.

    Raises:
        ConfigError: unreadable file, invalid YAML or a non-mapping document
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"invalid YAML in {path}: {exc}") from None
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a mapping, not {type(data).__name__}")
    return data


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    The effective configuration: defaults with ``path`` merged over them.

    Args:
        path: Optional user configuration file

    Returns:
        A fresh nested dictionary
    """
    config = copy.deepcopy(DEFAULT_CONFIG)
    if path:
        config = deep_merge(config, read_yaml(path))
        logger.debug("loaded configuration from %s", path)
    return config
