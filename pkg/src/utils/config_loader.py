"""Centralized configuration loader.

Only this module reads `.env` and environment variables. Everything else
calls `load_config()` and receives the merged configuration dict.

Order:
1. Built-in defaults (`DEFAULT_CONFIG`)
2. YAML `config/config.yaml` (if present)
3. `.env` (if present)
4. Environment variable overrides
"""

from __future__ import annotations

import copy
import os
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv
import logging

logger = logging.getLogger(__name__)

DEFAULT_CONFIG: Dict[str, Any] = {
	"engine": {
		"label_bits": 10,
		"clock_hz": 133_300_000,
		"fps": 60,
		"drain_overhead": 2,
		"drain_order": "fifo",
		"trace": True,
	},
	"fuzz": {
		"frames": 10_000,
		"min_size": 16,
		"max_width": 256,
		"max_height": 256,
		"density_min": 0.05,
		"density_max": 0.95,
		"seed": 2021,
		"label_bits": 16,
		"workers": 1,
		"reproducer_dir": "fuzz_failures",
	},
	"system": {
		"log_level": "INFO",
		"log_dir": "logs",
		"log_to_file": False,
	},
}

# Mapping (section, key) -> (ENV_VAR, caster)
ENV_MAP: Dict[Tuple[str, str], Tuple[str, Callable[[str], Any]]] = {
	("fuzz", "seed"): ("QUADLABEL_SEED", int),
	("engine", "label_bits"): ("QUADLABEL_LABEL_BITS", int),
	("system", "log_level"): ("LOG_LEVEL", str),
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
	for key, value in override.items():
		if isinstance(value, dict) and isinstance(base.get(key), dict):
			_merge(base[key], value)
		else:
			base[key] = value
	return base


def env_override(section: str, key: str) -> Optional[Any]:
	"""Return the casted env override for (section, key), or None when unset."""
	env_name, caster = ENV_MAP[(section, key)]
	raw = os.getenv(env_name)
	if raw in (None, ""):
		return None
	try:
		return caster(raw)
	except ValueError:
		logger.warning(f"Env var {env_name} has an invalid value: {raw}")
		return None


def load_config(config_path: str | os.PathLike | None = "config/config.yaml") -> Dict[str, Any]:
	data = copy.deepcopy(DEFAULT_CONFIG)

	if config_path is not None:
		path = Path(config_path)
		if path.exists():
			with path.open("r", encoding="utf-8") as f:
				_merge(data, yaml.safe_load(f) or {})
			logger.debug(f"Configuration loaded from {path}")
		else:
			logger.debug(f"Config file {path} not found, using defaults")

	# .env is optional
	load_dotenv()

	applied: list[str] = []
	for (section, key), (env_name, _) in ENV_MAP.items():
		value = env_override(section, key)
		if value is None:
			continue
		data.setdefault(section, {})[key] = value
		applied.append(env_name)

	if applied:
		logger.info(f"Applied env overrides: {', '.join(applied)}")
	else:
		logger.debug("No env overrides")

	return data


__all__ = ["DEFAULT_CONFIG", "ENV_MAP", "env_override", "load_config"]
