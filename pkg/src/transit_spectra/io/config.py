"""Run configuration files.

A run file is a YAML mapping with the fields of ``RunConfig``, for example::

    subcommand: verify
    n: 7
    theorem: 1
    tolerances:
      tie: 1.0e-8
    jobs: 4
"""

from pathlib import Path
from typing import Any

import yaml

from transit_spectra.core.schemas import RunConfig


def load_run_config(path: str | Path, **overrides: Any) -> RunConfig:
    """Load a run config, applying non-None overrides on top of the file.

    Args:
        path: Path to the YAML file
        **overrides: Field values taken from the command line

    Returns:
        Validated RunConfig

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not a YAML mapping
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Run config not found: {path}")

    with open(path) as f:
        raw = yaml.safe_load(f) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"Run config {path} must be a mapping, got {type(raw).__name__}")

    tolerances = {**raw.pop("tolerances", {}), **overrides.pop("tolerances", {})}
    merged = {**raw, **{k: v for k, v in overrides.items() if v is not None}}
    if tolerances:
        merged["tolerances"] = tolerances
    return RunConfig(**merged)


def write_run_config(path: str | Path, config: RunConfig) -> None:
    """Write a run config as YAML."""
    with open(path, "w") as f:
        yaml.dump(config.model_dump(), f, default_flow_style=False, sort_keys=False)
