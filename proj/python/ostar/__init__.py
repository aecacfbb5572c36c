"""Exact o*-basis decisions for symmetry classes of tensors."""

import json

from ._core import (
    BudgetError,
    ConfigError,
    ConsistencyError,
    lam_leung_certifies_nonzero,
    semigroup_member,
    sum_vanishes,
)
from . import _core

__all__ = [
    "BudgetError",
    "ConfigError",
    "ConsistencyError",
    "chartable_csv",
    "decide",
    "lam_leung_certifies_nonzero",
    "run",
    "semigroup_member",
    "sum_vanishes",
    "validate",
]


def _text(config):
    return config if isinstance(config, str) else json.dumps(config)


def run(config):
    """Run a job description (dict or JSON text) and return the report as a dict."""
    return json.loads(_core.run_job(_text(config)))


def validate(config):
    """Raise ConfigError unless the job description is valid."""
    _core.validate_config(_text(config))


def decide(config):
    """Verdicts for every irreducible character of the configured group."""
    cfg = json.loads(_text(config))
    cfg["tasks"] = sorted(set(cfg.get("tasks", [])) | {"decide"})
    return run(cfg)["decide"]


def chartable_csv(config):
    return _core.chartable_csv(_text(config))
