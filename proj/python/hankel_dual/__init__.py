"""Dual Bessel-integral catalog and verification harness."""

import json

from ._core import (
    SCHEMA_VERSION,
    ConstraintError,
    DomainError,
    Error,
    ParameterError,
    UnknownIdError,
    UsageError,
    bessel_i,
    bessel_j,
    bessel_k,
    bessel_y,
    bessel_zero,
    check_seed,
    entry_ids,
    gamma,
    heron_area,
    metadata_json,
    seed_ids,
    struve_h,
    verify_entry,
)
from ._core import run as _run


def metadata():
    """Catalog metadata as a dict."""
    return json.loads(metadata_json())


def run(config="", jobs=1):
    """Run the harness; `config` uses the run-configuration file grammar."""
    return json.loads(_run(config, jobs))


__all__ = [
    "SCHEMA_VERSION",
    "ConstraintError",
    "DomainError",
    "Error",
    "ParameterError",
    "UnknownIdError",
    "UsageError",
    "bessel_i",
    "bessel_j",
    "bessel_k",
    "bessel_y",
    "bessel_zero",
    "check_seed",
    "entry_ids",
    "gamma",
    "heron_area",
    "metadata",
    "metadata_json",
    "run",
    "seed_ids",
    "struve_h",
    "verify_entry",
]
