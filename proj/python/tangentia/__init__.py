"""Exact projective duality and tangency computations."""

import json

from ._core import (
    Error,
    Ideal,
    InputError,
    ParseError,
    Polynomial,
    ProjScheme,
    Ring,
    TimeoutError,
    bidual_check,
    bitangent_osculating,
    dual_variety,
    projective,
    r_of,
    ring,
    secant_variety,
    tangency_scheme,
    veronese_cone_stratum,
)
from ._core import run_source as _run_source


def run(source, seed=42, timeout=None):
    """Run a script; returns (records, exit_code, error) with records as dicts."""
    records, code, error = _run_source(source, seed, timeout)
    return [json.loads(r) for r in records], code, error


__all__ = [
    "Error", "Ideal", "InputError", "ParseError", "Polynomial", "ProjScheme", "Ring",
    "TimeoutError", "bidual_check", "bitangent_osculating", "dual_variety", "projective",
    "r_of", "ring", "run", "secant_variety", "tangency_scheme", "veronese_cone_stratum",
]
