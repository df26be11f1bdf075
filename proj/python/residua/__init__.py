"""Residual cosets of shifted root-hyperplane arrangements.

Exact enumeration of the residual flats of {alpha(v) = k_alpha}, Weyl orbit
grouping, verification checks, parameter scans, weighted diagrams, and the
rank-1 spectral decomposition. Computation happens in the C++ extension;
this wrapper turns its JSON artifacts into plain dicts. Rational values
stay "p/q" strings so nothing is rounded; feed them to fractions.Fraction
when you want arithmetic.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._residua import (
    ConfigError,
    DomainError,
    ResourceError,
    cross_check_support,
    eta,
    root_system_info,
    trace_of_one,
)
from . import _residua as _core

__all__ = [
    "ConfigError",
    "DomainError",
    "ResourceError",
    "cross_check_support",
    "density_csv",
    "diff_oracle",
    "dynkin",
    "enumerate_csv",
    "enumerate_table",
    "eta",
    "root_system_info",
    "scan",
    "spectrum",
    "trace_of_one",
    "verify",
]


def _params_arg(params):
    if params is None:
        return {"all": "1"}
    out = {}
    for name, value in params.items():
        if isinstance(value, float):
            value = _Fraction(value).limit_denominator(10**12)
        out[str(name)] = str(value)
    return out


def _rat_arg(value):
    if isinstance(value, float):
        value = _Fraction(value).limit_denominator(10**12)
    return str(value)


def enumerate_table(type, params=None, **kwargs):
    """Residual orbit table as a dict; see the JSON schema in the README."""
    return _json.loads(_core.enumerate_json(type, _params_arg(params), **kwargs))


def enumerate_csv(type, params=None, **kwargs):
    """Residual orbit table as CSV text."""
    return _core.enumerate_csv(type, _params_arg(params), **kwargs)


def verify(type, params=None, checks=(), **kwargs):
    """Verification report as a dict; report["all_passed"] is the verdict."""
    return _json.loads(_core.verify_json(type, _params_arg(params), list(checks), **kwargs))


def scan(type, ratios, **kwargs):
    """Parameter scan report as a dict (points, walls, segments)."""
    return _json.loads(_core.scan_json(type, [_rat_arg(r) for r in ratios], **kwargs))


def dynkin(type, fixtures_path, params=None, **kwargs):
    """Weighted diagrams plus orbit count comparison as a dict."""
    if params is None:
        params = {"all": "2"}
    return _json.loads(_core.dynkin_json(type, _params_arg(params), str(fixtures_path), **kwargs))


def spectrum(q, samples=1024):
    """Rank-1 spectral decomposition as a dict; q rational (str/int/Fraction)."""
    return _json.loads(_core.spectrum_json(_rat_arg(q), samples))


def density_csv(q, samples=1024):
    """Unit-circle density samples as CSV text."""
    return _core.density_csv(_rat_arg(q), samples)


def diff_oracle(type, params=None, **kwargs):
    """Set difference against the brute-force oracle as a dict."""
    return _json.loads(_core.diff_oracle_json(type, _params_arg(params), **kwargs))
