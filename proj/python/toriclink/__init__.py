"""Exact rational Betti numbers of compact toric varieties and the links
of their singular strata, computed from fan/cone data.

The heavy lifting happens in the C++ extension; this wrapper turns the
JSON report strings into plain dictionaries.
"""

import json as _json

from ._core import (
    ConsistencyError,
    InputError,
    link_betti,
    project_json,
    variety_betti,
    verify_file_json,
    verify_json,
)

__all__ = [
    "ConsistencyError",
    "InputError",
    "link_betti",
    "project",
    "variety_betti",
    "verify",
    "verify_file",
]


def verify(ambient_rank, rays, name=""):
    """Full identity report for a 4-dimensional cone, as a dict."""
    return _json.loads(verify_json(ambient_rank, rays, name))


def verify_file(path):
    """Full identity report for a cone JSON file, as a dict."""
    return _json.loads(verify_file_json(str(path)))


def project(ambient_rank, rays):
    """Projected base fan of the link circle bundle, as a dict."""
    return _json.loads(project_json(ambient_rank, rays))
