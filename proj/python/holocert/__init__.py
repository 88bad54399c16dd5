"""Exact certification of holonomy rigidity for quadratic foliations.

Parameters are dicts in the same shape as the CLI parameter files, e.g.
``{"lambda1": "2-1i", "lambda2": "0+2i", "alpha": ["1", "0", "0"]}``.
"""

import json

from ._core import (
    ConfigError,
    GaussianRational,
    GenericityError,
    HolocertError,
    IntegrationError,
    ParseError,
)
from . import _core

TEST_POINT = {"lambda1": "2-1i", "lambda2": "0+2i", "alpha": ["1", "0", "0"]}

__all__ = [
    "ConfigError",
    "GaussianRational",
    "GenericityError",
    "HolocertError",
    "IntegrationError",
    "ParseError",
    "TEST_POINT",
    "certify",
    "certify_text",
    "conditions",
    "expand",
    "genericity",
    "verify_numeric",
]


def _text(params):
    return params if isinstance(params, str) else json.dumps(params)


def genericity(params):
    return json.loads(_core.genericity(_text(params)))


def expand(params, dmax=6):
    return json.loads(_core.expand(_text(params), dmax))


def conditions(params, dmax=6):
    return json.loads(_core.conditions(_text(params), dmax))


def certify_text(params, numeric=False, seed=1, radius=0.5, rtol=1e-10):
    """Canonical certificate JSON, byte-identical to the CLI output."""
    return _core.certify(_text(params), numeric, seed, radius, rtol)


def certify(params, numeric=False, seed=1, radius=0.5, rtol=1e-10):
    return json.loads(certify_text(params, numeric, seed, radius, rtol))


def verify_numeric(params, seed=1, radius=0.5, rtol=1e-10):
    return json.loads(_core.verify_numeric(_text(params), seed, radius, rtol))
