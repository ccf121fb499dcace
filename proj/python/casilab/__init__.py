"""Exact Lie-algebra invariants, contractions and missing-label operators.

The heavy lifting lives in the compiled extension; this package re-exports
it and adds a couple of file helpers.
"""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import (
    LieAlgebra,
    ChainSpec,
    MatrixTemplate,
    Poly,
    UEElement,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")]


def load_algebra(path):
    """Reads an algebra JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return LieAlgebra.from_json(fh.read())


def load_chain(path):
    with open(path, "r", encoding="utf-8") as fh:
        return ChainSpec.from_json(fh.read())


def load_poly(path):
    with open(path, "r", encoding="utf-8") as fh:
        return Poly.from_json(fh.read())


def load_template(path):
    with open(path, "r", encoding="utf-8") as fh:
        return MatrixTemplate.from_json(fh.read())


def report_dict(report_json):
    """Parses a pipeline report JSON string into a dict."""
    return _json.loads(report_json)
