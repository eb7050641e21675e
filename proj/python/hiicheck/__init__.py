"""Exact formal degree checks for principal series blocks of split p-adic groups.

Every entry point takes the same JSON documents as the ``hiicheck`` command
line tool (as a dict, a JSON string, or a path) and returns a dict.
"""

import json
import os

from . import _core

__all__ = ["HiiError", "analyze", "gamma", "hii_rhs", "chain", "verify"]


class HiiError(RuntimeError):
    """Library error; ``kind`` is the error name, e.g. ``"NotDiscrete"``."""

    def __init__(self, message):
        super().__init__(message)
        self.kind = message.split(":", 1)[0]


def _load(doc):
    if isinstance(doc, (dict, list)):
        return json.dumps(doc)
    if isinstance(doc, os.PathLike) or (isinstance(doc, str) and os.path.isfile(doc)):
        with open(doc) as f:
            return f.read()
    return doc


def _call(f, *args, **kwargs):
    try:
        return json.loads(f(*args, **kwargs))
    except _core.HiiError as e:
        raise HiiError(str(e)) from None


def analyze(block):
    """Conductors, Phi_chi, the endoscopic datum, C_chi and volumes."""
    return _call(_core.analyze, _load(block))


def gamma(parameter):
    """Strand table, L-values and |gamma(0)|^2 of the adjoint representation."""
    return _call(_core.gamma, _load(parameter))


def hii_rhs(block):
    """Squared right-hand side of the formal degree identity."""
    return _call(_core.hii_rhs, _load(block))


def chain(block):
    """Clause-by-clause check of the reduction to the endoscopic group."""
    return _call(_core.chain, _load(block))


def verify(max_rank=2, lattices=("sc", "ad"), trials=50, seed=7, parallel=True):
    return _call(_core.verify, max_rank, list(lattices), trials, seed, parallel)
