"""Mordell-Weil rank certificates for elliptic surfaces y^2 = x^3 + A(t) x + B(t)."""

import json
from pathlib import Path

from . import _core
from ._core import Error

__all__ = ["Error", "model_text", "fibers", "construct", "count", "certify", "verify"]


def model_text(a, b, label=""):
    head = f"label = {label}\n" if label else ""
    return f"{head}A = {a}\nB = {b}\n"


def _text(model):
    # a path, or model text with "A = ..." and "B = ..." lines
    if isinstance(model, Path) or "=" not in model:
        return Path(model).read_text()
    return model


def fibers(model):
    """Singular fibers of a model given as file path or model text."""
    return json.loads(_core.fibers(_text(model)))


def construct(a, b, c):
    """E_{a,b,c} in minimal form with its rank ledger."""
    return json.loads(_core.construct(str(a), str(b), str(c)))


def count(model, p, k=1, threads=0):
    return json.loads(_core.count(_text(model), p, k, threads))


def certify(model, p1=17, p2=19, threads=0, factor_timeout=30.0):
    return json.loads(_core.certify(_text(model), p1, p2, threads, factor_timeout))


def verify(certificate, factor_timeout=30.0):
    """Returns (passed, failed) lists of checks."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return _core.verify(certificate, factor_timeout)
