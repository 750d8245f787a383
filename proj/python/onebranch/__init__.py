"""Ideal classes of one-branch singularities inside K[[t]].

Generators are series strings such as ``"t^5"`` or ``'{"5":1,"6":2}'``; a single
comma-separated string is split for you. Results are plain Python objects.
"""

import json

from . import _core
from ._core import ParseError, PrecisionExhausted

__all__ = [
    "classify",
    "end_chain",
    "isomorphic",
    "enumerate_classes",
    "verify",
    "suites",
    "ParseError",
    "PrecisionExhausted",
]

suites = list(_core.suites)


def _gens(gens):
    if isinstance(gens, str):
        return _core.split_generators(gens)
    return list(gens)


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def classify(gens, field=None, precision=64, char=0):
    """Semigroup, conductor, valuation vector, type and the pa <= 2 verdict."""
    if field is None:
        field = "Q" if char == 0 else f"F{char}"
    return json.loads(_core.classify(_gens(gens), field, precision, char))


def end_chain(gens, field="F3", precision=64):
    """S followed by End(rad S), End(rad End(rad S)), ... up to the normalization."""
    return json.loads(_core.end_chain(_gens(gens), field, precision))


def isomorphic(a, b, gens=None, order=None, field="F3", precision=64):
    """Isomorphism test of two ideals given as span documents (dict or JSON text)."""
    if gens is None and order is None:
        raise ValueError("gens or order is required")
    out = _core.isomorphic(
        _text(a),
        _text(b),
        _gens(gens) if gens is not None else [],
        _text(order) if order is not None else None,
        field,
        precision,
    )
    return json.loads(out)


def enumerate_classes(gens, field="F3", precision=64, jobs=1):
    """All ideal classes over F_p as a list of rows; raises if the cascade saw collisions."""
    text, collisions = _core.enumerate(_gens(gens), field, precision, jobs, "json")
    if collisions:
        raise RuntimeError("class collisions: " + "; ".join(collisions))
    return json.loads(text)


def verify(suite="all", field="F3", precision=64, jobs=1):
    """Run verification suites; one report dict per suite."""
    return json.loads(_core.verify(suite, field, precision, jobs))
