"""Graded matrix factorizations: MOY graph compilation, closures, Hecke checks.

The report functions return the same JSON structures as the ``gmf`` command
line tool, decoded to dicts, with an added ``"status"`` key
(``"ok"``, ``"partial"`` or ``"invariant"``). Malformed input raises ValueError.
"""

import json

from . import _gmf
from ._gmf import kl_element, power_sum_elem, rsk_shape, vanishing_predicate


def _decode(result):
    status, text = result
    out = json.loads(text)
    out["status"] = status
    return out


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def compile(graph, n=2, unit=0):
    """Compile a MOY graph (line format) or a braid word ``"m=2: s1"``."""
    return _decode(_gmf.compile(graph, n, unit))


def close(braid, n=2, unit=0, window=None, route="theorem"):
    """Closure homology H0, H1 of a braid word; route is theorem, direct or excluded."""
    return _decode(_gmf.close(braid, n, unit, window, route))


def verify_hecke(relations):
    return _decode(_gmf.verify_hecke(_text(relations)))


def verify_moy(relations, n=2, unit=0, certify=False):
    return _decode(_gmf.verify_moy(_text(relations), n, unit, certify))


def stabilize(spec):
    """``{"ring": {"generators": [...], "degrees": [...]}, "ideal": [...], "potential": "..."}``"""
    return _decode(_gmf.stabilize(_text(spec)))


def reduce(factorization):
    return _decode(_gmf.reduce(_text(factorization)))


__all__ = [
    "close",
    "compile",
    "kl_element",
    "power_sum_elem",
    "reduce",
    "rsk_shape",
    "stabilize",
    "vanishing_predicate",
    "verify_hecke",
    "verify_moy",
]
