"""Exact arithmetic in level-l quasisymmetric functions, noncommutative symmetric functions and FQSym.

Elements are dicts mapping an index (a tuple of columns, each a tuple of l naturals) to a Fraction.
Threshold vectors k use None or math.inf for an infinite entry.
"""

import json
import math
from fractions import Fraction

from . import _core
from ._core import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "qsym_convert",
    "qsym_mul",
    "qsym_comul",
    "qsym_antipode",
    "nsym_convert",
    "nsym_mul",
    "nsym_comul",
    "nsym_antipode",
    "pair",
    "eval_functional",
    "theta",
    "peak_function",
    "hilbert",
    "membership",
    "lyndon",
    "poset_f",
    "poset_is_k_eulerian",
    "fqsym_mul",
]


def _level(elem, level):
    if level is not None:
        return level
    for idx in elem:
        if idx:
            return len(idx[0])
    raise ValueError("level cannot be inferred from an element without columns; pass level=")


def _out(terms):
    return {tuple(tuple(c) for c in idx): Fraction(coef) for idx, coef in terms}


def _in(elem):
    return [([list(c) for c in idx], str(Fraction(coef))) for idx, coef in elem.items()]


def _k(k):
    return [None if x is None or x == math.inf else int(x) for x in k]


def qsym_convert(elem, src, dst, level=None):
    return _out(_core.qsym_convert(_in(elem), _level(elem, level), src, dst))


def qsym_mul(a, b, basis="M", level=None):
    return _out(_core.qsym_mul(_in(a), _in(b), _level(a, level), basis))


def qsym_comul(a, level=None):
    """Coproduct of an element given in the M basis; keys are pairs of indices."""
    terms = _core.qsym_comul(_in(a), _level(a, level))
    return {(tuple(map(tuple, x)), tuple(map(tuple, y))): Fraction(c) for x, y, c in terms}


def qsym_antipode(a, basis="M", level=None):
    return _out(_core.qsym_antipode(_in(a), _level(a, level), basis))


def nsym_convert(elem, src, dst, level=None):
    return _out(_core.nsym_convert(_in(elem), _level(elem, level), src, dst))


def nsym_mul(a, b, basis="S", level=None):
    return _out(_core.nsym_mul(_in(a), _in(b), _level(a, level), basis))


def nsym_comul(a, level=None):
    """Coproduct of an element given in the S basis; keys are pairs of indices."""
    terms = _core.nsym_comul(_in(a), _level(a, level))
    return {(tuple(map(tuple, x)), tuple(map(tuple, y))): Fraction(c) for x, y, c in terms}


def nsym_antipode(a, basis="S", level=None):
    return _out(_core.nsym_antipode(_in(a), _level(a, level), basis))


def pair(t, a, t_basis="S", a_basis="M", level=None):
    return Fraction(_core.pair(_in(t), t_basis, _in(a), a_basis, _level(a, level)))


def eval_functional(name, a, basis="M", k=None, level=None):
    return Fraction(_core.eval_functional(name, _in(a), _level(a, level), basis, None if k is None else _k(k)))


def theta(a, basis="F", level=None):
    """Descents-to-peaks map; the result is in the M basis."""
    return _out(_core.theta(_in(a), _level(a, level), basis))


def peak_function(S, u, level):
    return _out(_core.peak_function(set(S), list(u), level))


def hilbert(k, max_weight, mode="closed"):
    """Dimensions of the odd subalgebra by total weight 0..max_weight."""
    return _core.hilbert(_k(k), max_weight, mode)


def membership(a, k, basis="M", parity="odd", level=None):
    return _core.membership(_in(a), _level(a, level), basis, _k(k), parity)


def lyndon(level, weight):
    return [tuple(map(tuple, idx)) for idx in _core.lyndon(level, weight)]


def poset_f(poset):
    """Flag quasisymmetric function of a poset given as the CLI's JSON document (dict or text)."""
    doc = poset if isinstance(poset, str) else json.dumps(poset)
    return _out(_core.poset_f(doc))


def poset_is_k_eulerian(poset, k):
    doc = poset if isinstance(poset, str) else json.dumps(poset)
    return _core.poset_is_k_eulerian(doc, _k(k))


def fqsym_mul(a, b):
    """Product of FQSym elements given as the CLI's JSON documents; returns a dict."""
    return json.loads(_core.fqsym_mul(json.dumps(a), json.dumps(b)))
