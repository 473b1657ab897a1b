"""Star products of elementary multisymmetric functions.

Monomial lists may be given as "x^2y,x^3y" or ["x^2y", "x^3y"].
"""

import json as _json

from . import _qstar
from ._qstar import (
    b_length,
    b_list,
    decode,
    encode,
    enumerate_a,
    enumerate_l,
    enumerate_q,
    lift_all,
    parse_monomial,
    star_pair,
    word_stats,
)

__all__ = [
    "b_length",
    "b_list",
    "decode",
    "encode",
    "enumerate_a",
    "enumerate_l",
    "enumerate_q",
    "lift_all",
    "parse_monomial",
    "star_pair",
    "star_product",
    "star_product_json",
    "verify",
    "word_stats",
]


def _monomials(value):
    return value if isinstance(value, str) else ",".join(value)


def star_product(alpha, beta, p, q, n, path="lift", threads=1):
    """Text rendering, e.g. 'e_(1)(xy) + e_(1)(1) h'."""
    return _qstar.star_product(alpha, beta, _monomials(p), _monomials(q), n, path, "text", threads)


def star_product_json(alpha, beta, p, q, n, path="lift", threads=1):
    """The JSON document as a dict."""
    return _json.loads(_qstar.star_product(alpha, beta, _monomials(p), _monomials(q), n, path, "json", threads))


def verify(alpha, beta, p, q, n, drop_scalars=False, threads=1):
    return _qstar.verify(alpha, beta, _monomials(p), _monomials(q), n, drop_scalars, threads)
