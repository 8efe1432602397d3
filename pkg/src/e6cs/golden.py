"""Loaders for the reference data files shipped with the package.

The JSON files hold the operator coefficient tables, the degree-2 and
degree-3 characters, the quadratic and cubic decomposition series and the
candidate table for the (l3, l4) product.  They are the fixed points the
verification suites compare freshly computed results against.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .lattice import Vec
from .ring import SparsePolynomial
from .tensor import CGSeries


def _read(name: str) -> object:
    return json.loads(resources.files("e6cs.data").joinpath(name).read_text())


@lru_cache(maxsize=None)
def characters_degree2() -> dict[Vec, SparsePolynomial]:
    return {tuple(rec["weight"]): SparsePolynomial.from_records(rec["terms"])
            for rec in _read("characters_degree2.json")}


@lru_cache(maxsize=None)
def characters_degree3() -> dict[Vec, SparsePolynomial]:
    return {tuple(rec["weight"]): SparsePolynomial.from_records(rec["terms"])
            for rec in _read("characters_degree3.json")}


@lru_cache(maxsize=None)
def series_quadratic() -> list[CGSeries]:
    return [CGSeries.from_json(rec) for rec in _read("series_quadratic.json")]


@lru_cache(maxsize=None)
def series_cubic() -> list[tuple[Vec, CGSeries]]:
    out = []
    for rec in _read("series_cubic.json"):
        out.append((tuple(rec["monomial"]), CGSeries.from_json(rec)))
    return out


@lru_cache(maxsize=None)
def tensor_candidates_l3_l4() -> list[tuple[Vec, int]]:
    return [(tuple(rec["weight"]), int(rec["dim"])) for rec in _read("tensor_candidates_l3_l4.json")]


@lru_cache(maxsize=None)
def all_characters() -> dict[Vec, SparsePolynomial]:
    """Degree <= 3 characters, completed with conjugates of the degree-3 list."""
    out = dict(characters_degree2())
    for w, poly in characters_degree3().items():
        out[w] = poly
        wc = (w[5], w[1], w[4], w[3], w[2], w[0])
        out.setdefault(wc, poly.conjugate_variables())
    return out
