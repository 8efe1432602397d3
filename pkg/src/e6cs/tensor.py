"""Clebsch-Gordan decomposition by coefficient peeling.

A product of characters is supported on dominant exponents below its top
weight, so walking the candidate list in increasing height of the drop from
the top guarantees that, when a candidate is reached, its residual coefficient
is exactly its multiplicity.  Subtracting that multiple of the candidate's
character and finishing with a zero residual is a complete correctness proof
for the series, which is why peeling failures are raised as hard errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import lattice
from .characters import character
from .errors import (InternalInconsistencyError, NegativeMultiplicityError,
                     NonzeroResidualError)
from .ring import SparsePolynomial


@dataclass(frozen=True)
class CGSeries:
    """A tensor-product decomposition: factor weights and term multiplicities."""

    factors: tuple[lattice.Vec, ...]
    terms: dict[lattice.Vec, int]

    @property
    def top(self) -> lattice.Vec:
        return tuple(sum(f[i] for f in self.factors) for i in range(6))

    def sorted_terms(self) -> list[tuple[lattice.Vec, int]]:
        top_h = lattice.weight_height(self.top)
        return sorted(self.terms.items(),
                      key=lambda item: (top_h - lattice.weight_height(item[0]), item[0]))

    def multiplicity(self, w: Sequence[int]) -> int:
        return self.terms.get(tuple(w), 0)

    def total_dimension(self) -> int:
        return sum(mult * lattice.weyl_dimension(w) for w, mult in self.terms.items())

    def to_json(self) -> dict:
        return {
            "factors": [list(f) for f in self.factors],
            "terms": [{"weight": list(w), "mult": m} for w, m in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CGSeries":
        factors = tuple(tuple(int(x) for x in f) for f in obj["factors"])
        terms = {tuple(int(x) for x in rec["weight"]): int(rec["mult"]) for rec in obj["terms"]}
        return cls(factors, terms)


def _peel(product: SparsePolynomial, factors: tuple[lattice.Vec, ...]) -> CGSeries:
    top = tuple(sum(f[i] for f in factors) for i in range(6))
    residual = dict(product.terms)
    out: dict[lattice.Vec, int] = {}
    for mu in lattice.dominant_weights_below(top):
        c = residual.get(mu, 0)
        if not c:
            continue
        if not isinstance(c, int) or c < 0:
            raise NegativeMultiplicityError(
                f"coefficient {c} at {mu} while peeling {' x '.join(map(str, factors))}")
        out[mu] = c
        for e, v in character(mu).poly.terms.items():
            s = residual.get(e, 0) - c * v
            if s:
                residual[e] = s
            else:
                residual.pop(e, None)
    if residual:
        raise NonzeroResidualError(
            f"residual has {len(residual)} terms after peeling {' x '.join(map(str, factors))}")
    series = CGSeries(factors, out)
    _check_series(series)
    return series


def _check_series(series: CGSeries) -> None:
    if series.terms.get(series.top) != 1:
        raise InternalInconsistencyError(
            f"top weight {series.top} does not appear with multiplicity 1")
    expected = 1
    for f in series.factors:
        expected *= lattice.weyl_dimension(f)
    if series.total_dimension() != expected:
        raise InternalInconsistencyError(
            f"dimension balance fails for {' x '.join(map(str, series.factors))}")


def tensor_decompose(m: Sequence[int], n: Sequence[int]) -> CGSeries:
    """Decompose the product of the irreducibles labelled m and n."""
    m = tuple(int(x) for x in m)
    n = tuple(int(x) for x in n)
    product = character(m).poly * character(n).poly
    return _peel(product, (m, n))


def monomial_decompose(exp: Sequence[int]) -> CGSeries:
    """Decompose the bare monomial z^exp, read as a product of fundamentals."""
    exp = tuple(int(x) for x in exp)
    if any(x < 0 for x in exp):
        raise ValueError(f"not a monomial exponent: {exp}")
    factors: list[lattice.Vec] = []
    for idx, p in enumerate(exp):
        factors.extend([lattice.fundamental_weight(idx + 1)] * p)
    if not factors:
        factors = [(0, 0, 0, 0, 0, 0)]
    return _peel(SparsePolynomial.monomial(exp), tuple(factors))


def series_z1_times_power(k: int, n: int) -> CGSeries:
    """Decompose z1 * chi(n * l_k) through the general peeling engine."""
    if not 1 <= k <= 6:
        raise ValueError(f"fundamental index out of range: {k}")
    if n < 1:
        raise ValueError(f"power must be positive: {n}")
    weight = tuple(n * int(i == k - 1) for i in range(6))
    product = SparsePolynomial.variable(1) * character(weight).poly
    return _peel(product, (lattice.fundamental_weight(1), weight))


def verify_orthogonality(i: int, j: int, k: int) -> bool:
    """Character inner-product identity: the multiplicity of l_k in l_i x l_j
    must equal the multiplicity of l_j in l_k x conj(l_i)."""
    li, lj, lk = (lattice.fundamental_weight(x) for x in (i, j, k))
    lhs = tensor_decompose(li, lj).multiplicity(lk)
    rhs = tensor_decompose(lk, lattice.conjugate(li)).multiplicity(lj)
    return lhs == rhs
