"""Static E6 root and weight data plus the combinatorial geometry on top of it.

Vectors are plain 6-tuples of ints.  Two bases are in play throughout:

* root basis -- coordinates with respect to the simple roots a1..a6;
* weight basis -- Dynkin labels, coordinates with respect to the fundamental
  weights l1..l6.

The Cartan matrix converts root-basis to weight-basis coordinates; its exact
rational inverse converts back.  All derived data is rebuilt and self-checked
at import time rather than hard-coded.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import InternalInconsistencyError, NonIntegralError

Vec = tuple[int, int, int, int, int, int]

CARTAN: tuple[Vec, ...] = (
    (2, 0, -1, 0, 0, 0),
    (0, 2, 0, -1, 0, 0),
    (-1, 0, 2, -1, 0, 0),
    (0, -1, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, -1, 2),
)


def _invert_exactly(mat: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


CARTAN_INVERSE: tuple[tuple[Fraction, ...], ...] = _invert_exactly(CARTAN)

# 3 * A^-1 is integral for E6; the scaled copy keeps hot paths in int arithmetic
CARTAN_INVERSE_X3: tuple[Vec, ...] = tuple(
    tuple(int(3 * x) for x in row) for row in CARTAN_INVERSE
)

for _i in range(6):
    for _j in range(6):
        if sum(CARTAN[_i][_k] * CARTAN_INVERSE[_k][_j] for _k in range(6)) != int(_i == _j):
            raise InternalInconsistencyError("Cartan matrix inverse is wrong")
        if 3 * CARTAN_INVERSE[_i][_j] != CARTAN_INVERSE_X3[_i][_j]:
            raise InternalInconsistencyError("Cartan inverse has a denominator not dividing 3")

# column sums of A^-1: height of each fundamental weight in the root basis
WEIGHT_HEIGHTS: Vec = tuple(int(sum(CARTAN_INVERSE[r][c] for r in range(6))) for c in range(6))


def height(v: Iterable[int]) -> int:
    """Height of a root-basis vector: the sum of its coordinates."""
    return sum(v)


def fundamental_weight(k: int) -> Vec:
    """Dynkin labels of the k-th fundamental weight, 1-based."""
    if not 1 <= k <= 6:
        raise ValueError(f"fundamental weight index out of range: {k}")
    return tuple(int(i == k - 1) for i in range(6))


def conjugate(w: Sequence[int]) -> Vec:
    """Apply the diagram symmetry: swap labels 1<->6 and 3<->5."""
    return (w[5], w[1], w[4], w[3], w[2], w[0])


def _generate_positive_roots() -> tuple[Vec, ...]:
    # Closure of the simple roots under addition, validated by the Cartan
    # pairing: in a simply-laced system g + a_i is a root iff (g, a_i) = -1.
    simple = [fundamental_weight(i + 1) for i in range(6)]
    roots: list[Vec] = list(simple)
    seen = set(roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for g in frontier:
            for i in range(6):
                if sum(g[j] * CARTAN[j][i] for j in range(6)) == -1:
                    cand = tuple(g[j] + int(j == i) for j in range(6))
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
        roots.extend(nxt)
        frontier = nxt
    roots.sort(key=lambda r: (height(r), r))

    if len(roots) != 36:
        raise InternalInconsistencyError(f"expected 36 positive roots, got {len(roots)}")
    hist = [0] * 12
    for r in roots:
        hist[height(r)] += 1
    if hist[1:] != [6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1]:
        raise InternalInconsistencyError(f"positive-root height histogram is wrong: {hist[1:]}")
    if tuple(sum(r[i] for r in roots) for i in range(6)) != (16, 22, 30, 42, 30, 16):
        raise InternalInconsistencyError("positive roots do not sum to twice the Weyl vector")
    return tuple(roots)


_POSITIVE_ROOTS = _generate_positive_roots()

_WEYL_DENOMINATOR = 1
for _r in _POSITIVE_ROOTS:
    _WEYL_DENOMINATOR *= height(_r)


def positive_roots() -> list[Vec]:
    """The 36 positive roots in the root basis, sorted by height then lex."""
    return list(_POSITIVE_ROOTS)


def weyl_vector_in_root_basis() -> Vec:
    """The Weyl vector (half-sum of positive roots) in root-basis coordinates."""
    return tuple(s // 2 for s in (sum(r[i] for r in _POSITIVE_ROOTS) for i in range(6)))


def to_root_basis(w: Sequence[int]) -> Vec:
    """Convert Dynkin labels to root-basis coordinates, exactly.

    Raises NonIntegralError if w is not in the root lattice.
    """
    out = []
    for i in range(6):
        num = sum(CARTAN_INVERSE_X3[i][j] * w[j] for j in range(6))
        q, r = divmod(num, 3)
        if r:
            raise NonIntegralError(f"{tuple(w)} is not in the root lattice")
        out.append(q)
    return tuple(out)


def from_root_basis(v: Sequence[int]) -> Vec:
    """Convert root-basis coordinates to Dynkin labels."""
    return tuple(sum(CARTAN[i][j] * v[j] for j in range(6)) for i in range(6))


def inner_product(u: Sequence[int], v: Sequence[int]) -> Fraction:
    """Bilinear form on the weight lattice, (l_i, l_j) being the inverse Cartan."""
    num = sum(CARTAN_INVERSE_X3[i][j] * u[i] * v[j] for i in range(6) for j in range(6))
    return Fraction(num, 3)


def weight_height(w: Sequence[int]) -> int:
    """Height of a weight-basis vector read in the root basis, rounded to the
    integer dot product with the per-fundamental heights.

    Exact whenever w is in the root lattice; for general w the true height
    differs by a fractional class constant that cancels in differences, which
    is all the sort keys on hot paths need.
    """
    return sum(h * x for h, x in zip(WEIGHT_HEIGHTS, w))


def weyl_dimension(m: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight m."""
    m = _check_dominant(m)
    num = 1
    for r in _POSITIVE_ROOTS:
        num *= height(r) + sum(c * mi for c, mi in zip(r, m))
    q, rem = divmod(num, _WEYL_DENOMINATOR)
    if rem:
        raise InternalInconsistencyError(f"Weyl dimension of {m} is not an integer")
    return q


def _check_dominant(m: Sequence[int]) -> Vec:
    m = tuple(int(x) for x in m)
    if len(m) != 6 or any(x < 0 for x in m):
        raise ValueError(f"not a dominant weight: {m}")
    return m


_CARTAN_NP = np.array(CARTAN, dtype=np.int64)


@lru_cache(maxsize=512)
def _dominant_weights_below_cached(m: Vec) -> tuple[Vec, ...]:
    # Enumerate v >= 0 in the root basis with m - A v dominant.  Each
    # coordinate of v is bounded by the matching coordinate of m in the root
    # basis, so a box scan suffices; numpy chews through the box in chunks.
    bound = []
    for i in range(6):
        num = sum(CARTAN_INVERSE_X3[i][j] * m[j] for j in range(6))
        bound.append(num // 3)
    axes = [np.arange(b + 1, dtype=np.int64) for b in bound[1:]]
    flat = [g.ravel() for g in np.meshgrid(*axes, indexing="ij")]
    found: list[tuple[int, Vec]] = []
    for v0 in range(bound[0] + 1):
        cols = [np.full(flat[0].shape, v0, dtype=np.int64)] + flat
        labels = []
        ok = None
        for i in range(6):
            li = np.full(cols[0].shape, m[i], dtype=np.int64)
            for j in range(6):
                a = _CARTAN_NP[i, j]
                if a:
                    li = li - a * cols[j]
            labels.append(li)
            ok = (li >= 0) if ok is None else (ok & (li >= 0))
        idx = np.nonzero(ok)[0]
        for t in idx:
            mu = tuple(int(labels[i][t]) for i in range(6))
            ht = int(v0 + sum(int(c[t]) for c in cols[1:]))
            found.append((ht, mu))
    found.sort()
    return tuple(mu for _, mu in found)


def dominant_weights_below(m: Sequence[int]) -> list[Vec]:
    """All dominant weights mu with m - mu a non-negative sum of simple roots.

    Includes m itself; ordered by increasing height of m - mu, ties broken
    lexicographically on the Dynkin labels.
    """
    return list(_dominant_weights_below_cached(_check_dominant(m)))
