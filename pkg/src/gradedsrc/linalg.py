"""Exact dense linear algebra over the coefficient rings.

Matrices are lists of row lists.  Field computations use plain Gaussian
elimination through the ring descriptor protocol; integer kernels go through
the rational kernel with denominators cleared to primitive vectors.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .coeff import QQ, Integers


def rref(matrix, ring, ncols=None):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in matrix]
    nr = len(rows)
    nc = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    zero = ring.zero
    pivots = []
    r = 0
    for c in range(nc):
        pr = next((i for i in range(r, nr) if not ring.is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ring.inv(rows[r][c])
        rows[r] = [a if a == zero else ring.mul(inv, a) for a in rows[r]]
        piv = rows[r]
        for i in range(nr):
            if i != r and not ring.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [
                    a if b == zero else ring.sub(a, ring.mul(f, b))
                    for a, b in zip(rows[i], piv)
                ]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(matrix, ring, ncols=None) -> int:
    return len(rref(matrix, ring, ncols)[1])


def determinant(matrix, ring):
    """Determinant over a field by elimination."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    det = ring.one
    for c in range(n):
        pr = next((i for i in range(c, n) if not ring.is_zero(rows[i][c])), None)
        if pr is None:
            return ring.zero
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            det = ring.neg(det)
        det = ring.mul(det, rows[c][c])
        inv = ring.inv(rows[c][c])
        for i in range(c + 1, n):
            if not ring.is_zero(rows[i][c]):
                f = ring.mul(inv, rows[i][c])
                rows[i] = [ring.sub(a, ring.mul(f, b)) for a, b in zip(rows[i], rows[c])]
    return det


def kernel_basis(matrix, ring, ncols=None):
    """Exact basis of the right null space; empty list iff the map is injective.

    Over Z the rational kernel is computed and each basis vector cleared to a
    primitive integer vector with positive leading entry.
    """
    if isinstance(ring, Integers):
        rational = [[Fraction(a) for a in row] for row in matrix]
        return [clear_denominators(v) for v in kernel_basis(rational, QQ, ncols)]
    nc = ncols if ncols is not None else (len(matrix[0]) if matrix else 0)
    rows, pivots = rref(matrix, ring, nc)
    pivot_set = set(pivots)
    basis = []
    for free in range(nc):
        if free in pivot_set:
            continue
        v = [ring.zero] * nc
        v[free] = ring.one
        for i, c in enumerate(pivots):
            v[c] = ring.neg(rows[i][free])
        basis.append(v)
    return basis


def clear_denominators(vec):
    """Primitive integer vector proportional to a rational one, leading entry > 0."""
    mult = lcm(*(f.denominator for f in vec)) if vec else 1
    ints = [int(f * mult) for f in vec]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    lead = next((a for a in ints if a != 0), 0)
    if lead < 0:
        ints = [-a for a in ints]
    return ints
