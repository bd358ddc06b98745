"""Underdetermined linear systems over group rings: Folner lifting, exact
base-ring solving, assembly, verification, and truncated-kernel certificates.

Restricted to ordinary group rings, so every lifted entry is the bare
coefficient (a_ij)_{g f^-1}; the homogeneous units used in the general graded
argument are just the group elements themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .coeff import ExtField, Integers, PrimeField, Rationals
from .errors import EmptySupport, UnexpectedEmptyKernel
from .gring import GRElement, GroupRing
from .groups import (
    FiniteGroup,
    FiniteSubset,
    FreeAbelian,
    FreeGroup,
    ball,
    folner_search,
    product_set,
)
from .linalg import kernel_basis


@dataclass
class LinearSystem:
    """m x n coefficient grid over one group ring, m < n."""

    ring: GroupRing
    m: int
    n: int
    a: tuple  # tuple of m tuples of n GRElements

    def __post_init__(self):
        if not (0 < self.m < self.n):
            raise ValueError("need 0 < m < n")
        if len(self.a) != self.m or any(len(row) != self.n for row in self.a):
            raise ValueError("coefficient grid shape mismatch")
        for row in self.a:
            for x in row:
                if x.ring != self.ring:
                    raise ValueError("coefficient from a different ring")

    def union_support(self) -> FiniteSubset:
        els = set()
        for row in self.a:
            for x in row:
                els.update(x.terms)
        return FiniteSubset.of(self.ring.group, els)


@dataclass
class LiftedSystem:
    """The base-ring system indexed by SF x {1..m} rows and {1..n} x F columns."""

    matrix: list
    row_index: list  # (g, i) pairs, g-major
    col_index: list  # (j, f) pairs, f-major
    S: FiniteSubset
    F: FiniteSubset
    base_ring: object
    provenance: dict = field(default_factory=dict)


@dataclass
class SolutionVector:
    xs: tuple  # n GRElements
    verified: bool


def lift_system(sys: LinearSystem, F: FiniteSubset) -> LiftedSystem:
    """Entry at row (g, i), column (j, f) is the coefficient of g f^-1 in a_ij."""
    S = sys.union_support()
    if not len(S):
        raise EmptySupport("all coefficients are zero")
    G = sys.ring.group
    SF = product_set(S, F)
    row_index = [(g, i) for g in SF for i in range(sys.m)]
    col_index = [(j, f) for f in F for j in range(sys.n)]
    matrix = []
    for g, i in row_index:
        row = []
        for j, f in col_index:
            row.append(sys.a[i][j].component(G.mul(g, G.inv(f))))
        matrix.append(row)
    provenance = {
        "row_order": "group elements of SF in canonical order, then equation index",
        "col_order": "elements of F in canonical order, then unknown index",
        "S": [G.elem_to_json(g) for g in S],
        "F": [G.elem_to_json(f) for f in F],
    }
    return LiftedSystem(matrix, row_index, col_index, S, F, sys.ring.coeff, provenance)


def assemble_solution(sys: LinearSystem, kv, F: FiniteSubset) -> SolutionVector:
    """x_j = sum_f delta_f * x'_{jf} from a lifted kernel vector."""
    R = sys.ring
    terms = [[] for _ in range(sys.n)]
    for idx, (j, f) in enumerate([(j, f) for f in F for j in range(sys.n)]):
        c = kv[idx]
        if not R.coeff.is_zero(c):
            terms[j].append((f, c))
    xs = tuple(R.from_terms(t) for t in terms)
    if all(x.is_zero() for x in xs):
        raise AssertionError("zero assembly from a nonzero kernel vector")
    return SolutionVector(xs, verified=False)


def verify_solution(sys: LinearSystem, xs) -> bool:
    if all(x.is_zero() for x in xs):
        return False
    zero = sys.ring.zero()
    for i in range(sys.m):
        acc = zero
        for j in range(sys.n):
            acc = acc + sys.a[i][j] * xs[j]
        if not acc.is_zero():
            return False
    return True


def solve_src(sys: LinearSystem, budget: int = 64) -> SolutionVector:
    """Full Folner pipeline; the returned solution is verified by substitution."""
    G = sys.ring.group
    if not isinstance(G, (FreeAbelian, FiniteGroup, FreeGroup)):
        raise TypeError(f"unsupported group {G!r}")
    if not isinstance(sys.ring.coeff, (Rationals, Integers, PrimeField, ExtField)):
        raise TypeError(f"unsupported coefficient ring {sys.ring.coeff!r}")
    S = sys.union_support()
    if not len(S):
        xs = (sys.ring.one(),) + tuple(sys.ring.zero() for _ in range(sys.n - 1))
        return SolutionVector(xs, verified=True)
    ratio = Fraction(sys.n, sys.m)
    F = folner_search(G, S, ratio, budget)
    lifted = lift_system(sys, F)
    assert sys.m * len(product_set(S, F)) < sys.n * len(F)
    basis = kernel_basis(lifted.matrix, lifted.base_ring, ncols=len(lifted.col_index))
    if not basis:
        raise UnexpectedEmptyKernel("rank bound violated; logic fault")
    sol = assemble_solution(sys, basis[0], F)
    if not verify_solution(sys, sol.xs):
        raise AssertionError("assembled solution failed exact substitution")
    return SolutionVector(sol.xs, verified=True)


@dataclass
class TruncatedKernelReport:
    radius: int
    domain: FiniteSubset
    ncols: int
    rank: int
    basis: list  # list of n-tuples of GRElements


def truncated_kernel(a, radius: int) -> TruncatedKernelReport:
    """Kernel of x |-> (sum_j a_ij x_j)_i restricted to x_j supported in
    ball(radius).  An empty basis certifies injectivity up to the truncation."""
    m = len(a)
    n = len(a[0])
    ring = a[0][0].ring
    G = ring.group
    D = ball(G, radius)
    cols = [(j, f) for j in range(n) for f in D]
    # images of basis vectors, equation by equation
    images = []
    row_keys = []
    seen = set()
    for j, f in cols:
        img = [a[i][j] * ring.delta(f) for i in range(m)]
        images.append(img)
        for i in range(m):
            for g in img[i].terms:
                if (i, g) not in seen:
                    seen.add((i, g))
                    row_keys.append((i, g))
    row_keys.sort(key=lambda ig: (ig[0], G.sort_key(ig[1])))
    row_pos = {k: idx for idx, k in enumerate(row_keys)}
    R = ring.coeff
    matrix = [[R.zero] * len(cols) for _ in row_keys]
    for cidx, img in enumerate(images):
        for i in range(m):
            for g, c in img[i].terms.items():
                matrix[row_pos[(i, g)]][cidx] = c
    basis = kernel_basis(matrix, R, ncols=len(cols))
    out = []
    for v in basis:
        xs = []
        for j in range(n):
            chunk = v[j * len(D) : (j + 1) * len(D)]
            xs.append(ring.from_terms(zip(D, chunk)))
        out.append(tuple(xs))
    return TruncatedKernelReport(
        radius=radius,
        domain=D,
        ncols=len(cols),
        rank=len(cols) - len(out),
        basis=out,
    )


def intconst_truncated_kernel(poly_ring, a, max_degree: int, radius: int):
    """Truncated kernel for systems over the integer-constant-term polynomial
    ring, with coefficients taken from its degree-1 component S = ZF_2.

    Unknowns are polynomials of degree <= max_degree whose higher coefficients
    are supported in ball(radius); the constant term is an integer.  Returns
    (rank, ncols, basis) with basis entries as tuples of polynomial values.
    """
    base = poly_ring.base
    G = base.group
    m = len(a)
    n = len(a[0])
    D = list(ball(G, radius))
    # column layout: unknown j, degree d, then basis element (degree 0 has one)
    cols = []
    for j in range(n):
        cols.append((j, 0, G.identity))
        for d in range(1, max_degree + 1):
            for g in D:
                cols.append((j, d, g))
    row_keys = []
    row_pos = {}
    entries = []  # (row, col, coeff)
    for cidx, (j, d, g) in enumerate(cols):
        for i in range(m):
            prod = a[i][j] * base.delta(g)
            for h, c in prod.terms.items():
                key = (i, d + 1, h)
                if key not in row_pos:
                    row_pos[key] = len(row_keys)
                    row_keys.append(key)
                entries.append((row_pos[key], cidx, c))
    matrix = [[0] * len(cols) for _ in row_keys]
    for r, c, v in entries:
        matrix[r][c] = v
    basis = kernel_basis(matrix, Integers(), ncols=len(cols))
    out = []
    for v in basis:
        polys = []
        for j in range(n):
            coeffs = [base.zero()] * (max_degree + 1)
            for cidx, (jj, d, g) in enumerate(cols):
                if jj == j and v[cidx]:
                    coeffs[d] = coeffs[d] + base.delta(g, v[cidx])
            polys.append(poly_ring.make(coeffs))
        out.append(tuple(polys))
    return len(cols) - len(out), len(cols), out
