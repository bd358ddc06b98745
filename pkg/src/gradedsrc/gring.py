"""Group-ring elements plus the two graded fixtures.

A GRElement is a finite formal sum over canonical group-element keys with
nonzero coefficients from one of the exact base rings.  The fixtures are the
sign-graded ring Z[sqrt(-5)] (+) its ideal (1+sqrt(-5), 3), and the ring of
polynomials over ZF_2 with integer constant term.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coeff as cf
from .coeff import ZSQRT5, ideal_membership_I
from .errors import InexactDivision, MixedRings
from .groups import FiniteSubset, FreeGroup


class GroupRing:
    """Descriptor for a group ring: group + coefficient ring."""

    def __init__(self, group, coefficients):
        self.group = group
        self.coeff = coefficients

    def zero(self) -> "GRElement":
        return GRElement(self, {})

    def one(self) -> "GRElement":
        return self.delta(self.group.identity)

    def delta(self, g, c=None) -> "GRElement":
        c = self.coeff.one if c is None else c
        if self.coeff.is_zero(c):
            return self.zero()
        return GRElement(self, {g: c})

    def from_terms(self, pairs) -> "GRElement":
        terms = {}
        for g, c in pairs:
            acc = terms.get(g, self.coeff.zero)
            terms[g] = self.coeff.add(acc, c)
        return GRElement(self, {g: c for g, c in terms.items() if not self.coeff.is_zero(c)})

    def from_int(self, n: int) -> "GRElement":
        return self.delta(self.group.identity, self.coeff.coerce(n))

    def elem_to_json(self, x: "GRElement"):
        keys = sorted(x.terms, key=self.group.sort_key)
        return [[self.group.elem_to_json(g), self.coeff.to_json(x.terms[g])] for g in keys]

    def elem_from_json(self, obj) -> "GRElement":
        return self.from_terms(
            (self.group.elem_from_json(g), self.coeff.from_json(c)) for g, c in obj
        )

    def __eq__(self, other):
        return (
            type(other) is GroupRing and other.group == self.group and other.coeff == self.coeff
        )

    def __hash__(self):
        return hash(("gring", self.group, self.coeff))

    def __repr__(self):
        return f"GroupRing({self.group!r}, {self.coeff!r})"


class GRElement:
    """Finite formal sum; zero coefficients are never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GroupRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def _same_ring(self, other):
        if not isinstance(other, GRElement) or other.ring != self.ring:
            raise MixedRings("group-ring operands from different rings")

    def __add__(self, other):
        self._same_ring(other)
        R = self.ring.coeff
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = R.add(out.get(g, R.zero), c)
            if R.is_zero(s):
                out.pop(g, None)
            else:
                out[g] = s
        return GRElement(self.ring, out)

    def __neg__(self):
        R = self.ring.coeff
        return GRElement(self.ring, {g: R.neg(c) for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same_ring(other)
        G, R = self.ring.group, self.ring.coeff
        out = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                k = G.mul(g, h)
                s = R.add(out.get(k, R.zero), R.mul(c, d))
                if R.is_zero(s):
                    out.pop(k, None)
                else:
                    out[k] = s
        return GRElement(self.ring, out)

    def scale(self, c) -> "GRElement":
        R = self.ring.coeff
        out = {}
        for g, x in self.terms.items():
            s = R.mul(c, x)
            if not R.is_zero(s):
                out[g] = s
        return GRElement(self.ring, out)

    def __eq__(self, other):
        return (
            isinstance(other, GRElement)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def component(self, g):
        """Homogeneous component r_g, defaulting to zero."""
        return self.terms.get(g, self.ring.coeff.zero)

    def support(self) -> FiniteSubset:
        return FiniteSubset.of(self.ring.group, self.terms.keys())

    def coeff_sum(self):
        """Image under the augmentation map."""
        R = self.ring.coeff
        acc = R.zero
        for c in self.terms.values():
            acc = R.add(acc, c)
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=self.ring.group.sort_key)
        return " + ".join(f"{self.terms[g]!r}*d({g})" for g in keys)


def homogeneous_component(x: GRElement, g):
    return x.component(g)


def support(x: GRElement) -> FiniteSubset:
    return x.support()


# ---------------------------------------------------------------------------
# fixture: Z[sqrt(-5)] (+) I, graded by {+1, -1}

PHI_DIVISOR = (2, -1)  # 2 - sqrt(-5); I^2 is the principal ideal it generates


@dataclass(frozen=True)
class SignGradedElement:
    """(s, x) in S (+) I with s, x in Z[sqrt(-5)] and x in the ideal."""

    s: tuple
    x: tuple

    def __post_init__(self):
        if not ideal_membership_I(self.x):
            raise InexactDivision(f"{self.x} lies outside the ideal (1+sqrt(-5), 3)")


SG_ONE = SignGradedElement((1, 0), (0, 0))


def sign_graded_add(u: SignGradedElement, v: SignGradedElement) -> SignGradedElement:
    return SignGradedElement(ZSQRT5.add(u.s, v.s), ZSQRT5.add(u.x, v.x))


def sign_graded_neg(u: SignGradedElement) -> SignGradedElement:
    return SignGradedElement(ZSQRT5.neg(u.s), ZSQRT5.neg(u.x))


def sign_graded_mul(u: SignGradedElement, v: SignGradedElement) -> SignGradedElement:
    """(s,x)(s',x') = (ss' + xx'/(2-sqrt(-5)), xs' + sx'); the division is exact
    because xx' lies in the square of the ideal."""
    phi = ZSQRT5.divexact(ZSQRT5.mul(u.x, v.x), PHI_DIVISOR)
    s = ZSQRT5.add(ZSQRT5.mul(u.s, v.s), phi)
    x = ZSQRT5.add(ZSQRT5.mul(u.x, v.s), ZSQRT5.mul(u.s, v.x))
    return SignGradedElement(s, x)


def sign_graded_is_unit(u: SignGradedElement) -> bool:
    """Unit test via the determinant of multiplication on the rank-4 Z-lattice.

    The ring is commutative, so (s,x) is a unit iff multiplication by it is a
    unimodular map of the underlying lattice Z^2 (+) I.
    """
    lattice = [
        SignGradedElement((1, 0), (0, 0)),
        SignGradedElement((0, 1), (0, 0)),
        SignGradedElement((0, 0), (3, 0)),
        SignGradedElement((0, 0), (1, 1)),
    ]
    cols = []
    for b in lattice:
        p = sign_graded_mul(u, b)
        # coordinates in the basis {(1,0)}, {(0,1)}, {(3,0)}, {(1,1)} of S (+) I
        a, bb = p.s
        c, d = p.x
        cols.append([a, bb, (c - d) // 3, d])
    det = _det4(cols)
    return det in (1, -1)


def _det4(cols):
    n = len(cols)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        total = 0
        for j in range(len(m)):
            if m[0][j]:
                minor = [r[:j] + r[j + 1 :] for r in m[1:]]
                total += (-1) ** j * m[0][j] * det(minor)
        return total

    return det(rows)


# ---------------------------------------------------------------------------
# fixture: polynomials over ZF_2 with integer constant term


class IntConstPolyRing:
    """Polynomials over S = ZF_2 whose constant term is an integer multiple of 1.

    Graded by Z with degree-0 component Z and every negative component zero.
    """

    def __init__(self, rank: int = 2):
        self.base = GroupRing(FreeGroup(rank), cf.ZZ)

    def make(self, coeffs) -> tuple:
        """Validate and trim a coefficient list (ascending degree)."""
        coeffs = list(coeffs)
        if coeffs:
            const = coeffs[0]
            if any(g != self.base.group.identity for g in const.terms):
                raise ValueError("constant term must be an integer multiple of 1")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        return tuple(coeffs)

    def zero(self):
        return ()

    def one(self):
        return (self.base.one(),)

    def add(self, f, g):
        n = max(len(f), len(g))
        zero = self.base.zero()
        f = tuple(f) + (zero,) * (n - len(f))
        g = tuple(g) + (zero,) * (n - len(g))
        return self.make(a + b for a, b in zip(f, g))

    def mul(self, f, g):
        if not f or not g:
            return ()
        out = [self.base.zero()] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
        return self.make(out)

    def component(self, f, k: int):
        if k < 0 or k >= len(f):
            return self.base.zero()
        return f[k]


# ---------------------------------------------------------------------------
# strong-grading witnesses and truncated non-zero-divisor checks


@dataclass
class WitnessReport:
    ok: bool
    grade: object
    witness: list | None
    reason: str


def strongly_graded_check(fixture, g) -> WitnessReport:
    """Produce and verify a witness for 1 in R_g R_{g^-1} (Prop-style check)."""
    if isinstance(fixture, GroupRing):
        G = fixture.group
        u, v = fixture.delta(g), fixture.delta(G.inv(g))
        ok = (u * v) == fixture.one()
        return WitnessReport(ok, g, [(u, v)], "delta(g) * delta(g^-1) = 1")
    if isinstance(fixture, str) and fixture == "example-sign-graded":
        if g == 1:
            return WitnessReport(True, g, [(SG_ONE, SG_ONE)], "1 * 1 = 1")
        if g == -1:
            pairs = [
                (SignGradedElement((0, 0), (3, 0)), SignGradedElement((0, 0), (2, -1))),
                (SignGradedElement((0, 0), (1, 1)), SignGradedElement((0, 0), (1, 1))),
            ]
            total = SignGradedElement((0, 0), (0, 0))
            for u, v in pairs:
                total = sign_graded_add(total, sign_graded_mul(u, v))
            ok = total == SG_ONE
            return WitnessReport(ok, g, pairs, "3*(2-sqrt(-5)) + (1+sqrt(-5))^2 over 2-sqrt(-5)")
        return WitnessReport(False, g, None, "grading group is {+1, -1}")
    if isinstance(fixture, IntConstPolyRing):
        if g == 0:
            one = fixture.one()
            return WitnessReport(True, g, [(one, one)], "R_0 = Z contains 1")
        return WitnessReport(False, g, None, "every negative component is zero")
    raise TypeError(f"unsupported fixture {fixture!r}")


def homog_nzd_check(ring: GroupRing, r: GRElement, radius: int) -> bool:
    """Left multiplication by r has zero kernel on elements supported in
    ball(radius).  A truncated certificate, not a proof for the whole ring."""
    if r.is_zero():
        return False
    from .srcsolve import truncated_kernel

    report = truncated_kernel([[r]], radius)
    return not report.basis
