"""Exact coefficient rings.

Elements are plain hashable Python values (Fraction, int, tuple); the ring
descriptor objects below supply the arithmetic.  Descriptors compare equal
structurally, which is what the group-ring layer uses to detect mixing.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, InexactDivision, MixedRings, NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p, ascending coefficient tuples


def poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_add(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return poly_trim((x + y) % p for x, y in zip(a, b))


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_divmod(a, b, p):
    b = poly_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    a = list(poly_trim(a))
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(q), poly_trim(a)


def poly_mod(a, b, p):
    return poly_divmod(a, b, p)[1]


def _monic_polys(deg, p):
    for n in range(p**deg):
        cs = []
        m = n
        for _ in range(deg):
            cs.append(m % p)
            m //= p
        yield tuple(cs) + (1,)


def poly_is_irreducible(f, p) -> bool:
    f = poly_trim(f)
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(d, p):
            if not poly_mod(f, g, p):
                return False
    return True


# ---------------------------------------------------------------------------
# ring descriptors


class Rationals:
    """The field Q.  Values are Fraction (eagerly normalized)."""

    characteristic = 0
    degree = 1
    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, n):
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("1/0 in Q")
        return 1 / x

    def is_zero(self, x):
        return x == 0

    def to_json(self, x):
        return f"{x.numerator}/{x.denominator}"

    def from_json(self, obj):
        if isinstance(obj, str):
            num, den = obj.split("/")
            return Fraction(int(num), int(den))
        return Fraction(obj)

    def __eq__(self, other):
        return type(other) is Rationals

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class Integers:
    """The ring Z.  Values are int."""

    characteristic = 0
    degree = 1
    name = "Z"

    zero = 0
    one = 1

    def coerce(self, n):
        return int(n)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x in (1, -1):
            return x
        if x == 0:
            raise DivisionByZero("1/0 in Z")
        raise InexactDivision(f"{x} is not a unit of Z")

    def is_zero(self, x):
        return x == 0

    def to_json(self, x):
        return x

    def from_json(self, obj):
        return int(obj)

    def __eq__(self, other):
        return type(other) is Integers

    def __hash__(self):
        return hash("Z")

    def __repr__(self):
        return "Z"


class PrimeField:
    """F_p.  Values are int in [0, p)."""

    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, n):
        return int(n) % self.p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return -x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise DivisionByZero(f"1/0 in F_{self.p}")
        return pow(x, -1, self.p)

    def is_zero(self, x):
        return x % self.p == 0

    def elements(self):
        return range(self.p)

    def to_json(self, x):
        return [x]

    def from_json(self, obj):
        if isinstance(obj, list):
            (v,) = obj
            return v % self.p
        return int(obj) % self.p

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return self.name


class ExtField:
    """F_{p^k} as F_p[x]/(poly).  Values are coefficient tuples of length k."""

    def __init__(self, p: int, k: int, poly):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        poly = poly_trim(poly)
        if len(poly) != k + 1 or poly[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not poly_is_irreducible(poly, p):
            raise ValueError(f"{poly} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.poly = poly
        self.characteristic = p
        self.degree = k
        self.order = p**k
        self.name = f"F{p}^{k}"
        self.zero = (0,) * k
        self.one = ((1,) + (0,) * (k - 1)) if k else ()

    def coerce(self, n):
        return ((int(n) % self.p),) + (0,) * (self.k - 1)

    def _pad(self, cs):
        return tuple(cs) + (0,) * (self.k - len(cs))

    def add(self, x, y):
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple((a - b) % self.p for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a % self.p for a in x)

    def mul(self, x, y):
        return self._pad(poly_mod(poly_mul(x, y, self.p), self.poly, self.p))

    def inv(self, x):
        if self.is_zero(x):
            raise DivisionByZero(f"1/0 in {self.name}")
        # extended Euclid in F_p[x]
        r0, r1 = self.poly, poly_trim(x)
        s0, s1 = (), (1,)
        while r1:
            q, r = poly_divmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, poly_add(s0, poly_mul(tuple(-c % self.p for c in q), s1, self.p), self.p)
        lead_inv = pow(r0[-1], -1, self.p)
        return self._pad(tuple(c * lead_inv % self.p for c in s0))

    def is_zero(self, x):
        return all(c == 0 for c in x)

    def from_index(self, n: int):
        """Element with coefficient digits of n in base p, least significant first."""
        cs = []
        for _ in range(self.k):
            cs.append(n % self.p)
            n //= self.p
        return tuple(cs)

    def elements(self):
        return (self.from_index(n) for n in range(self.order))

    def gen(self):
        return self._pad((0, 1))

    def eval_poly(self, cs, x):
        """Evaluate a polynomial with coefficients in this field at x (Horner)."""
        acc = self.zero
        for c in reversed(cs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def to_json(self, x):
        return list(x)

    def from_json(self, obj):
        return self._pad(tuple(int(c) % self.p for c in obj))

    def __eq__(self, other):
        return (
            type(other) is ExtField
            and other.p == self.p
            and other.k == self.k
            and other.poly == self.poly
        )

    def __hash__(self):
        return hash(("Fq", self.p, self.k, self.poly))

    def __repr__(self):
        return self.name


def ff_extend(p: int, k: int) -> ExtField:
    """F_{p^k} with the lexicographically least monic irreducible modulus.

    Candidates are ordered by the integer whose base-p digits (least
    significant first) are the coefficients below the leading term.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be >= 1")
    for f in _monic_polys(k, p):
        if poly_is_irreducible(f, p):
            return ExtField(p, k, f)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class QuadRing:
    """Z[sqrt(-5)].  Values are (a, b) meaning a + b*sqrt(-5)."""

    characteristic = 0
    degree = 2
    name = "Zsqrt-5"

    zero = (0, 0)
    one = (1, 0)

    def coerce(self, n):
        return (int(n), 0)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c - 5 * b * d, a * d + b * c)

    def is_zero(self, x):
        return x == (0, 0)

    def norm(self, x):
        return x[0] * x[0] + 5 * x[1] * x[1]

    def inv(self, x):
        if x == (1, 0) or x == (-1, 0):
            return x
        if self.is_zero(x):
            raise DivisionByZero("1/0 in Z[sqrt(-5)]")
        raise InexactDivision(f"{x} is not a unit of Z[sqrt(-5)]")

    def divexact(self, x, y):
        """x / y, raising InexactDivision unless y divides x in the ring."""
        n = self.norm(y)
        if n == 0:
            raise DivisionByZero("division by zero in Z[sqrt(-5)]")
        # multiply by the conjugate, then divide by the (rational) norm
        num = self.mul(x, (y[0], -y[1]))
        if num[0] % n or num[1] % n:
            raise InexactDivision(f"{y} does not divide {x}")
        return (num[0] // n, num[1] // n)

    def to_json(self, x):
        return [x[0], x[1]]

    def from_json(self, obj):
        a, b = obj
        return (int(a), int(b))

    def __eq__(self, other):
        return type(other) is QuadRing

    def __hash__(self):
        return hash("Zsqrt-5")

    def __repr__(self):
        return self.name


QQ = Rationals()
ZZ = Integers()
ZSQRT5 = QuadRing()

SQRT5_GEN1 = (1, 1)  # 1 + sqrt(-5)
SQRT5_GEN2 = (3, 0)


def quad_mul(x, y):
    return ZSQRT5.mul(x, y)


def ideal_membership_I(x) -> bool:
    """Membership in (1+sqrt(-5), 3).

    The ideal is the Z-lattice with Hermite basis {(3, 0), (1, 1)}; reducing
    (a, b) against it leaves a - b mod 3.
    """
    a, b = x
    return (a - b) % 3 == 0


def field_ops(ring, xring, op: str, x, y=None):
    """Uniform dispatch over ring operations; rejects mixed-ring operands."""
    if ring != xring:
        raise MixedRings(f"operands from {ring} and {xring}")
    if op == "add":
        return ring.add(x, y)
    if op == "mul":
        return ring.mul(x, y)
    if op == "neg":
        return ring.neg(x)
    if op == "inv":
        return ring.inv(x)
    raise ValueError(f"unknown op {op!r}")
