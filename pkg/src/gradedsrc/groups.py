"""Supported groups, canonical forms, balls, product sets, Folner search, cosets.

Three families: free groups (reduced words), free abelian groups (integer
vectors), and explicit finite groups (element list + multiplication table).
Elements are plain hashable values; the descriptor supplies the operations.

Canonical orderings: shortlex on words (a < a^-1 < b < b^-1 ...), plain
lexicographic on integer vectors, list position for finite groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import FolnerNotFound, InfiniteIndex, MixedGroups

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class FreeGroup:
    """Free group of given rank; elements are reduced tuples of nonzero ints,
    letter +i meaning the i-th generator and -i its inverse (1-based)."""

    family = "free"

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        self.rank = rank
        self.identity = ()

    def mul(self, g, h):
        out = list(g)
        for x in h:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return tuple(out)

    def inv(self, g):
        return tuple(-x for x in reversed(g))

    def generators(self):
        return [(i,) for i in range(1, self.rank + 1)]

    def gen_set(self):
        return [(i,) for i in range(1, self.rank + 1)] + [(-i,) for i in range(1, self.rank + 1)]

    @staticmethod
    def _letter_key(x):
        return (abs(x), 0 if x > 0 else 1)

    def sort_key(self, g):
        return (len(g), tuple(self._letter_key(x) for x in g))

    def ball_elements(self, r: int):
        frontier = [()]
        seen = {()}
        for _ in range(r):
            new = []
            for w in frontier:
                for s in self.gen_set():
                    v = self.mul(w, s)
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
            frontier = new
        return seen

    def elem_to_json(self, g):
        return " ".join(
            _LETTERS[abs(x) - 1] if x > 0 else _LETTERS[abs(x) - 1].upper() for x in g
        )

    def elem_from_json(self, obj):
        out = self.identity
        for tok in obj.split():
            if len(tok) != 1 or tok.lower() not in _LETTERS:
                raise ValueError(f"bad letter {tok!r}")
            i = _LETTERS.index(tok.lower()) + 1
            if i > self.rank:
                raise ValueError(f"letter {tok!r} out of rank {self.rank}")
            out = self.mul(out, (i,) if tok.islower() else (-i,))
        return out

    def __eq__(self, other):
        return type(other) is FreeGroup and other.rank == self.rank

    def __hash__(self):
        return hash(("free", self.rank))

    def __repr__(self):
        return f"FreeGroup({self.rank})"


class FreeAbelian:
    """Z^d; elements are integer tuples of length d, written additively."""

    family = "abelian"

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        self.rank = rank
        self.identity = (0,) * rank

    def mul(self, g, h):
        return tuple(a + b for a, b in zip(g, h))

    def inv(self, g):
        return tuple(-a for a in g)

    def generators(self):
        return [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]

    def gen_set(self):
        gens = self.generators()
        return gens + [self.inv(g) for g in gens]

    def sort_key(self, g):
        return g

    def ball_elements(self, r: int):
        # L1 ball
        out = set()
        for v in itertools.product(range(-r, r + 1), repeat=self.rank):
            if sum(abs(a) for a in v) <= r:
                out.add(v)
        return out

    def box_elements(self, side: int):
        return set(itertools.product(range(side), repeat=self.rank))

    def elem_to_json(self, g):
        return list(g)

    def elem_from_json(self, obj):
        v = tuple(int(a) for a in obj)
        if len(v) != self.rank:
            raise ValueError(f"vector length {len(v)} != rank {self.rank}")
        return v

    def __eq__(self, other):
        return type(other) is FreeAbelian and other.rank == self.rank

    def __hash__(self):
        return hash(("abelian", self.rank))

    def __repr__(self):
        return f"FreeAbelian({self.rank})"


class FiniteGroup:
    """Explicit finite group.  The multiplication table is checked once on
    construction (identity, inverses, closure, associativity)."""

    family = "finite"

    def __init__(self, elements, table, generators=None, kind="label"):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.kind = kind
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")
        self._check_group()
        self.generators_list = tuple(generators) if generators else tuple(
            g for g in self.elements if g != self.identity
        )

    def _check_group(self):
        els = self.elements
        elset = set(els)
        for g in els:
            for h in els:
                if (g, h) not in self.table or self.table[(g, h)] not in elset:
                    raise ValueError("multiplication table is not closed")
        ident = None
        for e in els:
            if all(self.table[(e, g)] == g and self.table[(g, e)] == g for g in els):
                ident = e
                break
        if ident is None:
            raise ValueError("no identity element")
        self.identity = ident
        self._inv = {}
        for g in els:
            for h in els:
                if self.table[(g, h)] == ident and self.table[(h, g)] == ident:
                    self._inv[g] = h
                    break
            else:
                raise ValueError(f"no inverse for {g}")
        for a in els:
            for b in els:
                ab = self.table[(a, b)]
                for c in els:
                    if self.table[(ab, c)] != self.table[(a, self.table[(b, c)])]:
                        raise ValueError("multiplication table is not associative")

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        """S_n acting on {0..n-1}; composition applies the right factor first."""
        els = sorted(itertools.permutations(range(n)))
        table = {
            (s, t): tuple(s[t[i]] for i in range(n)) for s in els for t in els
        }
        gens = []
        if n >= 2:
            gens.append(tuple([1, 0] + list(range(2, n))))
        if n >= 3:
            gens.append(tuple(list(range(1, n)) + [0]))
        g = cls(els, table, generators=gens or None, kind="perm")
        g.n = n
        return g

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        """C_n with elements 0..n-1 under addition mod n."""
        els = list(range(n))
        table = {(a, b): (a + b) % n for a in els for b in els}
        return cls(els, table, generators=[1 % n], kind="label")

    def mul(self, g, h):
        return self.table[(g, h)]

    def inv(self, g):
        return self._inv[g]

    def generators(self):
        return list(self.generators_list)

    def gen_set(self):
        gens = list(self.generators_list)
        return gens + [self._inv[g] for g in gens]

    def sort_key(self, g):
        return self._index[g]

    def ball_elements(self, r: int):
        frontier = [self.identity]
        seen = {self.identity}
        for _ in range(r):
            new = []
            for w in frontier:
                for s in self.gen_set():
                    v = self.mul(w, s)
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
            frontier = new
        return seen

    def elem_to_json(self, g):
        if self.kind == "perm":
            return [i + 1 for i in g]
        return g

    def elem_from_json(self, obj):
        if self.kind == "perm":
            g = tuple(int(i) - 1 for i in obj)
        else:
            g = obj if not isinstance(obj, list) else tuple(obj)
        if g not in self._index:
            raise ValueError(f"{obj!r} is not an element of this group")
        return g

    def __eq__(self, other):
        return (
            type(other) is FiniteGroup
            and other.elements == self.elements
            and other.table == self.table
        )

    def __hash__(self):
        return hash(("finite", self.elements))

    def __repr__(self):
        return f"FiniteGroup(order={len(self.elements)})"


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteSubset:
    """Deduplicated subset of one group, kept in canonical sorted order."""

    group: object
    elements: tuple

    @classmethod
    def of(cls, group, elements) -> "FiniteSubset":
        els = sorted(set(elements), key=group.sort_key)
        return cls(group, tuple(els))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in set(self.elements)

    def __iter__(self):
        return iter(self.elements)


def group_mul(G, g, h):
    return G.mul(g, h)


def group_inv(G, g):
    return G.inv(g)


def ball(G, r: int) -> FiniteSubset:
    if r < 0:
        raise ValueError("radius must be >= 0")
    return FiniteSubset.of(G, G.ball_elements(r))


def box(G: FreeAbelian, side: int) -> FiniteSubset:
    return FiniteSubset.of(G, G.box_elements(side))


def product_set(S: FiniteSubset, F: FiniteSubset) -> FiniteSubset:
    if S.group != F.group:
        raise MixedGroups("product of subsets of different groups")
    G = S.group
    return FiniteSubset.of(G, {G.mul(s, f) for s in S for f in F})


def folner_ratio_ok(S: FiniteSubset, F: FiniteSubset, ratio_bound: Fraction) -> bool:
    """Strict check |SF| < ratio_bound * |F|, exact rational comparison."""
    sf = product_set(S, F)
    return len(sf) * ratio_bound.denominator < ratio_bound.numerator * len(F)


def folner_search(G, S: FiniteSubset, ratio_bound, budget: int) -> FiniteSubset:
    """Search the per-family schedule for F with |SF| < ratio_bound * |F|.

    Schedules: boxes [0,L)^d for free abelian groups, the whole group for
    finite groups, balls for free groups (which will exhaust the budget for
    any ratio reachable only by amenable growth).
    """
    ratio_bound = Fraction(ratio_bound)
    if ratio_bound <= 1:
        raise ValueError("ratio_bound must exceed 1")
    if isinstance(G, FiniteGroup):
        F = FiniteSubset.of(G, G.elements)
        if folner_ratio_ok(S, F, ratio_bound):
            return F
        raise FolnerNotFound("whole finite group does not meet the bound")
    if isinstance(G, FreeAbelian):
        for side in range(1, budget + 1):
            F = box(G, side)
            if folner_ratio_ok(S, F, ratio_bound):
                return F
        raise FolnerNotFound(f"no box of side <= {budget} meets the bound")
    if isinstance(G, FreeGroup):
        for r in range(budget + 1):
            F = ball(G, r)
            if folner_ratio_ok(S, F, ratio_bound):
                return F
        raise FolnerNotFound(f"no ball of radius <= {budget} meets the bound")
    raise TypeError(f"unsupported group {G!r}")


# ---------------------------------------------------------------------------
# integer lattices and cosets


def hermite_normal_form(rows, width: int):
    """Row-style HNF of the lattice spanned by `rows` in Z^width.

    Returns a list of (pivot_column, row) pairs with positive pivots and
    entries above each pivot reduced into [0, pivot).
    """
    rows = [list(r) for r in rows if any(r)]
    basis = []
    col = 0
    while col < width and rows:
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not active:
            rows = rest
            col += 1
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            new_active = [p]
            for r in active[1:]:
                q = r[col] // p[col]
                rr = [a - q * b for a, b in zip(r, p)]
                if rr[col] != 0:
                    new_active.append(rr)
                elif any(rr):
                    rest.append(rr)
            active = new_active
        p = active[0]
        if p[col] < 0:
            p = [-a for a in p]
        basis.append((col, p))
        rows = rest
        col += 1
    for i in range(len(basis) - 1, -1, -1):
        ci, pi = basis[i]
        for j in range(i):
            cj, pj = basis[j]
            f = pj[ci] // pi[ci]
            if f:
                basis[j] = (cj, [a - f * b for a, b in zip(pj, pi)])
    return basis


class AbelianCosets:
    """Residue classification of Z^d modulo a finite-index sublattice."""

    def __init__(self, G: FreeAbelian, generators):
        self.group = G
        d = G.rank
        basis = hermite_normal_form(generators, d)
        if len(basis) != d:
            raise InfiniteIndex("subgroup generators do not have full rank")
        self.basis = [row for _, row in basis]
        self.num_cosets = 1
        for i in range(d):
            self.num_cosets *= self.basis[i][i]
        self.representatives = [
            tuple(v) for v in itertools.product(*(range(self.basis[i][i]) for i in range(d)))
        ]
        # not canonical yet: reduce each (upper rows can shift later coords)
        self.representatives = sorted({self.reduce(v) for v in self.representatives})
        assert len(self.representatives) == self.num_cosets

    def reduce(self, v):
        v = list(v)
        for i, row in enumerate(self.basis):
            q = v[i] // row[i]
            if q:
                for j in range(len(v)):
                    v[j] -= q * row[j]
        return tuple(v)

    def index(self, g) -> int:
        return self.representatives.index(self.reduce(g))

    def contains(self, g) -> bool:
        return self.reduce(g) == self.group.identity


class FiniteCosets:
    """Right cosets Hx of the subgroup generated by `generators`."""

    def __init__(self, G: FiniteGroup, generators):
        self.group = G
        sub = {G.identity}
        frontier = [G.identity]
        gens = list(generators) + [G.inv(g) for g in generators]
        while frontier:
            w = frontier.pop()
            for s in gens:
                v = G.mul(w, s)
                if v not in sub:
                    sub.add(v)
                    frontier.append(v)
        self.subgroup = FiniteSubset.of(G, sub)
        self.cosets = []
        self._coset_of = {}
        for g in sorted(G.elements, key=G.sort_key):
            if g in self._coset_of:
                continue
            idx = len(self.cosets)
            coset = sorted((G.mul(h, g) for h in sub), key=G.sort_key)
            self.cosets.append(tuple(coset))
            for x in coset:
                self._coset_of[x] = idx
        self.num_cosets = len(self.cosets)

    def index(self, g) -> int:
        return self._coset_of[g]

    def contains(self, g) -> bool:
        return self.index(g) == self.index(self.group.identity)


def cosets(G, generators):
    """Coset classifier for a finite-index subgroup of a supported group."""
    if isinstance(G, FiniteGroup):
        return FiniteCosets(G, generators)
    if isinstance(G, FreeAbelian):
        return AbelianCosets(G, generators)
    raise InfiniteIndex(f"coset classification unsupported for {G!r}")
