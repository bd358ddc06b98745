"""Subgroups mapped to right ideals of the group ring via coset sums.

I_H consists of the elements whose coefficient sum over every right coset of
H vanishes; H <= K refines cosets, so I_H <= I_K, and delta_h - delta_1
separates membership.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gring import GRElement, GroupRing
from .groups import FiniteCosets, ball, cosets


@dataclass
class SubgroupHandle:
    group: object
    generators: tuple
    classifier: object

    @classmethod
    def create(cls, group, generators) -> "SubgroupHandle":
        return cls(group, tuple(generators), cosets(group, generators))

    def contains(self, g) -> bool:
        return self.classifier.contains(g)

    def member_elements(self):
        """Finite list of subgroup members when available (finite groups)."""
        if isinstance(self.classifier, FiniteCosets):
            return list(self.classifier.subgroup)
        return list(self.generators)


def ideal_membership_IH(r: GRElement, H: SubgroupHandle) -> bool:
    """True iff every right-coset coefficient sum of r vanishes."""
    if r.ring.group != H.group:
        raise ValueError("element and subgroup live over different groups")
    R = r.ring.coeff
    sums = {}
    for g, c in r.terms.items():
        idx = H.classifier.index(g)
        sums[idx] = R.add(sums.get(idx, R.zero), c)
    return all(R.is_zero(v) for v in sums.values())


def separator(ring: GroupRing, g) -> GRElement:
    """delta_g - delta_1; lies in I_H exactly when g is in H."""
    return ring.delta(g) - ring.one()


def random_ideal_element(ring: GroupRing, H: SubgroupHandle, rng: random.Random,
                         radius: int = 3, terms: int = 4) -> GRElement:
    """Random member of I_H: a sum of coefficient-weighted differences of
    elements lying in a common coset."""
    G = ring.group
    pool = list(ball(G, radius))
    gens = H.generators or (G.identity,)
    out = ring.zero()
    for _ in range(terms):
        g = pool[rng.randrange(len(pool))]
        h = G.mul(gens[rng.randrange(len(gens))], g)
        c = ring.coeff.coerce(rng.randint(-3, 3))
        out = out + (ring.delta(h, c) - ring.delta(g, c))
    return out


@dataclass
class DistinguishReport:
    relation: str  # "equal", "H<=K", "K<=H", "incomparable"
    samples_checked: int
    witness: GRElement | None
    witness_in: str | None  # which of the two ideals contains the witness
    ok: bool


def subgroup_leq(H: SubgroupHandle, K: SubgroupHandle) -> bool:
    return all(K.contains(g) for g in H.generators)


def _escape_element(H: SubgroupHandle, K: SubgroupHandle):
    """Some member of H outside K (H not contained in K)."""
    for g in H.member_elements():
        if not K.contains(g):
            return g
    raise AssertionError("no escaping element found despite non-containment")


def distinguish_subgroups(H: SubgroupHandle, K: SubgroupHandle, ring: GroupRing,
                          sample_budget: int = 50, seed: int = 0) -> DistinguishReport:
    """Containment verification on samples, or an explicit separating element."""
    rng = random.Random(seed)
    h_in_k = subgroup_leq(H, K)
    k_in_h = subgroup_leq(K, H)
    if h_in_k and k_in_h:
        relation = "equal"
    elif h_in_k:
        relation = "H<=K"
    elif k_in_h:
        relation = "K<=H"
    else:
        relation = "incomparable"
    checked = 0
    ok = True
    if h_in_k:
        for _ in range(sample_budget):
            r = random_ideal_element(ring, H, rng)
            checked += 1
            if not ideal_membership_IH(r, K):
                ok = False
                break
    if k_in_h:
        for _ in range(sample_budget):
            r = random_ideal_element(ring, K, rng)
            checked += 1
            if not ideal_membership_IH(r, H):
                ok = False
                break
    witness = None
    witness_in = None
    if relation != "equal":
        if not h_in_k:
            g = _escape_element(H, K)
            witness, witness_in = separator(ring, g), "I_H"
            ok = ok and ideal_membership_IH(witness, H) and not ideal_membership_IH(witness, K)
        else:
            g = _escape_element(K, H)
            witness, witness_in = separator(ring, g), "I_K"
            ok = ok and ideal_membership_IH(witness, K) and not ideal_membership_IH(witness, H)
    return DistinguishReport(relation, checked, witness, witness_in, ok)
