"""JSON encodings for groups, coefficient rings, elements, and systems.

Conventions: free-group words as letter strings ("a B a", capitals inverse),
integer vectors as arrays, permutations in 1-based one-line notation;
rationals as "num/den" strings, finite-field elements as coefficient arrays,
quadratic integers as [a, b]; ring elements as sorted [group, coeff] pairs.
"""

from __future__ import annotations

from .coeff import QQ, ZSQRT5, ZZ, ExtField, PrimeField, ff_extend
from .gring import GroupRing
from .groups import FiniteGroup, FreeAbelian, FreeGroup
from .srcsolve import LinearSystem


def group_to_json(G) -> dict:
    if isinstance(G, FreeGroup):
        return {"family": "free", "rank": G.rank}
    if isinstance(G, FreeAbelian):
        return {"family": "abelian", "rank": G.rank}
    if isinstance(G, FiniteGroup):
        if G.kind == "perm":
            return {"family": "symmetric", "n": len(G.elements[0])}
        return {
            "family": "finite",
            "elements": list(G.elements),
            "table": [
                [G.elements.index(G.table[(g, h)]) for h in G.elements] for g in G.elements
            ],
        }
    raise TypeError(f"unsupported group {G!r}")


def group_from_json(obj) -> object:
    family = obj["family"]
    if family == "free":
        return FreeGroup(obj["rank"])
    if family == "abelian":
        return FreeAbelian(obj["rank"])
    if family == "symmetric":
        return FiniteGroup.symmetric(obj["n"])
    if family == "cyclic":
        return FiniteGroup.cyclic(obj["n"])
    if family == "finite":
        els = [tuple(e) if isinstance(e, list) else e for e in obj["elements"]]
        table = {
            (els[i], els[j]): els[obj["table"][i][j]]
            for i in range(len(els))
            for j in range(len(els))
        }
        return FiniteGroup(els, table)
    raise ValueError(f"unknown group family {family!r}")


def coeff_to_json(ring) -> dict:
    if ring == QQ:
        return {"ring": "Q"}
    if ring == ZZ:
        return {"ring": "Z"}
    if isinstance(ring, PrimeField):
        return {"ring": "Fp", "p": ring.p}
    if isinstance(ring, ExtField):
        return {"ring": "Fq", "p": ring.p, "k": ring.k, "poly": list(ring.poly)}
    if ring == ZSQRT5:
        return {"ring": "Zsqrt-5"}
    raise TypeError(f"unsupported coefficient ring {ring!r}")


def coeff_from_json(obj):
    name = obj["ring"]
    if name == "Q":
        return QQ
    if name == "Z":
        return ZZ
    if name == "Fp":
        return PrimeField(obj["p"])
    if name == "Fq":
        if "poly" in obj:
            return ExtField(obj["p"], obj["k"], tuple(obj["poly"]))
        return ff_extend(obj["p"], obj["k"])
    if name == "Zsqrt-5":
        return ZSQRT5
    raise ValueError(f"unknown coefficient ring {name!r}")


def system_to_json(sys: LinearSystem) -> dict:
    return {
        "group": group_to_json(sys.ring.group),
        "coeff": coeff_to_json(sys.ring.coeff),
        "m": sys.m,
        "n": sys.n,
        "a": [[sys.ring.elem_to_json(x) for x in row] for row in sys.a],
    }


def system_from_json(obj) -> LinearSystem:
    ring = GroupRing(group_from_json(obj["group"]), coeff_from_json(obj["coeff"]))
    a = tuple(tuple(ring.elem_from_json(x) for x in row) for row in obj["a"])
    return LinearSystem(ring, int(obj["m"]), int(obj["n"]), a)


def solution_to_json(ring: GroupRing, xs, verified: bool, provenance: dict) -> dict:
    return {
        "solution": [ring.elem_to_json(x) for x in xs],
        "verified": verified,
        "provenance": provenance,
    }
