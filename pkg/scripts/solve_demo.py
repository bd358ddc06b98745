"""Demonstrate the Folner lift-solve-assemble pipeline on small systems.

Builds the classic one-equation system (1+t)x1 + (1-t)x2 = 0 over Q[Z],
a batch of random systems over Q[Z^2], and one over Q[S3], printing the
Folner sets used and the verified solutions.
"""

import argparse
import random
from fractions import Fraction

from gradedsrc.coeff import QQ
from gradedsrc.gring import GroupRing
from gradedsrc.groups import FiniteGroup, FreeAbelian
from gradedsrc.srcsolve import LinearSystem, solve_src, verify_solution


def show(label, sys_obj, sol):
    print(f"== {label} (m={sys_obj.m}, n={sys_obj.n}) ==")
    for i, row in enumerate(sys_obj.a):
        print(f"  eq {i}: " + "  |  ".join(str(x.terms) for x in row))
    for j, x in enumerate(sol.xs):
        print(f"  x{j + 1} = {x.terms}")
    print(f"  verified by substitution: {verify_solution(sys_obj, sol.xs)}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=3, help="random Z^2 systems")
    args = ap.parse_args()

    qz = GroupRing(FreeAbelian(1), QQ)
    t = qz.delta((1,))
    sys_obj = LinearSystem(qz, 1, 2, ((qz.one() + t, qz.one() - t),))
    show("(1+t, 1-t) over Q[Z]", sys_obj, solve_src(sys_obj))

    rng = random.Random(args.seed)
    qz2 = GroupRing(FreeAbelian(2), QQ)
    pool = [(0, 0), (1, 0), (0, 1), (1, 1)]
    for k in range(args.count):
        while True:
            a = tuple(
                tuple(
                    qz2.from_terms(
                        (pool[rng.randrange(4)], Fraction(rng.randint(-2, 2)))
                        for _ in range(2)
                    )
                    for _ in range(3)
                )
                for _ in range(1)
            )
            if any(not x.is_zero() for x in a[0]):
                break
        sys_obj = LinearSystem(qz2, 1, 3, a)
        show(f"random Q[Z^2] #{k}", sys_obj, solve_src(sys_obj, budget=12))

    S3 = FiniteGroup.symmetric(3)
    rs3 = GroupRing(S3, QQ)
    a = ((rs3.one() + rs3.delta((1, 0, 2)), rs3.delta((1, 2, 0)), rs3.one()),)
    sys_obj = LinearSystem(rs3, 1, 3, a)
    show("Q[S3] with F = S3", sys_obj, solve_src(sys_obj, budget=1))


if __name__ == "__main__":
    main()
