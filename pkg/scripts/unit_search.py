"""Exhaustive unit search in the sign-graded fixture S + I over Z[sqrt(-5)].

Enumerates elements (s, x) with s = a + b*sqrt(-5), x = c + d*sqrt(-5),
all coordinates bounded by --box, keeps those in the ring (x in the ideal
(1+sqrt(-5), 3)), and tests invertibility via the determinant of
multiplication on the rank-4 integer lattice.

Note: boxes of size >= 5 reveal units beyond (+-1, 0), e.g.
(3, 0) + (5, -1) with exact inverse (-3, 0) + (5, -1); the element has
infinite multiplicative order.
"""

import argparse

from gradedsrc.gring import SG_ONE, SignGradedElement, sign_graded_is_unit, sign_graded_mul


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--box", type=int, default=10, help="coordinate bound")
    args = ap.parse_args()

    N = args.box
    units = []
    for a in range(-N, N + 1):
        for b in range(-N, N + 1):
            for c in range(-N, N + 1):
                for d in range(-N, N + 1):
                    if (c - d) % 3:
                        continue  # x must lie in the ideal
                    u = SignGradedElement((a, b), (c, d))
                    if sign_graded_is_unit(u):
                        units.append(u)

    print(f"{len(units)} units with all coordinates in [-{N}, {N}]:")
    for u in sorted(units, key=lambda u: (u.s, u.x)):
        line = f"  s = {u.s}, x = {u.x}"
        v = SignGradedElement((-u.s[0], -u.s[1]), u.x)
        if sign_graded_mul(u, v) == SG_ONE:
            line += f"   (inverse: s = {v.s}, x = {v.x})"
        print(line)


if __name__ == "__main__":
    main()
