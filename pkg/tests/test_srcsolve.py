from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedsrc.coeff import QQ, ZZ, PrimeField
from gradedsrc.errors import FolnerNotFound
from gradedsrc.gring import GroupRing, IntConstPolyRing
from gradedsrc.groups import FiniteGroup, FiniteSubset, FreeAbelian, ball, box
from gradedsrc.linalg import kernel_basis, rank
from gradedsrc.srcsolve import (
    LinearSystem,
    assemble_solution,
    intconst_truncated_kernel,
    lift_system,
    solve_src,
    truncated_kernel,
    verify_solution,
)

Z = FreeAbelian(1)


def one_pm_t_system(qz):
    t = qz.delta((1,))
    return LinearSystem(qz, 1, 2, ((qz.one() + t, qz.one() - t),))


def test_lift_matrix_frozen(qz):
    sys = one_pm_t_system(qz)
    F = FiniteSubset.of(Z, [(0,), (1,), (2,)])
    lifted = lift_system(sys, F)
    assert [[int(a) for a in row] for row in lifted.matrix] == [
        [1, 1, 0, 0, 0, 0],
        [1, -1, 1, 1, 0, 0],
        [0, 0, 1, -1, 1, 1],
        [0, 0, 0, 0, 1, -1],
    ]
    assert [g for g, _ in lifted.row_index] == [(0,), (1,), (2,), (3,)]
    assert lifted.col_index == [(j, f) for f in F for j in range(2)]


def test_lift_with_singleton_folner_set(qz):
    sys = one_pm_t_system(qz)
    lifted = lift_system(sys, FiniteSubset.of(Z, [(0,)]))
    # constant-term equations indexed by S = {1, t}
    assert [[int(a) for a in row] for row in lifted.matrix] == [[1, 1], [1, -1]]


def test_lift_selector_matrix(qz2):
    one, zero = qz2.one(), qz2.zero()
    sys = LinearSystem(qz2, 1, 2, ((one, zero),))
    F = box(FreeAbelian(2), 2)
    lifted = lift_system(sys, F)
    for ridx, row in enumerate(lifted.matrix):
        assert sum(1 for a in row if a) == 1
        g = lifted.row_index[ridx][0]
        assert row[lifted.col_index.index((0, g))] == 1


def test_lift_kernel_dimension_and_membership(qz):
    sys = one_pm_t_system(qz)
    F = FiniteSubset.of(Z, [(0,), (1,), (2,)])
    lifted = lift_system(sys, F)
    basis = kernel_basis(lifted.matrix, QQ, ncols=6)
    assert len(basis) == 2
    target = [Fraction(c) for c in (1, -1, -1, -1, 0, 0)]
    stacked = [list(v) for v in basis] + [target]
    assert rank(stacked, QQ) == 2  # the target lies in the kernel span
    assert all(sum(a * x for a, x in zip(row, target)) == 0 for row in lifted.matrix)


def test_assemble_examples(qz):
    sys = one_pm_t_system(qz)
    F = FiniteSubset.of(Z, [(0,), (1,), (2,)])
    kv = [Fraction(c) for c in (1, -1, -1, -1, 0, 0)]
    sol = assemble_solution(sys, kv, F)
    x1, x2 = sol.xs
    assert x1 == qz.one() - qz.delta((1,))
    assert x2 == qz.zero() - (qz.one() + qz.delta((1,)))
    assert verify_solution(sys, sol.xs)


def test_solve_one_pm_t(qz):
    sol = solve_src(one_pm_t_system(qz))
    assert sol.verified
    assert verify_solution(one_pm_t_system(qz), sol.xs)


def test_solve_cyclic_identical_coefficients():
    C2 = FiniteGroup.cyclic(2)
    R = GroupRing(C2, QQ)
    a = R.one() + R.delta(1)
    sol = solve_src(LinearSystem(R, 1, 2, ((a, a),)))
    assert sol.verified
    assert sol.xs[0] + sol.xs[1] == R.zero() or verify_solution(
        LinearSystem(R, 1, 2, ((a, a),)), sol.xs
    )


def test_solve_footnote_budget_exhaustion(qf2):
    a = qf2.delta((1,)) - qf2.one()
    b = qf2.delta((2,)) - qf2.one()
    sys = LinearSystem(qf2, 1, 2, ((a, b),))
    with pytest.raises(FolnerNotFound):
        solve_src(sys, budget=3)


def test_solve_zero_system(qz):
    sys = LinearSystem(qz, 1, 2, ((qz.zero(), qz.zero()),))
    sol = solve_src(sys)
    assert sol.verified
    assert sol.xs[0] == qz.one() and sol.xs[1].is_zero()


def test_solve_integer_coefficients(qz):
    R = GroupRing(Z, ZZ)
    t = R.delta((1,))
    sol = solve_src(LinearSystem(R, 1, 2, ((R.one() + t, R.one() - t),)))
    assert sol.verified
    # integer solutions come out primitive: coefficient gcd 1 overall
    from math import gcd

    coeffs = [c for x in sol.xs for c in x.terms.values()]
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    assert g == 1


def test_solve_prime_field():
    R = GroupRing(Z, PrimeField(5))
    t = R.delta((1,))
    sys = LinearSystem(R, 1, 2, ((R.one() + t, R.one() - t),))
    assert solve_src(sys).verified


def test_shape_validation(qz):
    with pytest.raises(ValueError):
        LinearSystem(qz, 2, 2, ((qz.one(), qz.one()), (qz.one(), qz.one())))
    with pytest.raises(ValueError):
        LinearSystem(qz, 1, 2, ((qz.one(),),))


# --- truncated kernels -------------------------------------------------------


def test_truncated_kernel_footnote_free(qf2):
    a = qf2.delta((1,)) - qf2.one()
    b = qf2.delta((2,)) - qf2.one()
    rep1 = truncated_kernel([[a, b]], 1)
    assert (rep1.ncols, rep1.rank, rep1.basis) == (10, 10, [])
    rep2 = truncated_kernel([[a, b]], 2)
    assert (rep2.ncols, rep2.rank, rep2.basis) == (34, 34, [])


def test_truncated_kernel_commutative_control(qz2):
    a = qz2.delta((1, 0)) - qz2.one()
    b = qz2.delta((0, 1)) - qz2.one()
    rep = truncated_kernel([[a, b]], 1)
    assert len(rep.basis) == 1
    (x1, x2) = rep.basis[0]
    assert (a * x1 + b * x2).is_zero()
    # the witness is proportional to (b - 1, -(a - 1))
    c = x1.component((0, 1))
    assert x1 == b.scale(c) and x2 == a.scale(-c)


def test_truncated_kernel_zero_system(qz):
    rep = truncated_kernel([[qz.zero(), qz.zero()]], 1)
    assert rep.rank == 0
    assert len(rep.basis) == rep.ncols


@given(st.integers(0, 2))
@settings(max_examples=3, deadline=None)
def test_truncated_kernel_monotone_in_radius(r):
    qf2 = GroupRing(__import__("gradedsrc.groups", fromlist=["FreeGroup"]).FreeGroup(2), QQ)
    a = qf2.delta((1,)) - qf2.one()
    b = qf2.delta((2,)) - qf2.one()
    rep = truncated_kernel([[a, b]], r)
    rep_next = truncated_kernel([[a, b]], r + 1)
    # injectivity at a larger radius implies injectivity at the smaller one
    if not rep_next.basis:
        assert not rep.basis


def test_intconst_truncated_kernel_example():
    P = IntConstPolyRing()
    base = P.base
    a = base.delta((1,)) - base.one()
    b = base.delta((2,)) - base.one()
    rnk, ncols, basis = intconst_truncated_kernel(P, [[a, b]], 2, 2)
    assert (rnk, ncols, basis) == (70, 70, [])


# --- randomized lift/assemble consistency ------------------------------------


def random_system(ring, rng, pool):
    def rand_elem():
        return ring.from_terms((pool[rng.randrange(len(pool))], rng.randint(-2, 2)) for _ in range(2))

    while True:
        a = ((rand_elem(), rand_elem(), rand_elem()),)
        if not all(x.is_zero() for x in a[0]):
            return LinearSystem(ring, 1, 3, a)


def test_randomized_consistency_z2(qz2, rng):
    pool = [(0, 0), (1, 0), (0, 1), (1, 1), (-1, 0)]
    for _ in range(10):
        sys = random_system(qz2, rng, pool)
        sol = solve_src(sys, budget=12)
        assert sol.verified
        assert verify_solution(sys, sol.xs)


def test_randomized_consistency_s3(s3, rng):
    R = GroupRing(s3, QQ)
    pool = list(s3.elements)
    for _ in range(10):
        sys = random_system(R, rng, pool)
        sol = solve_src(sys, budget=2)
        assert verify_solution(sys, sol.xs)


def test_all_lifted_kernel_vectors_assemble_to_solutions(qz2, rng):
    from gradedsrc.groups import folner_search

    pool = [(0, 0), (1, 0), (0, 1)]
    for _ in range(5):
        sys = random_system(qz2, rng, pool)
        S = sys.union_support()
        F = folner_search(qz2.group, S, Fraction(3, 1), 12)
        lifted = lift_system(sys, F)
        for kv in kernel_basis(lifted.matrix, QQ, ncols=len(lifted.col_index)):
            sol = assemble_solution(sys, kv, F)
            assert verify_solution(sys, sol.xs)
