import random

import pytest

from gradedsrc.coeff import QQ, ZZ, ff_extend
from gradedsrc.errors import ConstantPolynomial, SetSystemNotFound
from gradedsrc.gring import GroupRing
from gradedsrc.groups import FreeAbelian, FreeGroup, ball
from gradedsrc.bartholdi import (
    SetSystem,
    admissible_families,
    build_theta,
    construct_alphas,
    extend_scalars,
    find_point,
    footnote_embedding,
    footnote_kernel,
    search_set_system,
    theta_apply,
    theta_certify,
    verify_alphas,
)
from gradedsrc.srcsolve import truncated_kernel

F2 = FreeGroup(2)


@pytest.fixture(scope="module")
def system10():
    return search_set_system(2, 10)


@pytest.fixture(scope="module")
def alphas10(system10):
    return construct_alphas(system10, ff_extend(2, 1), seed=0)


@pytest.fixture(scope="module")
def theta10(alphas10):
    return build_theta(alphas10, {0: (1,), 1: (-1,)}, F2)


# --- set systems -------------------------------------------------------------


def test_x_restricted():
    sys = SetSystem(4, (0, 1), {0: frozenset({1, 2}), 1: frozenset({2, 3})})
    assert sys.x_restricted(0, (0, 1)) == {1}
    assert sys.x_restricted(0, (0,)) == {1, 2}
    assert sys.x_restricted(0, ()) == {1, 2}


def test_search_finds_size_10(system10):
    assert system10.size == 10
    assert system10.X == {
        0: frozenset({1, 2, 3, 7, 8, 9}),
        1: frozenset({4, 5, 6, 7, 8, 9}),
    }
    assert system10.missing_point() == 10
    ok, failures = system10.validate()
    assert ok, failures


def test_reference_instance_validates():
    sys = SetSystem(
        10, (0, 1), {0: frozenset(range(1, 7)), 1: frozenset(range(4, 10))}
    )
    ok, failures = sys.validate()
    assert ok, failures


def test_full_cover_invalid():
    sys = SetSystem(3, (0, 1), {0: frozenset({1, 2, 3}), 1: frozenset({1, 2, 3})})
    ok, failures = sys.validate()
    assert not ok and any("union" in f for f in failures)


def test_search_small_budget_fails():
    with pytest.raises(SetSystemNotFound):
        search_set_system(2, 3)


def test_no_symmetric_profile_at_9():
    # exhaustive: no valid two-label system with |Y| = 9 at all
    with pytest.raises(SetSystemNotFound):
        search_set_system(2, 9)


def test_log_base_2_also_accepts(system10):
    ok, failures = system10.validate(log_base=2)
    assert ok, failures


# --- point finding -----------------------------------------------------------


def test_find_point_needs_extension():
    F3 = ff_extend(3, 1)
    L, point = find_point({(2,): F3.one, (0,): F3.one}, F3.zero, F3)
    assert (L.p, L.k) == (3, 2)
    x = point[0]
    assert L.add(L.mul(x, x), L.one) == L.zero


def test_find_point_identity_poly():
    F7 = ff_extend(7, 1)
    L, point = find_point({(1,): F7.one}, F7.coerce(5), F7)
    assert (L.p, L.k) == (7, 1)
    assert point == (L.coerce(5),)


def test_find_point_product():
    F2f = ff_extend(2, 1)
    L, point = find_point({(1, 1): F2f.one}, F2f.one, F2f)
    assert all(not L.is_zero(a) for a in point)


def test_find_point_rejects_constant():
    F3 = ff_extend(3, 1)
    with pytest.raises(ConstantPolynomial):
        find_point({(0, 0): F3.one}, F3.one, F3)


# --- alpha families ----------------------------------------------------------


def test_admissible_families_structure(system10):
    fams = admissible_families(system10)
    assert len(fams) == 4
    for fam in fams:
        v = sum(len(system10.x_restricted(s, fam[s])) for s in system10.labels)
        assert v == 12


def test_construct_and_verify_roundtrip(system10, alphas10):
    assert alphas10.field.p == 2 and alphas10.field.k == 7
    assert alphas10.provenance["attempt"] == 0
    rep = verify_alphas(alphas10, system10)
    assert rep.row_support_ok
    assert all(f["ok"] and f["rank"] == 10 for f in rep.families)
    assert rep.ok


def test_zero_matrices_fail_every_family(system10, alphas10):
    L = alphas10.field
    from gradedsrc.bartholdi import AlphaFamily

    zero = AlphaFamily(
        L, system10, {s: [[L.zero] * 10 for _ in range(10)] for s in system10.labels}
    )
    rep = verify_alphas(zero, system10)
    assert rep.row_support_ok
    assert all(not f["ok"] for f in rep.families)


def test_perturbation_breaks_dependent_families(system10, alphas10):
    from gradedsrc.bartholdi import AlphaFamily

    L = alphas10.field
    matrices = {s: [row[:] for row in alphas10.matrices[s]] for s in system10.labels}
    for s in system10.labels:  # kill one shared column: every stack loses rank
        for i in range(10):
            matrices[s][i][0] = L.zero
    rep = verify_alphas(AlphaFamily(L, system10, matrices), system10)
    assert rep.row_support_ok
    assert all(not f["ok"] for f in rep.families)


# --- Theta -------------------------------------------------------------------


def test_theta_zero_input(theta10):
    R = theta10.ring
    out = theta_apply(theta10, [R.zero()] * 10)
    assert all(x.is_zero() for x in out)


def test_theta_missing_component_vanishes(theta10, alphas10):
    rng = random.Random(7)
    R = theta10.ring
    y0 = alphas10.set_system.missing_point()
    pool = [(), (1,), (-2,), (2, 1)]
    L = alphas10.field
    for _ in range(5):
        u = [
            R.from_terms(
                [(pool[rng.randrange(4)], L.from_index(rng.randrange(L.order)))]
            )
            for _ in range(10)
        ]
        out = theta_apply(theta10, u)
        assert out[y0 - 1].is_zero()


def test_theta_single_basis_input(theta10, alphas10):
    R = theta10.ring
    L = alphas10.field
    yp = 3
    u = [R.one() if y == yp else R.zero() for y in range(10)]
    out = theta_apply(theta10, u)
    for y in range(10):
        expected = R.from_terms(
            (theta10.b[s], alphas10.matrices[s][y][yp]) for s in (0, 1)
        )
        assert out[y] == expected


def test_theta_linearity(theta10):
    rng = random.Random(11)
    R = theta10.ring
    L = theta10.alphas.field
    pool = [(), (1,), (2,), (-1, 2)]

    def rand_vec():
        return [
            R.from_terms(
                [(pool[rng.randrange(4)], L.from_index(rng.randrange(L.order)))]
            )
            for _ in range(10)
        ]

    for _ in range(3):
        u, v = rand_vec(), rand_vec()
        r = R.from_terms([(pool[rng.randrange(4)], L.from_index(rng.randrange(L.order)))])
        tu, tv = theta_apply(theta10, u), theta_apply(theta10, v)
        tsum = theta_apply(theta10, [a + b for a, b in zip(u, v)])
        assert all(x == y + z for x, y, z in zip(tsum, tu, tv))
        tscaled = theta_apply(theta10, [a * r for a in u])
        assert all(x == y * r for x, y in zip(tscaled, tu))


def test_theta_certificates(theta10):
    rep0 = theta_certify(theta10, 0)
    assert (rep0.ncols, rep0.rank) == (10, 10)
    assert rep0.injective and rep0.missing_row_zero
    rep1 = theta_certify(theta10, 1)
    assert (rep1.ncols, rep1.rank) == (50, 50)
    assert rep1.verdict() == "VerifiedInjectiveUpTo(1)"


def test_theta_degenerate_family_has_witness(system10, alphas10):
    from gradedsrc.bartholdi import AlphaFamily

    L = alphas10.field
    matrices = {s: [row[:] for row in alphas10.matrices[s]] for s in system10.labels}
    matrices[1] = [[L.zero] * 10 for _ in range(10)]  # zero one alpha entirely
    degenerate = AlphaFamily(L, system10, matrices)
    theta = build_theta(degenerate, {0: (1,), 1: (-1,)}, F2)
    rep = theta_certify(theta, 0)
    assert not rep.injective
    assert rep.witness is not None
    assert any(not x.is_zero() for x in rep.witness)
    image = theta_apply(theta, rep.witness)
    assert all(x.is_zero() for x in image)


def test_theta_truncation_mechanism(theta10, alphas10):
    """On inputs supported in F, rows restricted away from the other labels'
    images see exactly one alpha block at each shifted group element."""
    rng = random.Random(23)
    R = theta10.ring
    L = alphas10.field
    sys = alphas10.set_system
    F = list(ball(F2, 1))
    u = [
        R.from_terms((f, L.from_index(rng.randrange(L.order))) for f in F)
        for _ in range(10)
    ]
    out = theta_apply(theta10, u)
    for s0 in sys.labels:
        for f0 in F:
            g = F2.mul(theta10.b[s0], f0)
            T = tuple(
                t
                for t in sys.labels
                if any(g == F2.mul(theta10.b[t], f) for f in F)
            )
            assert s0 in T
            for y in sys.x_restricted(s0, T):
                expected = L.zero
                for yp in range(10):
                    expected = L.add(
                        expected,
                        L.mul(alphas10.matrices[s0][y - 1][yp], u[yp].component(f0)),
                    )
                assert out[y - 1].component(g) == expected


# --- footnote embedding and scalar extension ---------------------------------


def test_footnote_basis_images(zf2):
    one, zero = zf2.one(), zf2.zero()
    a, b = zf2.delta((1,)), zf2.delta((2,))
    assert footnote_embedding(one, zero) == a - one
    assert footnote_embedding(zero, one) == b - one
    w = footnote_embedding(b - one, zero - (a - one))
    assert w.terms == {(1, 2): 1, (2, 1): -1}


def test_footnote_commutative_analogue_is_zero():
    R = GroupRing(FreeAbelian(2), ZZ)
    a, b = R.delta((1, 0)), R.delta((0, 1))
    one = R.one()
    x = (a - one) * (b - one) - (b - one) * (a - one)
    assert x.is_zero()


def test_footnote_kernel_zero_radii(qf2, zf2):
    for ring in (qf2, zf2):
        for r in (1, 2, 3):
            rep = footnote_kernel(ring, r)
            assert rep.basis == []
            assert rep.rank == rep.ncols


def test_extend_scalars_identity():
    R = GroupRing(FreeAbelian(1), ZZ)
    M = extend_scalars([[1, 0], [0, 1]], R)
    assert M[0][0] == R.one() and M[0][1].is_zero()
    rep = truncated_kernel(M, 2)
    assert rep.basis == []


def test_extend_scalars_multiplication_by_two():
    R = GroupRing(FreeAbelian(1), ZZ)
    (row,) = extend_scalars([[2]], R)
    for r in (0, 1, 2):
        assert truncated_kernel([row], r).basis == []


def test_extend_scalars_injective_pattern():
    R = GroupRing(FreeAbelian(1), ZZ)
    M = extend_scalars([[1, 0], [0, 1], [1, 1]], R)  # injective on Z^2
    assert truncated_kernel(M, 2).basis == []
