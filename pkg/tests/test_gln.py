import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affhecke.gln import (
    GLDifferenceRep,
    HLBasis,
    elementary,
    gl_apply_I_j,
    gl_apply_That_j,
    gl_M_r,
    gl_m_r_hat,
    gl_params,
    gl_symmetric_action,
    hall_littlewood,
    hall_littlewood_t,
    morris_brute,
    morris_pieri,
    morris_V,
    schur_bialternant,
    sort_length,
    sorted_compositions,
    swap,
    to_fundamental,
    verify_coordinate_map,
    verify_gl_central,
    verify_gl_relations,
    verify_hl_structure,
    verify_morris,
    verify_schur_limit,
)
from affhecke.latfun import FiniteFunction, GroupAlgebraElem, random_function


def box(N, r):
    return [l for l in sorted_compositions(N, -r, r)] + [tuple(random.Random(i).randint(-r, r) for _ in range(N))
                                                            for i in range(20)]


def test_T_and_I_on_equal_neighbours():
    N, P = 3, gl_params(3)
    (q,) = P.ring.gens()
    f = random_function(3, 3, random.Random(1), ring=P.ring)
    for j in (1, 2):
        T = gl_apply_That_j(N, P, j, f)
        I = gl_apply_I_j(N, P, j, f)
        for lam in box(3, 2):
            if lam[j - 1] == lam[j]:
                assert T(lam) == q * f(lam)
                assert I(lam) == q * f(swap(lam, j))


def test_M_N_is_a_shift():
    N, P = 3, gl_params(3)
    f = random_function(3, 2, random.Random(2), ring=P.ring)
    g = gl_M_r(N, P, 3, f)
    for lam in box(3, 2):
        assert g(lam) == f(tuple(x - 1 for x in lam))


def test_M_1_exponents_n2():
    N, P = 2, gl_params(2)
    (q,) = P.ring.gens()
    for k in range(-2, 3):
        # lam - e_1 = (k-1, k) needs one swap to sort; lam - e_2 is sorted
        assert sort_length((k - 1, k)) == 1 and sort_length((k, k - 1)) == 0
        a = gl_M_r(N, P, 1, FiniteFunction(2, {(k - 1, k): P.one}))
        b = gl_M_r(N, P, 1, FiniteFunction(2, {(k, k - 1): P.one}))
        assert a((k, k)) == q ** 2
        assert b((k, k)) == 1


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(1, 3))
def test_M_operators_commute(seed, r, s):
    N, P = 3, gl_params(3)
    f = random_function(3, 2, random.Random(seed), ring=P.ring)
    a = gl_m_r_hat(N, P, r, gl_m_r_hat(N, P, s, f))
    b = gl_m_r_hat(N, P, s, gl_m_r_hat(N, P, r, f))
    assert all(a(l) == b(l) for l in box(3, 1))


def test_hall_littlewood_small():
    P = gl_params(2)
    (q,) = P.ring.gens()
    assert hall_littlewood(2, P, (0, 0)) == GroupAlgebraElem(2, {(0, 0): 1 + q ** 2})
    assert hall_littlewood(2, P, (1, 0)) == GroupAlgebraElem(2, {(1, 0): q, (0, 1): q})
    P3 = gl_params(3)
    (q3,) = P3.ring.gens()
    assert hall_littlewood(3, P3, (0, 0, 0)) == GroupAlgebraElem(
        3, {(0, 0, 0): (1 + q3 ** 2) * (1 + q3 ** 2 + q3 ** 4)})


def test_schur_limit():
    for lam in [(1, 0), (2, 0), (2, 1), (-1, -3)]:
        assert hall_littlewood_t(2, lam, 0) == schur_bialternant(2, lam)
    assert schur_bialternant(3, (1, 0, 0)) == elementary(3, 1)
    for N in (2, 3):
        assert verify_schur_limit(N).passed


def test_morris_V():
    P = gl_params(2)
    (q,) = P.ring.gens()
    for k in range(-2, 3):
        assert morris_V(P, (k, k), {1}) == q ** -1 * (1 + q ** 2)
        assert morris_V(P, (k + 1, k), {1}) == q ** -1
        assert morris_V(P, (k, k), {1, 2}) == 1
    assert dict(morris_pieri(2, P, 2, (1, 0))) == {(2, 1): 1}


@pytest.mark.parametrize("N", [2, 3])
def test_morris_matches_brute_force(N):
    P = gl_params(N)
    basis = HLBasis(N, P)
    for lam in sorted_compositions(N, -1, 2):
        for r in range(1, N + 1):
            assert dict(morris_pieri(N, P, r, lam)) == morris_brute(N, P, r, lam, basis)


def test_morris_brute_catches_wrong_coefficient():
    P = gl_params(2)
    got = morris_brute(2, P, 1, (1, 1))
    want = dict(morris_pieri(2, P, 1, (1, 1)))
    assert got == want
    assert got != {k: 2 * v for k, v in want.items()}


def test_symmetric_action_and_hl_structure():
    N, P = 3, gl_params(3)
    base = random_function(3, 2, random.Random(3), ring=P.ring)
    # symmetrize: constant on S_3-orbits
    f = FiniteFunction(3, {p: base(tuple(sorted(p, reverse=True)))
                           for l in base.values for p in itertools.permutations(l)})
    for r in (1, 2, 3):
        a = gl_symmetric_action(N, P, r, f)
        b = gl_m_r_hat(N, P, r, f)
        for lam in sorted_compositions(3, -2, 2):
            assert a(lam) == b(lam)
    assert verify_hl_structure(N, P, lo=-1, hi=1).passed


@pytest.mark.parametrize("N", [2, 3])
def test_relations_and_central(N):
    P = gl_params(N)
    assert all(r.passed for r in verify_gl_relations(N, P, seeds=(4,)))
    assert all(r.passed for r in verify_gl_central(N, P, seed=4))


def test_relations_numeric_q():
    P = gl_params(3, "1/3")
    assert all(r.passed for r in verify_gl_relations(3, P, seeds=(5,)))


@pytest.mark.parametrize("N", [2, 3])
def test_coordinate_map(N):
    P = gl_params(N)
    assert all(r.passed for r in verify_coordinate_map(N, P, seed=6))
    assert to_fundamental((3, 1, 1)) == (2, 0)


def test_difference_rep_u():
    N, P = 3, gl_params(3)
    D = GLDifferenceRep(N, P)
    f = random_function(3, 2, random.Random(7), ring=P.ring)
    # u^N is the translation by (1, ..., 1)
    g = f
    for _ in range(N):
        g = D.U(g)
    assert all(g(l) == f(tuple(x - 1 for x in l)) for l in box(3, 2))


def test_morris_verify_full_box():
    P = gl_params(2)
    assert all(r.passed for r in verify_morris(2, P, lo=-3, hi=3))
