import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affhecke.rootsys import (
    RootSystemError,
    build_root_system,
    classify_pieri_case,
    norm,
    separating_hyperplane_count,
    weight_ball,
)

LABELS = ["A1", "A1xA1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]


def weights(rank, bound=4):
    return st.tuples(*[st.integers(-bound, bound)] * rank)


def test_a1_data():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == ((2,),)
    assert rs.alpha0 == (2,)
    assert rs.pair((1,), 0) == 1


def test_a2_data():
    rs = build_root_system("A", 2)
    assert len(rs.positive_roots) == 3
    assert rs.alpha0 == (1, 1)  # alpha_1 + alpha_2
    assert rs.coxeter_number_mij(1, 2) == 3


def test_g2_data():
    rs = build_root_system("G2")
    assert len(rs.positive_roots) == 6
    assert rs.coxeter_number_mij(1, 2) == 6


@pytest.mark.parametrize("label", ["D2", "A0", "E6", "G3", "B1"])
def test_unsupported_types_rejected(label):
    with pytest.raises((RootSystemError, ValueError)):
        build_root_system(label)


def test_translation_acts_by_shift():
    rs = build_root_system("A2")
    assert rs.translation((1, -2)).act((3, 1)) == (4, -1)


def test_simple_reflection_a2():
    rs = build_root_system("A2")
    # s_1 omega_1 = omega_1 - alpha_1 with alpha_1 = (2, -1)
    assert rs.s(1, (1, 0)) == (-1, 1)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_affine_reflection_identity(label):
    rs = build_root_system(label)
    s0 = rs.affine_simple(0)
    for x in weight_ball(rs.rank, 2):
        refl = rs.reflect(rs.alpha0_index, x)
        assert s0.act(x) == tuple(a + b for a, b in zip(refl, rs.alpha0))


def test_lengths():
    a1 = build_root_system("A1")
    assert a1.identity().length() == 0
    assert a1.translation((1,)).length() == 1
    assert sum(separating_hyperplane_count(a1.translation((1,)))) == 1


@pytest.mark.parametrize("label", LABELS)
def test_omega_has_length_zero(label):
    rs = build_root_system(label)
    group = rs.omega_group()
    assert any(k == 0 for k, _ in group)
    assert all(u.length() == 0 for _, u in group)


@pytest.mark.parametrize("label,size", [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2), ("C3", 2), ("G2", 1)])
def test_omega_sizes(label, size):
    assert len(build_root_system(label).omega_group()) == size


def test_dominant_rep():
    rs = build_root_system("A2")
    assert rs.dominant_rep((2, 1)) == ((2, 1), rs.identity())
    lp, w = rs.dominant_rep((-1, 0))
    assert lp == (0, 1)
    assert w.length() == 2


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_dominant_rep_properties(label, data):
    rs = build_root_system(label)
    lam = data.draw(weights(rs.rank))
    lp, w = rs.dominant_rep(lam)
    assert rs.is_dominant(lp)
    assert w.act(lam) == lp
    # the inversion set of w_lam is the set of positive roots pairing negatively with lam
    negative = {k for k in range(rs.nroots) if rs.pair(lam, k) < 0}
    assert set(w.inversion_set()) == negative
    assert w.length() == len(negative)


def test_dominance_order():
    rs = build_root_system("A2")
    assert rs.dominance_leq((1, 1), (1, 1))
    assert rs.dominance_leq((0, 0), (1, 1))
    assert not rs.dominance_leq((1, 0), (0, 1))
    assert not rs.dominance_leq((0, 1), (1, 0))


def test_facets():
    a2 = build_root_system("A2")
    reps = set(a2.facet_representatives())
    assert len(reps) == 13
    want = {mu for lam in [(0, 0), (1, 0), (0, 1), (1, 1)] for mu in a2.orbit(lam)}
    assert reps == want
    assert set(build_root_system("A1").facet_representatives()) == {(-1,), (0,), (1,)}
    b2 = build_root_system("B2")
    want = {mu for lam in [(0, 0), (1, 0), (0, 1), (1, 1)] for mu in b2.orbit(lam)}
    assert set(b2.facet_representatives()) == want


def test_theta():
    a1 = build_root_system("A1")
    assert a1.theta((-1,)) == 0
    assert a1.theta((3,)) == 0


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2"])
def test_theta_dichotomy(label):
    rs = build_root_system(label)
    omegas = list(rs.minuscule_weights()) + [rs.alpha0]
    for om in omegas:
        for lam in weight_ball(rs.rank, 3):
            if not rs.is_dominant(lam):
                continue
            for nu in rs.orbit(om):
                mu = tuple(a - b for a, b in zip(lam, nu))
                if rs.dominant(mu) != lam:
                    t = rs.theta(mu)
                    assert t in (0, 1)
                    w = rs.w_of(mu)
                    assert (t == 1) == (nu in [rs.positive_roots[k] for k in w.inversion_set()])


def test_classify_pieri_case():
    a1 = build_root_system("A1")
    case = classify_pieri_case(a1, (3,), (1,))
    assert case["case"] == "i" and case["w"].is_identity()
    case = classify_pieri_case(a1, (1,), (2,))
    assert case["case"] == "ii" and case["j"] == 1 and case["theta"] == 0


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_case_ii_has_theta_zero(label):
    rs = build_root_system(label)
    for lam in weight_ball(rs.rank, 3):
        if rs.is_dominant(lam):
            for nu in rs.orbit(rs.alpha0):
                case = classify_pieri_case(rs, lam, nu)
                if case["case"] == "ii":
                    assert case["theta"] == 0


def test_star():
    rs = build_root_system("A2")
    assert rs.star((1, 0)) == (0, 1)
    assert build_root_system("B2").star((1, 0)) == (1, 0)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(LABELS), st.data())
def test_orbit_is_w0_invariant(label, data):
    rs = build_root_system(label)
    lam = data.draw(weights(rs.rank, 2))
    orb = set(rs.orbit(lam))
    for j in range(1, rs.rank + 1):
        assert {rs.s(j, mu) for mu in orb} == orb
    assert len(rs.weyl_group()) % len(orb) == 0


def test_weight_ball_norm():
    ball = weight_ball(3, 2)
    assert all(norm(l) <= 2 for l in ball)
    assert len(ball) == 25
