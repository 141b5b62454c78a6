import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from affhecke.latfun import (
    FiniteFunction,
    GroupAlgebraElem,
    LazyFunction,
    delta,
    divide_along_line,
    orbit_sum,
    pairing,
    random_function,
    translate,
    weyl_act,
)
from affhecke.qring import MultiplicityParams
from affhecke.rootsys import build_root_system, norm, weight_ball

A2 = build_root_system("A2")


def test_weyl_act_identity_and_translation():
    f = random_function(2, 2, random.Random(3))
    g = weyl_act(A2.identity(), f)
    assert all(g(l) == f(l) for l in weight_ball(2, 3))
    t = translate((1, -1), f)
    assert all(t(l) == f((l[0] - 1, l[1] + 1)) for l in weight_ball(2, 3))


def test_delta_moves_with_w():
    w = A2.element_from_word([1, 2])
    g = weyl_act(w, delta((1, 0)))
    target = w.act((1, 0))
    assert g(target) == 1
    assert all(g(l) == 0 for l in weight_ball(2, 3) if l != target)
    u = A2.omega_group()[1][1]
    g = weyl_act(u, delta((0, 0)))
    assert g(u.act((0, 0))) == 1


def test_pairing():
    f = random_function(2, 2, random.Random(5))
    assert pairing(f, GroupAlgebraElem.monomial((0, 0))) == f((0, 0))
    assert pairing(f, GroupAlgebraElem.monomial((1, -1))) == f((-1, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["A2", "B2", "G2"]))
def test_pairing_unitarity(seed, label):
    rs = build_root_system(label)
    rng = random.Random(seed)
    f = random_function(rs.rank, 2, rng)
    p = GroupAlgebraElem(rs.rank, random_function(rs.rank, 2, rng).values)
    w = rs.weyl_group()[rng.randrange(len(rs.weyl_group()))]
    lam = tuple(rng.randint(-1, 1) for _ in range(rs.rank))
    # (v t_lam f, p) = (f, t_lam v^{-1} p)
    lhs = pairing(weyl_act(w, translate(lam, f)), p)
    rhs_p = GroupAlgebraElem(rs.rank, {tuple(a + b for a, b in zip(w.inverse().act(mu), lam)): c
                                       for mu, c in p.terms.items()})
    assert lhs == pairing(f, rhs_p)


def test_orbit_sums():
    assert orbit_sum(A2, (0, 0)) == GroupAlgebraElem.monomial((0, 0))
    a1 = build_root_system("A1")
    assert orbit_sum(a1, (1,)) == GroupAlgebraElem(1, {(1,): 1, (-1,): 1})
    m = orbit_sum(A2, (1, 0))
    assert set(m.terms) == {(1, 0), (-1, 1), (0, -1)}
    assert m.is_invariant(A2)


def test_group_algebra_product_and_evaluate():
    a1 = build_root_system("A1")
    m = orbit_sum(a1, (1,))
    assert m * m == orbit_sum(a1, (2,)) + 2 * GroupAlgebraElem.monomial((0,))
    x = (Fraction(2),)
    assert m.evaluate(x) == Fraction(5, 2)


def test_divide_along_line():
    a1 = build_root_system("A1")
    P = MultiplicityParams.formal(a1)
    num = GroupAlgebraElem(1, {(0,): P.one, (4,): -P.one})  # 1 - e^{2 alpha}
    quo = divide_along_line(num, (2,), lambda mu: mu[0])
    assert quo == GroupAlgebraElem(1, {(0,): P.one, (2,): P.one})


def test_lazy_function_memo_and_bound():
    calls = []

    def rule(lam):
        calls.append(lam)
        return 7

    f = LazyFunction(1, rule, {(0,), (1,)})
    assert f((0,)) == 7 and f((0,)) == 7
    assert f((5,)) == 0
    assert calls == [(0,)]


def test_random_function_is_seeded_and_bounded():
    a = random_function(3, 2, random.Random(11))
    b = random_function(3, 2, random.Random(11))
    assert a.values == b.values
    assert all(norm(l) <= 2 for l in a.values)
    s = random_function(2, 2, random.Random(1), symmetric_under=A2)
    assert all(s(mu) == s(lam) for lam in s.values for mu in A2.orbit(lam))


def test_finite_function_json_roundtrip():
    f = random_function(2, 2, random.Random(2))
    assert FiniteFunction.from_json(f.to_json()).values == f.values
