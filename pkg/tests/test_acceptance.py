"""Acceptance gate: one test per criterion, each printing PASS/FAIL in the
terminal summary.  Where a criterion's literal statement is false, the test
records FAIL, asserts the corrected statement, and xfails."""

import time

import pytest

from affhecke import gln, heckeops, intertwine, pieri, spherical
from affhecke.latfun import GroupAlgebraElem
from affhecke.qring import MultiplicityParams, poincare_series
from affhecke.rootsys import build_root_system, weight_ball

RANK3 = ["A1", "A1xA1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]
RANK2 = ["A1", "A1xA1", "A2", "B2", "C2", "G2"]


def _failures(results):
    return [f"{r.type}:{r.relation}" for r in results if r.status == "fail"]


def test_criterion_1_a2_braid_table(record):
    rs = build_root_system("A2")
    P = MultiplicityParams.formal(rs)
    q = P.q(1)
    qi = q.inverse()
    # expected multiples of f_0, frozen independently of the implementation
    expected = {lam: 0 for lam in [(0, 0), (1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (-1, 0),
                                   (1, -1), (-1, 1)]}
    expected.update({(1, 1): -qi ** 3, (-1, -1): q ** 3, (1, -2): -q, (-2, 1): -q,
                     (-1, 2): qi, (2, -1): qi})
    t = time.perf_counter()
    table = heckeops.braid_table_A2(P)
    elapsed = time.perf_counter() - t
    got = {tuple(r["weight"]): r["_factor"] for r in table["rows"]}
    ok = table["sides_agree"] and len(got) == 13 and got == expected and elapsed < 1
    record(1, ok, f"13 facets, {elapsed:.2f}s")
    assert table["sides_agree"]
    assert len(got) == 13
    assert got == expected
    assert elapsed < 1


def test_criterion_2_relation_suite(record):
    t = time.perf_counter()
    bad, count = [], 0
    for label in ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3"]:
        rs = build_root_system(label)
        res = heckeops.verify_relations(rs, MultiplicityParams.formal(rs), reps=("difference", "integral"),
                                        seeds=range(1, 6), L=3)
        count += len(res)
        bad += _failures(res)
    elapsed = time.perf_counter() - t
    record(2, not bad and elapsed < 120, f"{count} checks, {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 120


def test_criterion_3_intertwining(record):
    bad, count = [], 0
    for label in RANK3:
        rs = build_root_system(label)
        P = MultiplicityParams.formal(rs)
        res = intertwine.verify_intertwining(rs, P, trials=20, seed=1)
        lam_max = (1,) * rs.rank if rs.rank <= 2 else rs.fundamental_weight(1)
        res += intertwine.verify_roundtrip(rs, P, lam_max, seed=1)
        if rs.rank <= 2:
            res += intertwine.verify_roundtrip(rs, P, (2,) + (1,) * (rs.rank - 1), seed=2)
        count += len(res)
        bad += _failures(res)
    record(3, not bad, f"{count} checks")
    assert not bad, bad


def test_criterion_4_spherical_identities(record):
    literal_bad, corrected_bad, route_bad = [], [], []
    for label in RANK3:
        rs = build_root_system(label)
        P = MultiplicityParams.formal(rs)
        zero = (0,) * rs.rank
        if spherical.macdonald_P(rs, P, zero) != GroupAlgebraElem(rs.rank, {zero: poincare_series(P)}):
            corrected_bad.append(f"{label}: P_0")
        for om in rs.minuscule_weights():
            Pm = spherical.macdonald_P(rs, P, om)
            if Pm != spherical.orbit_sum(rs, om, P.one):
                literal_bad.append(f"{label}:{list(om)}")
            want = spherical.orbit_sum(rs, rs.star(om), P.one) * poincare_series(P, om)
            if Pm != want:
                corrected_bad.append(f"{label}:{list(om)}")
        res = spherical.verify_spherical_routes(rs, P, points=10, seed=1, radius=2)
        route_bad += _failures([res])
    ok = not (literal_bad or corrected_bad or route_bad)
    note = "P_0 and Phi routes hold"
    if literal_bad:
        note += f"; literal P_omega = m_omega fails at {', '.join(literal_bad)}"
    record(4, ok, note)
    assert not corrected_bad, corrected_bad
    assert not route_bad, route_bad
    if literal_bad:
        pytest.xfail("P_omega = W_0,omega(q^2) m_omega* holds instead of P_omega = m_omega")


def test_criterion_5_diagonalization(record):
    t = time.perf_counter()
    literal_bad, bad = [], []
    for label in RANK2:
        rs = build_root_system(label)
        N = MultiplicityParams.numeric(rs, "2/7")
        res = spherical.verify_diagonalization(rs, N, points=10, seed=1)
        if rs.irreducible:
            res += [pieri.verify_diagonalization_M(rs, N, om, points=10, seed=1)
                    for om in pieri.pieri_weights(rs)]
        bad += _failures(res)
        literal_bad += [f"{label}:{r.relation}" for r in res if not r.detail["eigenvalue_at_x"]]
    elapsed = time.perf_counter() - t
    ok = not bad and not literal_bad and elapsed < 300
    note = f"{elapsed:.1f}s; eigenvalue m_lam(x^-1) holds everywhere"
    if literal_bad:
        note += f"; literal m_lam(x) fails at {', '.join(literal_bad)}"
    record(5, ok, note)
    assert not bad, bad
    assert elapsed < 300
    if literal_bad:
        pytest.xfail("the eigenvalue is m_lam(x^-1); m_lam(x) only for self-dual lam")


def test_criterion_6_pieri(record):
    bad, count = [], 0
    for label in ["A1", "A2", "B2", "C2", "G2"]:
        rs = build_root_system(label)
        res = pieri.verify_pieri(rs, MultiplicityParams.formal(rs), radius=3)
        count += len(res)
        bad += _failures(res)
    a1 = build_root_system("A1")
    closed = pieri.a1_closed_forms(MultiplicityParams.formal(a1), kmax=5)
    bad += _failures([closed])
    record(6, not bad, f"{count} omega sweeps + A1 closed forms")
    assert not bad, bad


def test_criterion_7_unitarity(record):
    bad, count = [], 0
    for label in RANK3:
        rs = build_root_system(label)
        for q in ("1/2", "2/3"):
            N = MultiplicityParams.numeric(rs, q)
            res = spherical.verify_delta_identities(rs, N, radius=4)
            res += spherical.verify_unitarity(rs, N, trials=20, seed=1, L=4)
            count += len(res)
            bad += _failures(res)
    record(7, not bad, f"{count} checks")
    assert not bad, bad


def test_criterion_8_gln(record):
    bad, count = [], 0
    for N in (2, 3, 4):
        P = gln.gl_params(N, "formal")
        res = gln.verify_gl_relations(N, P, seeds=(1, 2, 3))
        res += gln.verify_gl_central(N, P)
        if N <= 3:
            res += gln.verify_morris(N, P, lo=-3, hi=3)
            res += gln.verify_coordinate_map(N, P)
        res += [gln.verify_hl_structure(N, P), gln.verify_schur_limit(N)]
        count += len(res)
        bad += _failures(res)
    record(8, not bad, f"{count} checks")
    assert not bad, bad


def test_criterion_9_minuscule_identities(record):
    bad, count = [], 0
    for label in RANK3:
        rs = build_root_system(label)
        res = intertwine.verify_minuscule_identities(rs, MultiplicityParams.formal(rs), seed=1, radius=3)
        count += sum(r.status == "pass" for r in res)
        bad += _failures(res)
    record(9, not bad, f"{count} checks")
    assert not bad, bad


def test_weight_ball_is_l1():
    # the norm bounding every criterion's scan
    assert set(weight_ball(2, 1)) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
