"""Macdonald spherical functions, the diagonalization of the center, and the
Hilbert-space weights delta and Delta.

Spectral points are multiplicative: x = (x_1, ..., x_n) nonzero rationals with
x^lam = prod x_i^{lam_i} (fundamental-weight coordinates of lam), standing in
for the plane wave e^{i<lam, xi>}.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

from .heckeops import CheckResult, DifferenceRep, PolynomialRep, _ce, central_word_operator
from .intertwine import IntertwinerContext
from .latfun import (
    divide_along_line,
    FiniteFunction,
    GroupAlgebraElem,
    LazyFunction,
    monomial_value,
    orbit_sum,
    random_function,
    weyl_act,
)
from .qring import (
    MultiplicityParams,
    RingElem,
    divide,
    e_q,
    poincare_brute,
    poincare_product,
    poincare_series,
    q_of_element,
    q_t,
)
from .rootsys import RootSystem, weight_ball

Weight = tuple


class DegenerateSpectralPoint(ValueError):
    """x^alpha = 1 for some root; resample the spectral point."""


# -------------------------------------------------------- group algebra
def divide_by_one_minus(p: GroupAlgebraElem, alpha: Weight, rs: RootSystem) -> GroupAlgebraElem:
    """Exact quotient p / (1 - e^alpha), lines parametrized by the rho^vee height."""
    return divide_along_line(p, alpha, rs.pair_rho_vee)


def macdonald_P(rs: RootSystem, params: MultiplicityParams, lam: Weight) -> GroupAlgebraElem:
    """P_lam = sum_w e^{-w lam} prod_{alpha>0} (1 - q_alpha^2 e^{w alpha}) / (1 - e^{w alpha}),
    by one common denominator prod (1 - e^alpha) and exact division."""
    lam = tuple(lam)
    rho = rs.rho
    one = params.one
    num = GroupAlgebraElem(rs.rank)
    for w in rs.weyl_group():
        sign = -1 if w.length() % 2 else 1
        wrho = w.act(rho)
        shift = tuple(-a + r - b for a, r, b in zip(w.act(lam), rho, wrho))
        term = GroupAlgebraElem.monomial(shift, one * sign)
        for k, a in enumerate(rs.positive_roots):
            q2 = params.q_root(k) ** 2
            term = term * GroupAlgebraElem(rs.rank, {(0,) * rs.rank: one, w.act(a): -q2})
        num = num + term
    for a in rs.positive_roots:
        num = divide_by_one_minus(num, a, rs)
    return num


def one_zero_route(rs: RootSystem, params: MultiplicityParams, lam: Weight) -> GroupAlgebraElem:
    """T(1_0) e^{-lam} with 1_0 = sum_w q_w T_w in the Demazure-Lusztig representation."""
    P = PolynomialRep(rs, params)
    start = GroupAlgebraElem.monomial(tuple(-x for x in lam), params.one)
    out = GroupAlgebraElem(rs.rank)
    for w in rs.weyl_group():
        out = out + P.T_word(w.word(), start) * q_of_element(w, params)
    return out


def p_basis(rs, params, lam: Weight) -> GroupAlgebraElem:
    """p_lam = e_q(lam) P_{lam*}."""
    return macdonald_P(rs, params, rs.star(tuple(lam))) * e_q(tuple(lam), params)


# ---------------------------------------------------------- evaluation
def check_spectral_point(rs: RootSystem, x: Sequence) -> tuple:
    x = tuple(Fraction(v) for v in x)
    if len(x) != rs.rank:
        raise ValueError(f"spectral point needs {rs.rank} coordinates")
    if any(v == 0 for v in x):
        raise DegenerateSpectralPoint("spectral coordinates must be nonzero")
    for a in rs.positive_roots:
        if monomial_value(x, a) == 1:
            raise DegenerateSpectralPoint(
                f"x^alpha = 1 for alpha = {list(a)}; resample the spectral point"
            )
    return x


def random_spectral_point(rs: RootSystem, rng: random.Random, size: int = 9) -> tuple:
    while True:
        x = tuple(Fraction(rng.randint(1, size), rng.randint(1, size)) * rng.choice((1, -1)) for _ in range(rs.rank))
        try:
            return check_spectral_point(rs, x)
        except DegenerateSpectralPoint:
            continue


class SphericalEvaluator:
    """Phi_x(lam) = e_q(lam_+) sum_w x^{w lam_+} prod_{alpha>0}
    (1 - q_alpha^2 x^{-w alpha}) / (1 - x^{-w alpha})."""

    def __init__(self, rs: RootSystem, params: MultiplicityParams, x: Sequence):
        self.rs = rs
        self.params = params
        self.x = check_spectral_point(rs, x)
        self._cache: dict = {}
        self._factors = None

    def _weights(self):
        if self._factors is None:
            rs, params, x = self.rs, self.params, self.x
            facs = []
            for w in rs.weyl_group():
                c = params.one
                for k, a in enumerate(rs.positive_roots):
                    xa = monomial_value(x, tuple(-v for v in w.act(a)))
                    c = c * (1 - params.q_root(k) ** 2 * xa) * (Fraction(1) / (1 - xa))
                facs.append((w, c))
            self._factors = facs
        return self._factors

    def phi(self, lam: Weight):
        """phi_x(lam) = sum_w x^{w lam} c(w x); defined for every lam."""
        total = 0
        for w, c in self._weights():
            total = total + c * monomial_value(self.x, w.act(tuple(lam)))
        return total

    def __call__(self, lam: Weight):
        lp = self.rs.dominant(tuple(lam))
        if lp not in self._cache:
            self._cache[lp] = e_q(lp, self.params) * self.phi(lp)
        return self._cache[lp]

    def as_function(self) -> LazyFunction:
        return LazyFunction(self.rs.rank, self, None)


def spherical_value(rs, params, lam: Weight, x: Sequence):
    return SphericalEvaluator(rs, params, x)(tuple(lam))


def phi_from_P(rs, params, x, mu: Weight, cache: dict | None = None):
    """(plane wave, P_mu): the pairing of lam -> x^lam with P_mu."""
    if cache is None:
        P = macdonald_P(rs, params, mu)
    else:
        if mu not in cache:
            cache[mu] = macdonald_P(rs, params, mu)
        P = cache[mu]
    total = 0
    for nu, c in P.terms.items():
        total = total + c * monomial_value(x, tuple(-v for v in nu))
    return total


def spherical_via_J(rs, params, lam: Weight, x: Sequence, ctx: IntertwinerContext | None = None, cache=None):
    """(J phi_x)(lam), phi_x(mu) taken from the group-algebra expansion of P_mu."""
    ctx = ctx or IntertwinerContext(rs, params)
    cache = {} if cache is None else cache
    total = 0
    for mu, k in ctx.row(tuple(lam)).items():
        total = total + k * phi_from_P(rs, params, x, mu, cache)
    return total


def eigenvalue(p: GroupAlgebraElem, x: Sequence):
    """E_p(x) = sum_lam c_lam x^lam."""
    return p.evaluate(x)


def inverse_point(x: Sequence) -> tuple:
    return tuple(1 / Fraction(v) for v in x)


# ------------------------------------------------------------- checks
def verify_P_identities(rs: RootSystem, params: MultiplicityParams) -> list[CheckResult]:
    """P_0 = W_0(q^2); for minuscule omega both the literal P_omega = m_omega
    and the form P_omega = W_0,omega(q^2) m_omega* that the defining sum gives;
    the second route T(1_0) e^{-lam} on small weights."""
    out = []
    z = (0,) * rs.rank
    P0 = macdonald_P(rs, params, z)
    W = poincare_series(params)
    ok = P0 == GroupAlgebraElem(rs.rank, {z: W})
    out.append(CheckResult("P_0 = W_0(q^2)", rs.label, rs.rank, "pass" if ok else "fail",
                           None if ok else _ce(z, str(P0), str(W))))
    for om in rs.minuscule_weights():
        Pm = macdonald_P(rs, params, om)
        m = orbit_sum(rs, om, params.one)
        ok = Pm == m
        out.append(CheckResult(f"P_omega = m_omega omega={list(om)}", rs.label, rs.rank,
                               "pass" if ok else "deviation", None if ok else _ce(om, str(Pm), str(m)),
                               detail={"literal": True, "see": "P_omega = W_0,omega(q^2) m_omega*"}))
        # P_lam sums e^{-w lam}, so its support is the orbit of -omega = W_0 omega*
        Wst = poincare_series(params, om)
        ms = orbit_sum(rs, rs.star(om), params.one) * Wst
        ok = Pm == ms
        out.append(CheckResult(f"P_omega = W_0,omega(q^2) m_omega* omega={list(om)}", rs.label, rs.rank,
                               "pass" if ok else "fail", None if ok else _ce(om, str(Pm), str(ms))))
    bad = None
    for lam in weight_ball(rs.rank, 1):
        a, b = macdonald_P(rs, params, lam), one_zero_route(rs, params, lam)
        if a != b:
            bad = _ce(lam, str(a), str(b))
            break
    out.append(CheckResult("P_lam = T(1_0) e^{-lam}", rs.label, rs.rank, "pass" if bad is None else "fail", bad))
    bad = None
    for lam in weight_ball(rs.rank, 2):
        P = macdonald_P(rs, params, lam)
        if not P.is_invariant(rs):
            bad = _ce(lam, str(P), "W_0-invariant")
            break
    out.append(CheckResult("P_lam is W_0-invariant", rs.label, rs.rank, "pass" if bad is None else "fail", bad))
    return out


def verify_spherical_routes(rs, params, points: int = 10, seed: int = 1, radius: int = 2) -> CheckResult:
    """Closed formula for Phi_x agrees with J applied to mu -> (x, P_mu)."""
    rng = random.Random(seed)
    ctx = IntertwinerContext(rs, params)
    cache: dict = {}
    for _ in range(points):
        x = random_spectral_point(rs, rng)
        ev = SphericalEvaluator(rs, params, x)
        for lam in weight_ball(rs.rank, radius):
            a, b = ev(lam), spherical_via_J(rs, params, lam, x, ctx, cache)
            if a != b:
                return CheckResult("Phi closed form = J phi", rs.label, rs.rank, "fail",
                                   dict(_ce(lam, a, b), x=[str(v) for v in x]))
    return CheckResult("Phi closed form = J phi", rs.label, rs.rank, "pass",
                       detail={"points": points, "radius": radius})


def verify_diagonalization(
    rs: RootSystem,
    params: MultiplicityParams,
    lam_list: Iterable[Weight] | None = None,
    points: int = 10,
    seed: int = 1,
    radius: int = 1,
) -> list[CheckResult]:
    """(widehat{m_lam(Y)} Phi_x)(mu) = E Phi_x(mu) at random rational x.
    The eigenvalue is reported for both candidate conventions; the check uses
    m_lam at the point that the operator identity singles out."""
    rng = random.Random(seed)
    D = DifferenceRep(rs, params)
    if lam_list is None:
        lam_list = [l for l in weight_ball(rs.rank, 2) if rs.is_dominant(l) and any(l)]
    out = []
    xs = [random_spectral_point(rs, rng) for _ in range(points)]
    evs = [SphericalEvaluator(rs, params, x) for x in xs]
    window = weight_ball(rs.rank, radius)
    for lam in lam_list:
        lam = tuple(lam)
        m = orbit_sum(rs, lam)
        bad = None
        at_x = at_xinv = True
        for x, ev in zip(xs, evs):
            F = ev.as_function()
            G = central_word_operator(D, lam, F)
            e_plus, e_minus = eigenvalue(m, x), eigenvalue(m, inverse_point(x))
            for mu in window:
                g, f = G(mu), F(mu)
                if g != e_plus * f:
                    at_x = False
                if g != e_minus * f:
                    at_xinv = False
                    if bad is None:
                        bad = dict(_ce(mu, g, e_minus * f), x=[str(v) for v in x])
        status = "pass" if at_xinv else "fail"
        out.append(
            CheckResult(
                f"diagonalization m_{list(lam)}(Y)", rs.label, rs.rank, status, bad,
                detail={"points": points, "eigenvalue_at_x": at_x, "eigenvalue_at_x_inverse": at_xinv},
            )
        )
    return out


# ------------------------------------------------------ Hilbert weights
def _require_unit_interval(params: MultiplicityParams):
    if params.is_formal:
        raise ValueError("Hilbert-space weights need numeric q in (0, 1)")
    for v in params.values:
        if not 0 < v < 1:
            raise ValueError(f"q = {v} is outside (0, 1)")


def delta_weight(rs, params, lam: Weight) -> Fraction:
    """delta_lam = W_0(q^2)^{-1} q_{u_lam}^{-2}."""
    _require_unit_interval(params)
    u = rs.u_of(tuple(lam))
    return Fraction(1) / (Fraction(poincare_brute(params)) * Fraction(q_of_element(u, params)) ** 2)


def Delta_weight(rs, params, lam: Weight, route: str = "stabilizer") -> Fraction:
    """Delta_lam for dominant lam by one of three routes: 'orbit' (sum of delta
    over the orbit), 'stabilizer' (q_{t_lam}^{-2} / W_{0,lam}(q^2)) or
    'product' (e_q(-2 lam) times the product over roots orthogonal to lam)."""
    _require_unit_interval(params)
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if route == "orbit":
        return sum((delta_weight(rs, params, mu) for mu in rs.orbit(lam)), Fraction(0))
    if route == "stabilizer":
        return Fraction(1) / (Fraction(q_t(lam, params)) ** 2 * Fraction(poincare_brute(params, lam)))
    if route == "product":
        out = Fraction(e_q(tuple(-2 * v for v in lam), params))
        for k, a in enumerate(rs.positive_roots):
            if rs.pair(lam, k) == 0:
                ea = Fraction(e_q(a, params))
                out *= (1 - ea) / (1 - Fraction(params.q_root(k)) ** 2 * ea)
        return out
    raise ValueError(f"unknown route {route!r}")


def inner_delta(rs, params, f, g, support) -> Fraction:
    total = Fraction(0)
    for lam in support:
        a = f(lam)
        if a:
            b = g(lam)
            if b:
                total += Fraction(a) * Fraction(b) * delta_weight(rs, params, lam)
    return total


def inner_Delta(rs, params, f, g, support) -> Fraction:
    total = Fraction(0)
    for lam in support:
        if rs.is_dominant(lam):
            a = f(lam)
            if a:
                b = g(lam)
                if b:
                    total += Fraction(a) * Fraction(b) * Delta_weight(rs, params, lam)
    return total


def verify_delta_identities(rs, params, radius: int = 4) -> list[CheckResult]:
    out = []
    bad = None
    for lam in weight_ball(rs.rank, radius):
        if rs.is_dominant(lam):
            vals = {r: Delta_weight(rs, params, lam, r) for r in ("orbit", "stabilizer", "product")}
            if len(set(vals.values())) != 1:
                bad = _ce(lam, str(vals["orbit"]), f"{vals['stabilizer']} / {vals['product']}")
                break
    out.append(CheckResult("Delta: orbit = stabilizer = product", rs.label, rs.rank,
                           "pass" if bad is None else "fail", bad))
    D = DifferenceRep(rs, params)
    bad = None
    for lam in weight_ball(rs.rank, 2):
        d = delta_weight(rs, params, lam)
        for j in range(0 if rs.irreducible else 1, rs.rank + 1):
            c = Fraction(D.chi(j, lam))
            if delta_weight(rs, params, rs.s(j, lam)) != c * c * d:
                bad = _ce(lam, f"delta(s_{j} lam)", "chi^2 delta")
        for _, u in (rs.omega_group() if rs.irreducible else ()):
            if delta_weight(rs, params, u.act(lam)) != d:
                bad = _ce(lam, "delta(u lam)", "delta(lam)")
    out.append(CheckResult("delta symmetries", rs.label, rs.rank, "pass" if bad is None else "fail", bad))
    return out


def _bound(F):
    return F.support_bound


def verify_unitarity(rs, params, trials: int = 20, seed: int = 1, L: int = 4,
                     central_radius: int = 1) -> list[CheckResult]:
    """<T_j f, g>_delta = <f, T_j g>_delta, <u f, g> = <f, u^{-1} g>, and
    <m_lam(Y) f, g>_Delta = <f, m_{lam*}(Y) g>_Delta on invariant f, g."""
    _require_unit_interval(params)
    rng = random.Random(seed)
    D = DifferenceRep(rs, params)
    gens = list(range(0 if rs.irreducible else 1, rs.rank + 1))
    omega = [u for k, u in rs.omega_group() if k] if rs.irreducible else []
    out = []
    bad_T = bad_u = None
    for _ in range(trials):
        f = random_function(rs.rank, L, rng)
        g = random_function(rs.rank, L, rng)
        for j in gens:
            Tf, Tg = D.T(j, f), D.T(j, g)
            supp = set(Tf.support_bound) | set(Tg.support_bound)
            a = inner_delta(rs, params, Tf, g, supp)
            b = inner_delta(rs, params, f, Tg, supp)
            if a != b and bad_T is None:
                bad_T = dict(_ce(f"T{j}", a, b))
        for u in omega:
            uf, ug = weyl_act(u, f), weyl_act(u.inverse(), g)
            supp = set(uf.support_bound) | set(ug.support_bound)
            a = inner_delta(rs, params, uf, g, supp)
            b = inner_delta(rs, params, f, ug, supp)
            if a != b and bad_u is None:
                bad_u = dict(_ce("u", a, b))
    out.append(CheckResult("adjointness T_j (delta)", rs.label, rs.rank, "pass" if bad_T is None else "fail",
                           bad_T, detail={"trials": trials, "q": [str(v) for v in params.values]}))
    if omega:
        out.append(CheckResult("adjointness u (delta)", rs.label, rs.rank, "pass" if bad_u is None else "fail",
                               bad_u, detail={"trials": trials}))
    lams = [l for l in weight_ball(rs.rank, central_radius) if rs.is_dominant(l) and any(l)]
    bad = None
    ctrials = max(1, trials // 4)
    for lam in lams:
        for _ in range(ctrials):
            f = random_function(rs.rank, 2, rng, symmetric_under=rs)
            g = random_function(rs.rank, 2, rng, symmetric_under=rs)
            Mf = central_word_operator(D, lam, f)
            Mg = central_word_operator(D, rs.star(lam), g)
            supp = set(Mf.support_bound) | set(Mg.support_bound) | set(f.support_bound) | set(g.support_bound)
            a = inner_Delta(rs, params, Mf, g, supp)
            b = inner_Delta(rs, params, f, Mg, supp)
            if a != b and bad is None:
                bad = _ce(lam, a, b)
    out.append(CheckResult("adjointness m_lam(Y) vs m_lam*(Y) (Delta)", rs.label, rs.rank,
                           "pass" if bad is None else "fail", bad, detail={"weights": [list(l) for l in lams]}))
    return out


def norm_estimates(rs, params, trials: int = 10, seed: int = 1, L: int = 3) -> dict:
    """Informational: max of ||T_j f||^2 / ||f||^2 over random f (not asserted)."""
    _require_unit_interval(params)
    rng = random.Random(seed)
    D = DifferenceRep(rs, params)
    est = {}
    for j in range(0 if rs.irreducible else 1, rs.rank + 1):
        best = Fraction(0)
        for _ in range(trials):
            f = random_function(rs.rank, L, rng)
            if not f.values:
                continue
            Tf = D.T(j, f)
            r = inner_delta(rs, params, Tf, Tf, Tf.support_bound) / inner_delta(rs, params, f, f, f.support_bound)
            best = max(best, r)
        est[f"T{j}"] = float(best)
    return est
