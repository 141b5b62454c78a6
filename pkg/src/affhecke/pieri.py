"""Explicit action of the central elements m_omega(Y) for (quasi-)minuscule
omega, and the Pieri rule for the spherical basis p_lam = e_q(lam) P_{lam*}.

Two independent routes are compared throughout: the word operator
sum_{mu in W_0 omega} Y^mu in the difference representation, and the closed
form eps M_omega eps^{-1} with its symmetric reduction to V/U coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .heckeops import CheckResult, DifferenceRep, _ce, central_word_operator
from .latfun import GroupAlgebraElem, LatticeFunction, LazyFunction, orbit_sum, random_function
from .qring import (
    MultiplicityParams,
    class_exponents_q_w,
    divide,
    e_q,
    q_of_element,
    q_t,
)
from .rootsys import RootSystem, RootSystemError, classify_pieri_case, weight_ball

Weight = tuple


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _q_inv(w, params):
    return params.monomial(tuple(-e for e in class_exponents_q_w(w, params.rs)))


def check_omega(rs: RootSystem, omega: Weight) -> str:
    """'minuscule' or 'quasi'; raises for any other weight."""
    omega = tuple(omega)
    if rs.is_minuscule(omega):
        return "minuscule"
    if rs.alpha0 is not None and omega == rs.alpha0:
        return "quasi"
    raise RootSystemError(f"{list(omega)} is neither minuscule nor quasi-minuscule")


def pieri_weights(rs: RootSystem) -> list[Weight]:
    """All minuscule fundamental weights followed by the quasi-minuscule alpha_0."""
    out = list(rs.minuscule_weights())
    if rs.alpha0 is not None and rs.alpha0 not in out:
        out.append(rs.alpha0)
    return out


def resolve_omega(rs: RootSystem, spec) -> Weight:
    """'quasi', 'minuscule' (the first one) or an explicit weight."""
    if spec in (None, "quasi"):
        return rs.alpha0
    if spec == "minuscule":
        ms = rs.minuscule_weights()
        if not ms:
            raise RootSystemError(f"{rs.label} has no minuscule weights")
        return ms[0]
    omega = tuple(int(v) for v in spec)
    check_omega(rs, omega)
    return omega


def is_negative_root(rs: RootSystem, nu: Weight) -> bool:
    return _neg(nu) in rs.positive_roots


# ---------------------------------------------------------- coefficients
@dataclass
class PieriCoefficients:
    """Coefficients of M_omega at (lam, nu), plus V and U where lam is dominant."""

    lam: Weight
    nu: Weight
    a: object
    b: object
    eps: int
    V: object | None = None
    U: object | None = None

    def to_json(self) -> dict:
        from .qring import ring_elem_to_str

        d = {"lambda": list(self.lam), "nu": list(self.nu), "a": ring_elem_to_str(self.a),
             "b": ring_elem_to_str(self.b), "eps": self.eps}
        if self.V is not None:
            d["V"] = ring_elem_to_str(self.V)
        if self.U is not None:
            d["U"] = ring_elem_to_str(self.U)
        return d


def eps_coeff(rs: RootSystem, lam: Weight, nu: Weight) -> int:
    lp, wl = rs.dominant_rep(lam)
    mu = _sub(lam, nu)
    if rs.dominant(mu) != lp:
        return rs.theta(wl.act(mu))
    return int(is_negative_root(rs, nu))


def a_coeff(rs, params, lam: Weight, nu: Weight):
    _, wl = rs.dominant_rep(lam)
    v = rs.w_of(wl.act(_sub(lam, nu)))
    return q_of_element(v, params) * q_of_element(v * wl, params) * _q_inv(wl, params)


def b_coeff(rs, params, lam: Weight, nu: Weight):
    e = eps_coeff(rs, lam, nu)
    if not e:
        return 0
    _, wl = rs.dominant_rep(lam)
    q0i = params.qinv(0)
    return (1 - q0i * q0i) * e_q(wl.act(nu), params)


def coefficients(rs, params, lam: Weight, nu: Weight, omega: Weight | None = None) -> PieriCoefficients:
    lam, nu = tuple(lam), tuple(nu)
    pc = PieriCoefficients(lam, nu, a_coeff(rs, params, lam, nu), b_coeff(rs, params, lam, nu),
                           eps_coeff(rs, lam, nu))
    if rs.is_dominant(lam):
        pc.V = V_coeff(rs, params, lam, nu)
        pc.U = U_coeff(rs, params, lam, omega or rs.dominant(nu))
    return pc


# --------------------------------------------------------------- operators
def epsilon_transform(rs, params, f: LatticeFunction) -> LazyFunction:
    """(eps f)(lam) = q_{t_lam} f(w_o lam)."""
    wo = rs.longest_element()

    def rule(lam):
        v = f(wo.act(lam))
        return q_t(lam, params) * v if v else 0

    return LazyFunction(f.rank, rule)


def epsilon_inverse(rs, params, f: LatticeFunction) -> LazyFunction:
    """(eps^{-1} g)(lam) = q_{t_lam}^{-1} g(w_o lam)."""
    wo = rs.longest_element()

    def rule(lam):
        v = f(wo.act(lam))
        return divide(v, q_t(lam, params)) if v else 0

    return LazyFunction(f.rank, rule)


def apply_M_omega(rs, params, omega: Weight, f: LatticeFunction) -> LazyFunction:
    """(M f)(lam) = sum_{nu in W_0 omega} a_{lam,nu} f(lam - nu) + b_{lam,nu} f(lam)."""
    omega = tuple(omega)
    check_omega(rs, omega)
    orbit = rs.orbit(omega)

    def rule(lam):
        total = 0
        diag = 0
        for nu in orbit:
            v = f(_sub(lam, nu))
            if v:
                total = total + a_coeff(rs, params, lam, nu) * v
            diag = diag + b_coeff(rs, params, lam, nu)
        if diag:
            v = f(lam)
            if v:
                total = total + diag * v
        return total

    return LazyFunction(f.rank, rule)


def m_omega_hat(rs, params, omega: Weight, f: LatticeFunction) -> LazyFunction:
    """eps M_omega eps^{-1} f."""
    return epsilon_transform(rs, params, apply_M_omega(rs, params, omega, epsilon_inverse(rs, params, f)))


# ------------------------------------------------------ symmetric form
def V_coeff(rs, params, lam: Weight, nu: Weight):
    """e_q(-nu) prod over alpha > 0 with <lam, alpha^vee> = 0 < <nu, alpha^vee>
    of (1 - q_alpha^2 e_q(alpha)) / (1 - e_q(alpha))."""
    lam, nu = tuple(lam), tuple(nu)
    num, den = params.one, params.one
    for k, a in enumerate(rs.positive_roots):
        if rs.pair(lam, k) == 0 and rs.pair(nu, k) > 0:
            ea = e_q(a, params)
            num = num * (1 - params.q_root(k) ** 2 * ea)
            den = den * (1 - ea)
    return e_q(_neg(nu), params) * divide(num, den)


def U_coeff(rs, params, lam: Weight, mu: Weight):
    """0 for mu_+ minuscule; otherwise sum_{nu in W_0 mu} e_q(nu) minus the V's
    with lam + nu dominant."""
    lam, mu = tuple(lam), tuple(mu)
    if check_omega(rs, rs.dominant(mu)) == "minuscule":
        return 0
    total = 0
    for nu in rs.orbit(rs.dominant(mu)):
        total = total + e_q(nu, params)
        if rs.is_dominant(_add(lam, nu)):
            total = total - V_coeff(rs, params, lam, nu)
    return total


def V_alt_sum(rs, params, lam: Weight, nu: Weight):
    """V_{lam,-nu} as q_{t_lam} q_{t_{lam-nu}}^{-1} sum_{nu': (lam-nu')_+ = lam-nu} q_{w_{lam-nu'}}^2."""
    target = _sub(lam, nu)
    total = 0
    for n2 in rs.orbit(rs.dominant(nu)):
        mu = _sub(lam, n2)
        if rs.dominant(mu) == target:
            total = total + q_of_element(rs.w_of(mu), params) ** 2
    return divide(q_t(lam, params) * total, q_t(target, params))


def V_alt_stabilizer(rs, params, lam: Weight, nu: Weight):
    """V_{lam,-nu} as e_q(nu) W_{0,lam}(q^2) / (W_{0,lam} cap W_{0,lam-nu})(q^2)."""
    mu = _sub(lam, nu)
    full = sum((q_of_element(w, params) ** 2 for w in rs.stabilizer(lam)), 0)
    part = sum((q_of_element(w, params) ** 2 for w in rs.stabilizer(lam) if w.act(mu) == mu), 0)
    return e_q(nu, params) * divide(full, part)


def U_alt(rs, params, lam: Weight, omega: Weight, route: str = "eps"):
    """U_{lam,-omega} from the diagonal part of M_omega.  ``route`` 'eps' sums
    eps_{lam,nu} e_q(nu); 'theta' uses theta(lam - nu) over nu with
    w_{lam-nu} lam = lam."""
    omega = tuple(omega)
    q0i = params.qinv(0)
    total = 0
    extra = 0
    for nu in rs.orbit(omega):
        mu = _sub(lam, nu)
        mp, w = rs.dominant_rep(mu)
        if mp == lam:
            total = total + q_of_element(w, params) ** 2
        if route == "eps":
            if eps_coeff(rs, lam, nu):
                extra = extra + e_q(nu, params)
        elif w.act(lam) == lam and rs.theta(mu):
            extra = extra + rs.theta(mu) * e_q(nu, params)
    if extra:
        total = total + (1 - q0i * q0i) * extra
    return total


def symmetric_action(rs, params, omega: Weight, f) -> LazyFunction:
    """U_{lam,-omega} f(lam) + sum_{nu: lam - nu dominant} V_{lam,-nu} f(lam - nu) on P^+,
    extended to P by W_0-invariance."""
    omega = tuple(omega)
    orbit = rs.orbit(omega)

    def rule(lam):
        lam = rs.dominant(lam)
        total = 0
        u = U_coeff(rs, params, lam, _neg(omega))
        if u:
            total = total + u * f(lam)
        for nu in orbit:
            mu = _sub(lam, nu)
            if rs.is_dominant(mu):
                v = f(mu)
                if v:
                    total = total + V_coeff(rs, params, lam, _neg(nu)) * v
        return total

    return LazyFunction(rs.rank, rule)


# ------------------------------------------------------------ Pieri rule
def pieri_expand(rs, params, omega: Weight, lam: Weight) -> list[tuple[Weight, object]]:
    """[(mu, c_mu)] with m_omega p_lam = sum c_mu p_mu, from the V/U coefficients."""
    omega, lam = tuple(omega), tuple(lam)
    check_omega(rs, omega)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    out = []
    u = U_coeff(rs, params, lam, omega)
    if u:
        out.append((lam, u))
    for nu in rs.orbit(omega):
        mu = _add(lam, nu)
        if rs.is_dominant(mu):
            out.append((mu, V_coeff(rs, params, lam, nu)))
    return sorted(out, key=lambda t: rs.order_key(t[0]), reverse=True)


class PBasis:
    """Cache of p_mu = e_q(mu) P_{mu*} with triangular re-expansion."""

    def __init__(self, rs, params):
        from .spherical import p_basis

        self.rs, self.params = rs, params
        self._p = p_basis
        self._cache: dict = {}

    def __call__(self, mu: Weight) -> GroupAlgebraElem:
        mu = tuple(mu)
        if mu not in self._cache:
            self._cache[mu] = self._p(self.rs, self.params, mu)
        return self._cache[mu]

    def expand(self, g: GroupAlgebraElem) -> dict:
        """Coefficients of a W_0-invariant g in the p-basis.  The leading
        coefficient of p_mu at e^mu is not a unit, so each step is an exact
        division whose failure means g is not in the span."""
        rs = self.rs
        rem = g
        out: dict = {}
        while rem:
            dom = [mu for mu in rem.terms if rs.is_dominant(mu)]
            top = [mu for mu in dom if not any(nu != mu and rs.dominance_leq(mu, nu) for nu in dom)]
            mu = max(top, key=rs.order_key)
            p = self(mu)
            lead = p.coeff(mu)
            if not lead:
                raise ArithmeticError(f"p_{list(mu)} has zero leading coefficient")
            c = divide(rem.coeff(mu), lead)
            out[mu] = c
            rem = rem - p * c
        return out


def pieri_brute(rs, params, omega: Weight, lam: Weight, basis: PBasis | None = None) -> dict:
    basis = basis or PBasis(rs, params)
    prod = orbit_sum(rs, tuple(omega), params.one) * basis(lam)
    return basis.expand(prod)


def verify_pieri(rs, params, omega: Weight | None = None, radius: int = 3) -> list[CheckResult]:
    """Formula expansion equals brute-force re-expansion for every dominant lam
    with norm <= radius, for each (quasi-)minuscule omega (or the given one)."""
    omegas = [tuple(omega)] if omega is not None else pieri_weights(rs)
    basis = PBasis(rs, params)
    out = []
    lams = [l for l in weight_ball(rs.rank, radius) if rs.is_dominant(l)]
    for om in omegas:
        bad = None
        for lam in lams:
            want = {mu: c for mu, c in pieri_expand(rs, params, om, lam)}
            got = pieri_brute(rs, params, om, lam, basis)
            if want != got:
                bad = dict(_ce(lam, {str(list(k)): str(v) for k, v in got.items()},
                               {str(list(k)): str(v) for k, v in want.items()}), omega=list(om))
                break
        out.append(CheckResult(f"Pieri rule omega={list(om)}", rs.label, rs.rank,
                               "pass" if bad is None else "fail", bad, detail={"radius": radius}))
    return out


def a1_closed_forms(params, kmax: int = 4) -> CheckResult:
    """m_{omega_1} p_0 = q^{-1}(1+q^2) p_{omega_1}; m_{omega_1} p_k = q^{-1} p_{k+1} + q p_{k-1}."""
    rs = params.rs
    if rs.label != "A1":
        raise ValueError("A1 only")
    q = params.q(1)
    qi = params.qinv(1)
    for k in range(kmax + 1):
        got = dict(pieri_expand(rs, params, (1,), (k,)))
        want = {(1,): qi * (1 + q * q)} if k == 0 else {(k + 1,): qi, (k - 1,): q}
        want = {m: params.coerce(c) if params.is_formal else c for m, c in want.items()}
        if got != want:
            return CheckResult("A1 Pieri closed forms", "A1", 1, "fail", _ce((k,), str(got), str(want)))
        basis = PBasis(rs, params)
        lhs = orbit_sum(rs, (1,), params.one) * basis((k,))
        rhs = GroupAlgebraElem(1)
        for m, c in want.items():
            rhs = rhs + basis(m) * c
        if lhs != rhs:
            return CheckResult("A1 Pieri closed forms", "A1", 1, "fail", _ce((k,), str(lhs), str(rhs)))
    return CheckResult("A1 Pieri closed forms", "A1", 1, "pass", detail={"kmax": kmax})


# ----------------------------------------------------------------- checks
def _window(rs, radius):
    return weight_ball(rs.rank, radius)


def verify_route_equivalence(rs, params, omega: Weight, trials: int = 3, seed: int = 1,
                             L: int = 2, radius: int = 2) -> CheckResult:
    """eps M_omega eps^{-1} f = sum_{mu in W_0 omega} Y^mu f on random f."""
    rng = random.Random(seed)
    D = DifferenceRep(rs, params)
    name = f"eps M eps^-1 = m_omega(Y) omega={list(omega)}"
    for _ in range(trials):
        f = random_function(rs.rank, L, rng, ring=params.ring, integral=True)
        F = m_omega_hat(rs, params, omega, f)
        G = central_word_operator(D, omega, f)
        for lam in _window(rs, radius):
            a, b = F(lam), G(lam)
            if a != b:
                return CheckResult(name, rs.label, rs.rank, "fail", _ce(lam, a, b))
    return CheckResult(name, rs.label, rs.rank, "pass", detail={"trials": trials})


def verify_symmetric_restriction(rs, params, omega: Weight, trials: int = 3, seed: int = 1,
                                 L: int = 2, radius: int = 2) -> CheckResult:
    """On W_0-invariant f the closed form agrees with the V/U formula on P^+."""
    rng = random.Random(seed)
    name = f"symmetric restriction omega={list(omega)}"
    for _ in range(trials):
        f = random_function(rs.rank, L, rng, ring=params.ring, symmetric_under=rs, integral=True)
        F = m_omega_hat(rs, params, omega, f)
        G = symmetric_action(rs, params, omega, f)
        for lam in _window(rs, radius):
            if not rs.is_dominant(lam):
                continue
            a, b = F(lam), G(lam)
            if a != b:
                return CheckResult(name, rs.label, rs.rank, "fail", _ce(lam, a, b))
    return CheckResult(name, rs.label, rs.rank, "pass", detail={"trials": trials})


def verify_alternative_forms(rs, params, omega: Weight, radius: int = 3) -> list[CheckResult]:
    """The product, orbit-sum and stabilizer forms of V_{lam,-nu} agree, and
    both diagonal forms of U_{lam,-omega} agree with the subtraction formula."""
    omega = tuple(omega)
    lams = [l for l in weight_ball(rs.rank, radius) if rs.is_dominant(l)]
    badV = badU = None
    for lam in lams:
        for nu in rs.orbit(omega):
            if not rs.is_dominant(_sub(lam, nu)):
                continue
            v = V_coeff(rs, params, lam, _neg(nu))
            a, b = V_alt_sum(rs, params, lam, nu), V_alt_stabilizer(rs, params, lam, nu)
            if not (v == a == b) and badV is None:
                badV = dict(_ce(lam, str(v), f"{a} | {b}"), nu=list(nu))
        u = U_coeff(rs, params, lam, _neg(omega))
        a, b = U_alt(rs, params, lam, omega, "eps"), U_alt(rs, params, lam, omega, "theta")
        if not (u == a == b) and badU is None:
            badU = _ce(lam, str(u), f"{a} | {b}")
    return [
        CheckResult(f"V alternative forms omega={list(omega)}", rs.label, rs.rank,
                    "pass" if badV is None else "fail", badV),
        CheckResult(f"U alternative forms omega={list(omega)}", rs.label, rs.rank,
                    "pass" if badU is None else "fail", badU),
    ]


def verify_coefficient_structure(rs, params, omega: Weight, radius: int = 3) -> list[CheckResult]:
    """eps in {0,1}; minuscule: b = 0, U = 0 and a = q^2_{w_{w_lam(lam-nu)}};
    wherever (lam-nu)_+ = lam_+: e_q(w_lam nu) = q^2_{w_{w_lam(lam-nu)}}."""
    omega = tuple(omega)
    kind = check_omega(rs, omega)
    bad_eps = bad_min = bad_eq = None
    hits = 0
    for lam in weight_ball(rs.rank, radius):
        lp, wl = rs.dominant_rep(lam)
        for nu in rs.orbit(omega):
            e = eps_coeff(rs, lam, nu)
            if e not in (0, 1) and bad_eps is None:
                bad_eps = dict(_ce(lam, e, "0 or 1"), nu=list(nu))
            v = rs.w_of(wl.act(_sub(lam, nu)))
            if kind == "minuscule" and bad_min is None:
                a, b = a_coeff(rs, params, lam, nu), b_coeff(rs, params, lam, nu)
                want = q_of_element(v, params) ** 2
                if b or a != want:
                    bad_min = dict(_ce(lam, f"a={a}, b={b}", f"a={want}, b=0"), nu=list(nu))
            if rs.dominant(_sub(lam, nu)) == lp:
                hits += 1
                l, r = e_q(wl.act(nu), params), q_of_element(v, params) ** 2
                if l != r and bad_eq is None:
                    bad_eq = dict(_ce(lam, str(l), str(r)), nu=list(nu))
        if kind == "minuscule" and rs.is_dominant(lam) and U_coeff(rs, params, lam, omega) and bad_min is None:
            bad_min = _ce(lam, "U nonzero", 0)
    out = [
        CheckResult(f"eps in {{0,1}} omega={list(omega)}", rs.label, rs.rank,
                    "pass" if bad_eps is None else "fail", bad_eps),
        CheckResult(f"e_q(w_lam nu) = q_w^2 on the stabilizing case omega={list(omega)}", rs.label,
                    rs.rank, "pass" if bad_eq is None else "fail", bad_eq, detail={"cases": hits}),
    ]
    if kind == "minuscule":
        out.append(CheckResult(f"minuscule simplification omega={list(omega)}", rs.label, rs.rank,
                               "pass" if bad_min is None else "fail", bad_min))
    return out


def verify_string_identity(rs, params, lam: Weight, nu: Weight, trials: int = 3, seed: int = 1,
                    L: int = 3) -> CheckResult:
    """q_{w_{lam-nu}} (I_{w_{lam-nu}} f)((lam-nu)_+) = f(lam-nu) - theta(lam-nu)(1-q_0^{-2}) e_q(nu) f(lam)."""
    from .heckeops import IntegralRep

    lam, nu = tuple(lam), tuple(nu)
    mu = _sub(lam, nu)
    mp, w = rs.dominant_rep(mu)
    th = rs.theta(mu)
    case = classify_pieri_case(rs, lam, nu)
    I = IntegralRep(rs, params)
    rng = random.Random(seed)
    q0i = params.qinv(0)
    name = f"I-string identity lam={list(lam)} nu={list(nu)}"
    for _ in range(trials):
        f = random_function(rs.rank, L, rng, ring=params.ring, integral=True)
        lhs = q_of_element(w, params) * I.T_word(w.word(), f)(mp)
        rhs = f(mu)
        if th:
            rhs = rhs - th * (1 - q0i * q0i) * e_q(nu, params) * f(lam)
        if lhs != rhs:
            return CheckResult(name, rs.label, rs.rank, "fail", _ce(mu, lhs, rhs),
                               detail={"theta": th, "case": case["case"]})
    return CheckResult(name, rs.label, rs.rank, "pass", detail={"theta": th, "case": case["case"]})


def verify_string_identity_scan(rs, params, omega: Weight, radius: int = 2, trials: int = 2,
                         seed: int = 1) -> CheckResult:
    omega = tuple(omega)
    n = thetas = 0
    for lam in weight_ball(rs.rank, radius):
        if not rs.is_dominant(lam):
            continue
        for nu in rs.orbit(omega):
            r = verify_string_identity(rs, params, lam, nu, trials=trials, seed=seed)
            n += 1
            thetas += r.detail["theta"] != 0
            if not r.passed:
                return r
    return CheckResult(f"I-string identity scan omega={list(omega)}", rs.label, rs.rank, "pass",
                       detail={"cases": n, "theta_nonzero": thetas})


def verify_eigen_consistency(rs, params, omega: Weight, points: int = 3, seed: int = 1,
                             radius: int = 2) -> CheckResult:
    """The symmetric action on Phi_x reproduces m_omega(x^{-1}) Phi_x on P^+."""
    from .spherical import SphericalEvaluator, eigenvalue, inverse_point, random_spectral_point

    rng = random.Random(seed)
    m = orbit_sum(rs, tuple(omega))
    name = f"V/U action on Phi_x omega={list(omega)}"
    for _ in range(points):
        x = random_spectral_point(rs, rng)
        ev = SphericalEvaluator(rs, params, x)
        F = ev.as_function()
        G = symmetric_action(rs, params, omega, F)
        E = eigenvalue(m, inverse_point(x))
        for lam in weight_ball(rs.rank, radius):
            if rs.is_dominant(lam):
                a, b = G(lam), E * F(lam)
                if a != b:
                    return CheckResult(name, rs.label, rs.rank, "fail",
                                       dict(_ce(lam, a, b), x=[str(v) for v in x]))
    return CheckResult(name, rs.label, rs.rank, "pass", detail={"points": points})


def verify_self_adjoint(rs, params, trials: int = 5, seed: int = 1, L: int = 3) -> CheckResult:
    """Quasi-minuscule V/U action is symmetric for the Delta inner product
    (numeric q in (0,1)); the support is closed under the action's reach."""
    from .spherical import inner_Delta

    omega = rs.alpha0
    rng = random.Random(seed)
    dom = [l for l in weight_ball(rs.rank, L) if rs.is_dominant(l)]
    name = "self-adjoint quasi-minuscule action"
    for _ in range(trials):
        f = random_function(rs.rank, L, rng, symmetric_under=rs, integral=True)
        g = random_function(rs.rank, L, rng, symmetric_under=rs, integral=True)
        reach = sorted({rs.dominant(_sub(l, nu)) for l in dom for nu in rs.orbit(omega)} | set(dom))
        Mf = symmetric_action(rs, params, omega, f)
        Mg = symmetric_action(rs, params, omega, g)
        a = inner_Delta(rs, params, Mf, g, reach)
        b = inner_Delta(rs, params, f, Mg, reach)
        if a != b:
            return CheckResult(name, rs.label, rs.rank, "fail", _ce("pair", a, b))
    return CheckResult(name, rs.label, rs.rank, "pass", detail={"trials": trials})


def verify_pieri_suite(rs, params, radius: int = 3, seed: int = 1) -> list[CheckResult]:
    """Everything in this module that applies to an irreducible root system."""
    out = []
    for om in pieri_weights(rs):
        out.append(verify_route_equivalence(rs, params, om, seed=seed))
        out.append(verify_symmetric_restriction(rs, params, om, seed=seed))
        out.extend(verify_alternative_forms(rs, params, om))
        out.extend(verify_coefficient_structure(rs, params, om))
        out.append(verify_string_identity_scan(rs, params, om, seed=seed))
    out.extend(verify_pieri(rs, params, radius=radius))
    if rs.label == "A1":
        out.append(a1_closed_forms(params))
    return out


def verify_diagonalization_M(rs, params, omega: Weight, points: int = 10, seed: int = 1,
                             radius: int = 1) -> CheckResult:
    """eps M_omega eps^{-1} Phi_x = E Phi_x; both eigenvalue conventions are
    reported, the status follows m_omega(x^{-1})."""
    from .spherical import SphericalEvaluator, eigenvalue, inverse_point, random_spectral_point

    rng = random.Random(seed)
    m = orbit_sum(rs, tuple(omega))
    at_x = at_xinv = True
    bad = None
    for _ in range(points):
        x = random_spectral_point(rs, rng)
        F = SphericalEvaluator(rs, params, x).as_function()
        G = m_omega_hat(rs, params, omega, F)
        e_plus, e_minus = eigenvalue(m, x), eigenvalue(m, inverse_point(x))
        for lam in weight_ball(rs.rank, radius):
            g, f = G(lam), F(lam)
            at_x = at_x and g == e_plus * f
            if g != e_minus * f:
                at_xinv = False
                if bad is None:
                    bad = dict(_ce(lam, g, e_minus * f), x=[str(v) for v in x])
    return CheckResult(f"diagonalization via M omega={list(omega)}", rs.label, rs.rank,
                       "pass" if at_xinv else "fail", bad,
                       detail={"points": points, "eigenvalue_at_x": at_x, "eigenvalue_at_x_inverse": at_xinv})
