"""The intertwiner J between the integral-reflection and the
difference-reflection representations, its triangular inverse, and the
checks of the intertwining relations.

(J f)(lam) = q_{t_lam} q_{w_lam} (I_{w_lam^{-1}}^{-1} f)(lam_+)

Two independent evaluation routes are kept:

* the chain route applies integral operators to f and reads off one value;
* the row route uses duality with the Demazure-Lusztig operators: the value
  above is the pairing of f with T_{w_lam}^{-1} e^{-lam_+}, a finite group
  algebra element, which yields the whole row of J at lam at once.  The
  triangular solve for J^{-1} runs on these rows.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .heckeops import (
    CheckResult,
    DifferenceRep,
    IntegralRep,
    PolynomialRep,
    _ce,
    _compare,
)
from .latfun import FiniteFunction, GroupAlgebraElem, LatticeFunction, LazyFunction, random_function, weyl_act
from .qring import MultiplicityParams, e_q, q_of_element
from .rootsys import FiniteWeylElement, RootSystem, weight_ball

Weight = tuple


class NotSaturated(ValueError):
    pass


class IntertwinerContext:
    def __init__(self, rs: RootSystem, params: MultiplicityParams):
        self.rs = rs
        self.params = params
        self.integral = IntegralRep(rs, params)
        self.difference = DifferenceRep(rs, params)
        self.polynomial = PolynomialRep(rs, params)
        self._rows: dict = {}

    # ------------------------------------------------------------ helpers
    def dominant_rep(self, lam: Weight):
        return self.rs.dominant_rep(tuple(lam))

    def scale(self, lam: Weight):
        """q_{t_lam} q_{w_lam}."""
        lp, w = self.dominant_rep(lam)
        return e_q(lp, self.params) * q_of_element(w, self.params)

    # ------------------------------------------------------------- chain
    def apply_J(self, f: LatticeFunction, word_for=None) -> LazyFunction:
        """J f, evaluated pointwise.  ``word_for`` optionally maps w_lam to the
        reduced word to use (for well-definedness checks)."""
        chains: dict = {(): f}
        I = self.integral

        def chain(word):
            # I_{w^{-1}}^{-1} f for w = s_word[0] ... s_word[-1]
            if word not in chains:
                chains[word] = I.T_inv(word[0], chain(word[1:]))
            return chains[word]

        def rule(lam):
            lp, w = self.dominant_rep(lam)
            word = tuple(word_for(w)) if word_for is not None else w.word()
            v = chain(word)(lp)
            if not v:
                return 0
            return self.scale(lam) * v

        return LazyFunction(f.rank, rule, None)

    # --------------------------------------------------------------- rows
    def row(self, lam: Weight) -> dict:
        """{mu: K(lam, mu)} with (J f)(lam) = sum_mu K(lam, mu) f(mu)."""
        lam = tuple(lam)
        if lam not in self._rows:
            lp, w = self.dominant_rep(lam)
            p = self.polynomial.T_inv_word(
                w.word(), GroupAlgebraElem.monomial(tuple(-x for x in lp), self.params.one)
            )
            c = self.scale(lam)
            self._rows[lam] = {tuple(-x for x in nu): c * v for nu, v in p.terms.items()}
        return self._rows[lam]

    def apply_J_rows(self, f: LatticeFunction) -> LazyFunction:
        def rule(lam):
            total = 0
            for mu, k in self.row(lam).items():
                v = f(mu)
                if v:
                    total = total + k * v
            return total

        return LazyFunction(f.rank, rule, None)

    def apply_J_inverse(self, g: LatticeFunction, region: Iterable[Weight]) -> FiniteFunction:
        """The unique f on ``region`` with J f = g there; region must be
        saturated (closed under mu -> nu whenever nu_+ precedes mu_+)."""
        region = sorted({tuple(x) for x in region}, key=self.rs.order_key)
        inside = set(region)
        f: dict = {}
        for lam in region:
            row = self.row(lam)
            diag = row.get(lam)
            if not diag:
                raise ArithmeticError(f"vanishing diagonal entry at {lam}")
            acc = g(lam)
            for mu, k in row.items():
                if mu == lam:
                    continue
                if mu not in inside:
                    raise NotSaturated(f"row of {lam} reaches {mu} outside the region")
                if mu not in f:
                    raise ArithmeticError(f"row of {lam} is not triangular at {mu}")
                v = f[mu]
                if v:
                    acc = acc - k * v
            f[lam] = _divide(acc, diag)
        return FiniteFunction(self.rs.rank, f)

    def triangularity(self, region: Iterable[Weight]) -> CheckResult:
        """Off-diagonal row entries sit strictly below in the extended
        dominance order, and the diagonal entry is q_{t_lam}."""
        rs = self.rs
        for lam in region:
            lam = tuple(lam)
            row = self.row(lam)
            want = e_q(rs.dominant(lam), self.params)
            if row.get(lam) != want:
                return CheckResult(
                    "triangularity diagonal", rs.label, rs.rank, "fail", _ce(lam, row.get(lam, 0), want)
                )
            for mu in row:
                if mu != lam and not (rs.dominance_leq(mu, lam) and mu != lam):
                    return CheckResult(
                        "triangularity order", rs.label, rs.rank, "fail", _ce(lam, str(mu), "lower")
                    )
        return CheckResult("triangularity", rs.label, rs.rank, "pass")


def _divide(a, b):
    if not a:
        return 0
    if hasattr(b, "terms") and len(b.terms) == 1:
        return a * b.inverse()
    if hasattr(a, "exact_div"):
        return a.exact_div(b)
    from fractions import Fraction

    r = Fraction(a) / Fraction(b)
    return r.numerator if r.denominator == 1 else r


# ----------------------------------------------------------------- checks
def all_reduced_words(w: FiniteWeylElement, limit: int = 64) -> list[tuple[int, ...]]:
    """Reduced words of w, found by peeling right descents (up to ``limit``)."""
    rs = w.rs
    out: list = []

    def rec(x, suffix):
        if len(out) >= limit:
            return
        if x.length() == 0:
            out.append(tuple(suffix))
            return
        for j in range(1, rs.rank + 1):
            y = x * rs.element_from_word((j,))
            if y.length() < x.length():
                rec(y, [j] + suffix)

    rec(w, [])
    return out


def _window(rs, radius):
    return weight_ball(rs.rank, radius)


def verify_intertwining(
    rs: RootSystem,
    params: MultiplicityParams,
    trials: int = 20,
    seed: int = 1,
    L: int = 2,
    window_radius: int = 2,
) -> list[CheckResult]:
    """T_g J f = J I_g f for g in {s_0, ..., s_n} and u in Omega, on random f.
    Values are pulled exactly, so every weight of the window is safe."""
    ctx = IntertwinerContext(rs, params)
    D, I = ctx.difference, ctx.integral
    window = _window(rs, window_radius)
    gens = list(range(0 if rs.irreducible else 1, rs.rank + 1))
    omega = dict(rs.omega_group()) if rs.irreducible else {}
    rng = random.Random(seed)
    results = []
    failures: dict = {}
    counts: dict = {}
    for t in range(trials):
        f = random_function(rs.rank, L, rng, ring=params.ring, integral=True)
        Jf = ctx.apply_J(f)
        cases = [(f"T{j}", D.T(j, Jf), ctx.apply_J(I.T(j, f))) for j in gens]
        cases += [
            (f"U{k}", weyl_act(u, Jf), ctx.apply_J(I.U(u, f))) for k, u in omega.items() if k
        ]
        for name, lhs, rhs in cases:
            r = _compare(rs, f"intertwining {name}", lhs, rhs, window)
            counts[name] = counts.get(name, 0) + 1
            if not r.passed and name not in failures:
                failures[name] = r
    for name in counts:
        if name in failures:
            results.append(failures[name])
        else:
            results.append(
                CheckResult(f"intertwining {name}", rs.label, rs.rank, "pass", detail={"trials": counts[name]})
            )
    return results


def verify_routes(rs, params, seed=1, L=2, window_radius=2) -> CheckResult:
    """Chain route and row route of J agree."""
    ctx = IntertwinerContext(rs, params)
    f = random_function(rs.rank, L, random.Random(seed), ring=params.ring, integral=True)
    return _compare(rs, "J chain route = row route", ctx.apply_J(f), ctx.apply_J_rows(f), _window(rs, window_radius))


def verify_well_defined(rs, params, seed=1, L=2, window_radius=2) -> CheckResult:
    """(J f)(lam) does not depend on the reduced word chosen for w_lam."""
    ctx = IntertwinerContext(rs, params)
    f = random_function(rs.rank, L, random.Random(seed), ring=params.ring, integral=True)
    ref = ctx.apply_J(f)
    alt = ctx.apply_J(f, word_for=lambda w: all_reduced_words(w)[-1])
    return _compare(rs, "J independent of reduced word", ref, alt, _window(rs, window_radius))


def verify_roundtrip(rs, params, lam_max: Weight, seed=1) -> list[CheckResult]:
    """J^{-1} J = id and J J^{-1} = id on the saturated region P(lam_max)."""
    ctx = IntertwinerContext(rs, params)
    region = rs.saturated_region(tuple(lam_max))
    rng = random.Random(seed)
    out = [ctx.triangularity(region)]
    f = FiniteFunction(
        rs.rank,
        {mu: params.coerce(rng.randint(-3, 3)) for mu in region if rng.random() < 0.6},
    )
    g = ctx.apply_J(f)
    back = ctx.apply_J_inverse(g, region)
    bad = _first_mismatch(back, f, region)
    name = f"J^-1 J = id on P({list(lam_max)})"
    out.append(
        CheckResult(name, rs.label, rs.rank, "pass" if bad is None else "fail", None if bad is None else _ce(*bad))
    )
    h = FiniteFunction(rs.rank, {mu: params.coerce(rng.randint(-3, 3)) for mu in region})
    sol = ctx.apply_J_inverse(h, region)
    again = ctx.apply_J(sol)
    bad = _first_mismatch(again, h, region)
    name = f"J J^-1 = id on P({list(lam_max)})"
    out.append(
        CheckResult(name, rs.label, rs.rank, "pass" if bad is None else "fail", None if bad is None else _ce(*bad))
    )
    return out


def _first_mismatch(F, G, region):
    for mu in region:
        a, b = F(mu), G(mu)
        if a != b and (a or b):
            return mu, a, b
    return None


def verify_equivalence(rs, params, lam_max: Weight, seed=1) -> list[CheckResult]:
    """J^{-1} T(g) J f = I(g) f on a saturated region, g a generator."""
    ctx = IntertwinerContext(rs, params)
    region = rs.saturated_region(tuple(lam_max))
    rng = random.Random(seed)
    f = random_function(rs.rank, 2, rng, ring=params.ring, integral=True)
    Jf = ctx.apply_J(f)
    out = []
    gens = list(range(0 if rs.irreducible else 1, rs.rank + 1))
    for j in gens:
        lhs = ctx.apply_J_inverse(ctx.difference.T(j, Jf), region)
        rhs = ctx.integral.T(j, f)
        bad = _first_mismatch(lhs, rhs, region)
        out.append(
            CheckResult(
                f"J^-1 T{j} J = I{j}", rs.label, rs.rank, "pass" if bad is None else "fail",
                None if bad is None else _ce(*bad),
            )
        )
    return out


def verify_stability(rs, params, seed=1, radius=2) -> list[CheckResult]:
    """q_w (I_w^{-1} f)(lam) = q_w' (I_w'^{-1} f)(lam) when w^{-1} w' fixes lam,
    and q_w^{-1} (I_w f)(lam) = q_w'^{-1} (I_w' f)(lam) when w w'^{-1} fixes lam."""
    I = IntegralRep(rs, params)
    rng = random.Random(seed)
    f = random_function(rs.rank, 2, rng, ring=params.ring, integral=True)
    W = rs.weyl_group()
    out = []
    bad1 = bad2 = None
    inv_cache: dict = {}
    fwd_cache: dict = {}

    def Iinv(w):
        if w not in inv_cache:
            inv_cache[w] = I.T_inv_word(w.word(), f)
        return inv_cache[w]

    def Ifwd(w):
        if w not in fwd_cache:
            fwd_cache[w] = I.T_word(w.word(), f)
        return fwd_cache[w]

    doms = [lam for lam in weight_ball(rs.rank, radius) if rs.is_dominant(lam)]
    for lam in doms:
        stab = rs.stabilizer(lam)
        if len(stab) == 1:
            continue
        for w in rng.sample(list(W), min(len(W), 6)):
            for s in stab:
                wp = w * s
                a = q_of_element(w, params) * Iinv(w)(lam)
                b = q_of_element(wp, params) * Iinv(wp)(lam)
                if a != b and bad1 is None:
                    bad1 = _ce(lam, a, b)
                wp2 = s * w
                a = _divide(Ifwd(w)(lam), q_of_element(w, params))
                b = _divide(Ifwd(wp2)(lam), q_of_element(wp2, params))
                if a != b and bad2 is None:
                    bad2 = _ce(lam, a, b)
    out.append(CheckResult("stability (inverse form)", rs.label, rs.rank, "pass" if bad1 is None else "fail", bad1))
    out.append(CheckResult("stability (direct form)", rs.label, rs.rank, "pass" if bad2 is None else "fail", bad2))
    return out


# ------------------------------------------------------ minuscule weights
def weight_dichotomies(rs: RootSystem, radius: int = 3) -> list[CheckResult]:
    """Scan |mu| <= radius: (a) mu_+ + w_mu omega is dominant for minuscule
    omega; (b) if mu_+ + w_mu alpha_0 is not dominant then w_mu alpha_0 is
    -alpha_j with <mu_+, alpha_j^vee> = 1; (c) if it is dominant and
    w_mu alpha_0 is negative then <mu_+, (w_mu alpha_0)^vee> <= -2."""
    out = []
    pts = weight_ball(rs.rank, radius)
    a0 = rs.alpha0
    for omega in rs.minuscule_weights():
        bad = None
        for mu in pts:
            mp, w = rs.dominant_rep(mu)
            x = tuple(a + b for a, b in zip(mp, w.act(omega)))
            if not rs.is_dominant(x):
                bad = _ce(mu, str(x), "dominant")
                break
        out.append(
            CheckResult(f"minuscule shift omega={list(omega)}", rs.label, rs.rank, "pass" if bad is None else "fail", bad)
        )
    bad_a = bad_b = None
    seen_a = seen_b = 0
    for mu in pts:
        mp, w = rs.dominant_rep(mu)
        b = w.act(a0)
        x = tuple(p + q for p, q in zip(mp, b))
        if not rs.is_dominant(x):
            seen_a += 1
            j = next((i + 1 for i in range(rs.rank) if b == tuple(-y for y in rs.simple_roots[i])), None)
            if j is None or mp[j - 1] != 1:
                bad_a = bad_a or _ce(mu, str(b), "-alpha_j with pairing 1")
        else:
            k, sign = rs.root_index(b)
            if sign < 0:
                seen_b += 1
                # <mu_+, (w alpha_0)^vee> = -<mu_+, alpha_k^vee>
                if -rs.pair(mp, k) > -2:
                    bad_b = bad_b or _ce(mu, str(-rs.pair(mp, k)), "<= -2")
    out.append(
        CheckResult("quasi-minuscule shift, non-dominant case", rs.label, rs.rank, "pass" if bad_a is None else "fail", bad_a,
                    detail={"cases": seen_a})
    )
    out.append(
        CheckResult("quasi-minuscule shift, dominant case", rs.label, rs.rank, "pass" if bad_b is None else "fail", bad_b,
                    detail={"cases": seen_b})
    )
    return out


def hecke_identities(rs: RootSystem, params: MultiplicityParams, seed: int = 1, L: int = 2,
                     window_radius: int = 2) -> list[CheckResult]:
    """In the integral representation, for every w in W_0:
    (a) I_w^{-1} t_omega I_{v_omega}^{-1} = t_{w^{-1} omega} I_{v_omega w}^{-1}, omega minuscule;
    (b) I_w^{-1} I_0^{sign(w^{-1} alpha_0)} = t_{w^{-1} alpha_0} I_{s w}^{-1}, s the
        reflection in alpha_0."""
    from .latfun import translate

    I = IntegralRep(rs, params)
    f = random_function(rs.rank, L, random.Random(seed), ring=params.ring, integral=True)
    window = _window(rs, window_radius)
    W = rs.weyl_group()
    out = []
    for omega in rs.minuscule_weights():
        v = rs.v_of(omega)
        g = I.T_inv_word(v.word(), f)
        tg = translate(omega, g)
        bad = None
        for w in W:
            lhs = I.T_inv_word(w.word(), tg)
            rhs = translate(w.inverse().act(omega), I.T_inv_word((v * w).word(), f))
            r = _compare(rs, "", lhs, rhs, window)
            if not r.passed:
                bad = dict(r.counterexample, w=list(w.word()))
                break
        out.append(
            CheckResult(f"Hecke identity, translation by omega={list(omega)}", rs.label, rs.rank,
                        "pass" if bad is None else "fail", bad, detail={"elements": len(W)})
        )
    s = rs.reflection_element(rs.alpha0_index)
    I0f, I0inv_f = I.T(0, f), I.T_inv(0, f)
    bad = None
    for w in W:
        b = w.inverse().act(rs.alpha0)
        _, sign = rs.root_index(b)
        lhs = I.T_inv_word(w.word(), I0f if sign > 0 else I0inv_f)
        rhs = translate(b, I.T_inv_word((s * w).word(), f))
        r = _compare(rs, "", lhs, rhs, window)
        if not r.passed:
            bad = dict(r.counterexample, w=list(w.word()))
            break
    out.append(
        CheckResult("Hecke identity, affine generator", rs.label, rs.rank, "pass" if bad is None else "fail", bad,
                    detail={"elements": len(W)})
    )
    return out


def verify_minuscule_identities(rs, params, seed=1, radius=3) -> list[CheckResult]:
    if not rs.irreducible:
        return [CheckResult("minuscule identities", rs.label, rs.rank, "skip",
                            detail={"reason": "needs an irreducible root system"})]
    return weight_dichotomies(rs, radius) + hecke_identities(rs, params, seed)
