"""GL_N: the affine permutation group acting on Z^N, its Hecke operators,
the central difference operators M_r, Hall-Littlewood polynomials and
Morris's Pieri rule.

Everything here is native on Z^N with one parameter q.  The map
lam -> (lam_1 - lam_2, ..., lam_{N-1} - lam_N) to fundamental-weight
coordinates of A_{N-1} is used only to compare with the general machinery.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Sequence

from .heckeops import CheckResult, DifferenceRep, IntegralRep, _ce
from .latfun import (
    FiniteFunction,
    GroupAlgebraElem,
    LatticeFunction,
    LazyFunction,
    divide_along_line,
    random_function,
    translate,
)
from .qring import MultiplicityParams, divide
from .rootsys import build_root_system, weight_ball

Weight = tuple


# ------------------------------------------------------------- lattice
def gl_params(N: int, q="formal") -> MultiplicityParams:
    """Parameters for GL_N, carried by the root system A_{N-1}."""
    if N < 2:
        raise ValueError("GL_N needs N >= 2")
    rs = build_root_system("A", N - 1)
    return MultiplicityParams.formal(rs) if q == "formal" else MultiplicityParams.numeric(rs, q)


def swap(lam: Weight, j: int) -> Weight:
    """s_j: exchange entries j and j+1 (1-based)."""
    lam = list(lam)
    lam[j - 1], lam[j] = lam[j], lam[j - 1]
    return tuple(lam)


def u_act(lam: Weight) -> Weight:
    """u x = (x_N + 1, x_1, ..., x_{N-1})."""
    return (lam[-1] + 1,) + tuple(lam[:-1])


def u_inv_act(lam: Weight) -> Weight:
    return tuple(lam[1:]) + (lam[0] - 1,)


def is_sorted(lam: Weight) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def sort_permutation(lam: Weight) -> tuple:
    """Shortest w with w lam = lam_+, as the index list (w x)_i = x_{idx[i]}."""
    return tuple(sorted(range(len(lam)), key=lambda i: (-lam[i], i)))


def permute(idx: tuple, x: Weight) -> Weight:
    return tuple(x[i] for i in idx)


def sort_length(lam: Weight) -> int:
    """l(w_lam): pairs i < j with lam_i < lam_j."""
    n = len(lam)
    return sum(1 for i in range(n) for j in range(i + 1, n) if lam[i] < lam[j])


def rho_pair2(lam: Weight) -> int:
    """2<rho, lam> with rho = (N-1, N-3, ..., 1-N)/2."""
    N = len(lam)
    return sum((N + 1 - 2 * i) * x for i, x in enumerate(lam, 1))


def e_J(N: int, J) -> Weight:
    return tuple(int(i + 1 in J) for i in range(N))


def subsets(N: int, r: int):
    return [frozenset(c) for c in itertools.combinations(range(1, N + 1), r)]


def to_fundamental(lam: Weight) -> Weight:
    """Z^N -> fundamental-weight coordinates of A_{N-1}."""
    return tuple(a - b for a, b in zip(lam, lam[1:]))


def _qpow(params, k: int):
    return params.monomial((k,))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


# ----------------------------------------------------- representations
class _GLRep:
    def __init__(self, N: int, params: MultiplicityParams):
        self.N = N
        self.params = params
        self.q = params.q(1)
        self.qi = params.qinv(1)

    def _check(self, j):
        if not 1 <= j < self.N:
            raise IndexError(f"generator index {j} outside 1..{self.N - 1}")

    def T_inv(self, j, f):
        g = self.T(j, f)
        d = self.q - self.qi
        return LazyFunction(f.rank, lambda lam: g(lam) - d * f(lam))

    def Y(self, j: int, f):
        """Y_j = T_{j-1}^{-1} ... T_1^{-1} T_u T_{N-1} ... T_j."""
        for k in range(j, self.N):
            f = self.T(k, f)
        f = self.U(f)
        for k in range(1, j):
            f = self.T_inv(k, f)
        return f

    def Y_inv(self, j: int, f):
        for k in range(j - 1, 0, -1):
            f = self.T(k, f)
        f = self.U_inv(f)
        for k in range(self.N - 1, j - 1, -1):
            f = self.T_inv(k, f)
        return f

    def Y_monomial(self, J, f):
        for j in sorted(J):
            f = self.Y(j, f)
        return f

    def m_r(self, r: int, f):
        """widehat{m_r(Y)} f = sum over |J| = r of prod_{j in J} Y_j f."""
        terms = [self.Y_monomial(J, f) for J in subsets(self.N, r)]
        return LazyFunction(f.rank, lambda lam: sum((g(lam) for g in terms), 0))


class GLDifferenceRep(_GLRep):
    def T(self, j: int, f):
        self._check(j)
        q, qi = self.q, self.qi

        def rule(lam):
            a, b = lam[j - 1], lam[j]
            if a > b:
                return (q - qi) * f(lam) + qi * f(swap(lam, j))
            if a == b:
                return q * f(lam)
            return q * f(swap(lam, j))

        return LazyFunction(f.rank, rule)

    def U(self, f):
        return LazyFunction(f.rank, lambda lam: f(u_inv_act(lam)))

    def U_inv(self, f):
        return LazyFunction(f.rank, lambda lam: f(u_act(lam)))


class GLIntegralRep(_GLRep):
    def T(self, j: int, f):
        self._check(j)
        q, d = self.q, self.q - self.qi

        def rule(lam):
            a, b = lam[j - 1], lam[j]
            out = q * f(swap(lam, j))
            if a == b:
                return out
            lst = list(lam)
            acc = 0
            if a > b:
                for l in range(1, a - b + 1):
                    lst[j - 1], lst[j] = a - l, b + l
                    acc = acc - f(tuple(lst))
            else:
                for l in range(0, b - a):
                    lst[j - 1], lst[j] = a + l, b - l
                    acc = acc + f(tuple(lst))
            return out + d * acc if acc else out

        return LazyFunction(f.rank, rule)

    def U(self, f):
        """I_u = t_{e_1} I_1^{-1} ... I_{N-1}^{-1}, forced by Y_1 = t_{e_1}."""
        for k in range(self.N - 1, 0, -1):
            f = self.T_inv(k, f)
        return translate(e_J(self.N, {1}), f)

    def U_inv(self, f):
        f = translate(tuple(-x for x in e_J(self.N, {1})), f)
        for k in range(1, self.N):
            f = self.T(k, f)
        return f


def gl_apply_That_j(N, params, j, f):
    return GLDifferenceRep(N, params).T(j, f)


def gl_apply_I_j(N, params, j, f):
    return GLIntegralRep(N, params).T(j, f)


def gl_apply_u(N, params, f):
    return GLDifferenceRep(N, params).U(f)


# ------------------------------------------------- central operators
def gl_epsilon(params, f):
    """(eps f)(lam) = q^{2<rho, lam_+>} f(reversed lam)."""

    def rule(lam):
        v = f(tuple(reversed(lam)))
        return _qpow(params, rho_pair2(tuple(sorted(lam, reverse=True)))) * v if v else 0

    return LazyFunction(f.rank, rule)


def gl_epsilon_inv(params, f):
    def rule(lam):
        v = f(tuple(reversed(lam)))
        return _qpow(params, -rho_pair2(tuple(sorted(lam, reverse=True)))) * v if v else 0

    return LazyFunction(f.rank, rule)


def gl_M_r(N: int, params, r: int, f):
    """(M_r f)(lam) = sum_{|J| = r} q^{2 l(w_{w_lam(lam - e_J)})} f(lam - e_J)."""
    Js = [e_J(N, J) for J in subsets(N, r)]

    def rule(lam):
        idx = sort_permutation(lam)
        total = 0
        for e in Js:
            mu = _sub(lam, e)
            v = f(mu)
            if v:
                total = total + _qpow(params, 2 * sort_length(permute(idx, mu))) * v
        return total

    return LazyFunction(f.rank, rule)


def gl_m_r_hat(N, params, r, f):
    """eps M_r eps^{-1} f."""
    return gl_epsilon(params, gl_M_r(N, params, r, gl_epsilon_inv(params, f)))


def morris_V(params, lam: Weight, J) -> object:
    """V_{lam,J}(q^2) = q^{-2<rho,e_J>} prod over k < l, k in J, l not in J,
    lam_k = lam_l of (1 - q^{2(l-k+1)}) / (1 - q^{2(l-k)})."""
    N = len(lam)
    num, den = params.one, params.one
    for k in J:
        for l in range(k + 1, N + 1):
            if l not in J and lam[k - 1] == lam[l - 1]:
                num = num * (1 - _qpow(params, 2 * (l - k + 1)))
                den = den * (1 - _qpow(params, 2 * (l - k)))
    return _qpow(params, -rho_pair2(e_J(N, J))) * divide(num, den)


def gl_symmetric_action(N, params, r, f):
    """sum over |J| = r with lam - e_J sorted of V_{lam,J^c} f(lam - e_J), on sorted lam."""
    Js = subsets(N, r)
    full = frozenset(range(1, N + 1))

    def rule(lam):
        lam = tuple(sorted(lam, reverse=True))
        total = 0
        for J in Js:
            mu = _sub(lam, e_J(N, J))
            if is_sorted(mu):
                v = f(mu)
                if v:
                    total = total + morris_V(params, lam, full - J) * v
        return total

    return LazyFunction(N, rule)


# --------------------------------------------------- Hall-Littlewood
def _height(N):
    return lambda mu: sum((N - i) * m for i, m in enumerate(mu))


def _antisymmetrize_and_divide(N: int, p: GroupAlgebraElem) -> GroupAlgebraElem:
    """sum_w sign(w) w(p) divided by the Vandermonde prod_{k<l} (x_k - x_l)."""
    num = GroupAlgebraElem(N)
    for perm in itertools.permutations(range(N)):
        sign = _perm_sign(perm)
        # w x^mu = x^{w mu}, (w mu)_{perm[i]} = mu_i
        terms = {}
        for mu, c in p.terms.items():
            wm = [0] * N
            for i, m in enumerate(mu):
                wm[perm[i]] = m
            terms[tuple(wm)] = c * sign
        num = num + GroupAlgebraElem(N, terms)
    h = _height(N)
    for k in range(1, N + 1):
        for l in range(k + 1, N + 1):
            alpha = tuple(int(i == l) - int(i == k) for i in range(1, N + 1))
            num = divide_along_line(num, alpha, h)
            # x_k - x_l = x_k (1 - x^{e_l - e_k})
            num = GroupAlgebraElem(N, {_sub(mu, e_J(N, {k})): c for mu, c in num.terms.items()})
    return num


def _perm_sign(perm) -> int:
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def hall_littlewood_t(N: int, lam: Weight, t, one=1) -> GroupAlgebraElem:
    """sum_w w( x^lam prod_{k<l} (x_k - t x_l) / (x_k - x_l) )."""
    lam = tuple(lam)
    p = GroupAlgebraElem.monomial(lam, one)
    for k in range(1, N + 1):
        for l in range(k + 1, N + 1):
            p = p * GroupAlgebraElem(N, {e_J(N, {k}): one, e_J(N, {l}): -t * one})
    return _antisymmetrize_and_divide(N, p)


def hall_littlewood(N: int, params, lam: Weight) -> GroupAlgebraElem:
    """p_lam = q^{2<rho,lam>} sum_w x^{w lam} prod_{k<l} (x_{wk} - q^2 x_{wl}) / (x_{wk} - x_{wl})."""
    lam = tuple(lam)
    if len(lam) != N:
        raise ValueError(f"need {N} parts")
    if not is_sorted(lam):
        raise ValueError(f"{list(lam)} is not weakly decreasing")
    q = params.q(1)
    return hall_littlewood_t(N, lam, q * q, params.one) * _qpow(params, rho_pair2(lam))


def schur_bialternant(N: int, lam: Weight) -> GroupAlgebraElem:
    """s_lam = a_{lam+delta} / a_delta."""
    delta = tuple(N - 1 - i for i in range(N))
    return _antisymmetrize_and_divide(N, GroupAlgebraElem.monomial(tuple(a + d for a, d in zip(lam, delta)), 1))


def elementary(N: int, r: int, one=1) -> GroupAlgebraElem:
    return GroupAlgebraElem(N, {e_J(N, J): one for J in subsets(N, r)})


def morris_pieri(N: int, params, r: int, lam: Weight) -> list[tuple[Weight, object]]:
    """m_r p_lam = sum over |J| = r with lam + e_J sorted of V_{lam,J} p_{lam+e_J}."""
    lam = tuple(lam)
    if not is_sorted(lam):
        raise ValueError(f"{list(lam)} is not weakly decreasing")
    if not 1 <= r <= N:
        raise ValueError(f"r must lie in 1..{N}")
    out = []
    for J in subsets(N, r):
        mu = tuple(a + b for a, b in zip(lam, e_J(N, J)))
        if is_sorted(mu):
            out.append((mu, morris_V(params, lam, J)))
    return sorted(out, reverse=True)


def _dominates(a: Weight, b: Weight) -> bool:
    """a >= b in dominance (equal sums, partial sums of a at least those of b)."""
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for x, y in zip(a, b):
        sa, sb = sa + x, sb + y
        if sa < sb:
            return False
    return True


class HLBasis:
    def __init__(self, N, params):
        self.N, self.params = N, params
        self._cache: dict = {}

    def __call__(self, lam):
        lam = tuple(lam)
        if lam not in self._cache:
            self._cache[lam] = hall_littlewood(self.N, self.params, lam)
        return self._cache[lam]

    def expand(self, g: GroupAlgebraElem) -> dict:
        """Triangular re-expansion of a symmetric g; the pivot is the
        coefficient of x^mu in p_mu, divided exactly."""
        rem, out = g, {}
        while rem:
            srt = [mu for mu in rem.terms if is_sorted(mu)]
            top = max((mu for mu in srt if not any(nu != mu and _dominates(nu, mu) for nu in srt)))
            p = self(top)
            lead = p.coeff(top)
            if not lead:
                raise ArithmeticError(f"p_{list(top)} has zero leading coefficient")
            c = divide(rem.coeff(top), lead)
            out[top] = c
            rem = rem - p * c
        return out


def morris_brute(N, params, r, lam, basis: HLBasis | None = None) -> dict:
    basis = basis or HLBasis(N, params)
    return basis.expand(elementary(N, r, params.one) * basis(lam))


# ---------------------------------------------------------------- checks
def _random(N, L, rng, params, symmetric=False):
    if not symmetric:
        return random_function(N, L, rng, ring=params.ring, integral=True)
    f = random_function(N, L, rng, ring=params.ring, integral=True)
    vals = {}
    for lam in weight_ball(N, L):
        if is_sorted(lam):
            c = f(lam)
            for p in set(itertools.permutations(lam)):
                vals[p] = c
    return FiniteFunction(N, vals)


def _cmp(name, N, F, G, window, detail=None):
    for lam in window:
        a, b = F(lam), G(lam)
        if a != b:
            return CheckResult(name, f"GL{N}", N, "fail", _ce(lam, a, b), detail=detail or {})
    return CheckResult(name, f"GL{N}", N, "pass", detail=detail or {})


def _lin(rank, terms):
    return LazyFunction(rank, lambda lam: sum((c * g(lam) for c, g in terms), 0))


def verify_gl_relations(N: int, params, seeds=(1,), L: int = 2, radius: int = 2) -> list[CheckResult]:
    """Quadratic, braid, commuting, T_u T_j = T_{j+1} T_u, T_u^N central, in both
    representations; Y_j commute (N <= 3); I represents Y_j by t_{e_j}; u^N is
    the shift by (1, ..., 1) in the difference representation."""
    out = []
    window = weight_ball(N, radius)
    for kind, rep in (("difference", GLDifferenceRep(N, params)), ("integral", GLIntegralRep(N, params))):
        res: dict = {}

        def note(name, r):
            if name not in res or (res[name].passed and not r.passed):
                res[name] = r

        for seed in seeds:
            rng = random.Random(seed)
            f = _random(N, L, rng, params)
            q, qi = rep.q, rep.qi
            for j in range(1, N):
                Tf = rep.T(j, f)
                lhs = _lin(N, [(1, rep.T(j, Tf)), (-(q - qi), Tf), (-1, f)])
                note("quadratic", _cmp(f"{kind} quadratic", N, lhs, LazyFunction(N, lambda l: 0), window))
                note("inverse", _cmp(f"{kind} inverse", N, rep.T_inv(j, Tf), f, window))
            for j in range(1, N - 1):
                a = rep.T(j, rep.T(j + 1, rep.T(j, f)))
                b = rep.T(j + 1, rep.T(j, rep.T(j + 1, f)))
                note("braid", _cmp(f"{kind} braid", N, a, b, window))
                note("u shift", _cmp(f"{kind} T_u T_j = T_j+1 T_u", N, rep.U(rep.T(j, f)),
                                     rep.T(j + 1, rep.U(f)), window))
            for j in range(1, N):
                for k in range(j + 2, N):
                    note("commute", _cmp(f"{kind} commuting", N, rep.T(j, rep.T(k, f)),
                                         rep.T(k, rep.T(j, f)), window))
            g = f
            for _ in range(N):
                g = rep.U(g)
            for j in range(1, N):
                h = rep.T(j, f)
                for _ in range(N):
                    h = rep.U(h)
                note("u^N central", _cmp(f"{kind} T_u^N central", N, h, rep.T(j, g), window))
            note("U inverse", _cmp(f"{kind} T_u^-1 T_u", N, rep.U_inv(rep.U(f)), f, window))
            if kind == "difference":
                note("u^N shift", _cmp("difference u^N = t_(1..1)", N, g, translate((1,) * N, f), window))
            else:
                for j in range(1, N + 1):
                    note("Y = t", _cmp("integral Y_j = t_e_j", N, rep.Y(j, f), translate(e_J(N, {j}), f), window))
            if N <= 3:
                for j in range(1, N + 1):
                    for k in range(j + 1, N + 1):
                        note("Y commute", _cmp(f"{kind} Y_j Y_k = Y_k Y_j", N, rep.Y(j, rep.Y(k, f)),
                                               rep.Y(k, rep.Y(j, f)), window))
                    note("Y inverse", _cmp(f"{kind} Y_j^-1 Y_j", N, rep.Y_inv(j, rep.Y(j, f)), f, window))
        out.extend(res.values())
    return out


def verify_gl_central(N: int, params, seed: int = 1, L: int = 2, radius: int = 2) -> list[CheckResult]:
    """eps M_r eps^{-1} = sum_J prod Y_j; M_r commute; symmetric restriction."""
    rng = random.Random(seed)
    window = weight_ball(N, radius)
    D = GLDifferenceRep(N, params)
    f = _random(N, L, rng, params)
    out = []
    for r in range(1, N + 1):
        out.append(_cmp(f"eps M_{r} eps^-1 = m_{r}(Y)", N, gl_m_r_hat(N, params, r, f), D.m_r(r, f), window))
    for r in range(1, N + 1):
        for s in range(r + 1, N + 1):
            out.append(_cmp(f"M_{r} M_{s} commute", N, gl_M_r(N, params, r, gl_M_r(N, params, s, f)),
                            gl_M_r(N, params, s, gl_M_r(N, params, r, f)), window))
    g = _random(N, L, rng, params, symmetric=True)
    srt = [l for l in window if is_sorted(l)]
    for r in range(1, N + 1):
        out.append(_cmp(f"symmetric restriction r={r}", N, gl_m_r_hat(N, params, r, g),
                        gl_symmetric_action(N, params, r, g), srt))
    return out


def sorted_compositions(N: int, lo: int, hi: int):
    return [tuple(c) for c in itertools.combinations_with_replacement(range(hi, lo - 1, -1), N)]


def verify_morris(N: int, params, lo: int = -3, hi: int = 3, limit: int | None = None) -> list[CheckResult]:
    """morris_pieri equals the brute-force product expansion for every sorted
    lam with parts in [lo, hi] and every r."""
    basis = HLBasis(N, params)
    lams = sorted_compositions(N, lo, hi)
    if limit is not None:
        lams = lams[:limit]
    out = []
    for r in range(1, N + 1):
        bad = None
        for lam in lams:
            want = dict(morris_pieri(N, params, r, lam))
            got = morris_brute(N, params, r, lam, basis)
            if want != got:
                bad = _ce(lam, {str(list(k)): str(v) for k, v in got.items()},
                          {str(list(k)): str(v) for k, v in want.items()})
                break
        out.append(CheckResult(f"Morris Pieri r={r}", f"GL{N}", N, "pass" if bad is None else "fail", bad,
                               detail={"partitions": len(lams), "parts": [lo, hi]}))
    return out


def verify_hl_structure(N: int, params, lo: int = -2, hi: int = 2) -> CheckResult:
    """Symmetric output with leading monomial x^lam times q^{2<rho,lam>} W_lam(q^2)."""
    from .qring import poincare_series

    rs = params.rs
    for lam in sorted_compositions(N, lo, hi):
        p = hall_littlewood(N, params, lam)
        for j in range(1, N):
            if any(p.coeff(swap(mu, j)) != c for mu, c in p.terms.items()):
                return CheckResult("Hall-Littlewood symmetry", f"GL{N}", N, "fail", _ce(lam, str(p), "symmetric"))
        for mu in p.terms:
            if is_sorted(mu) and not _dominates(lam, mu):
                return CheckResult("Hall-Littlewood triangularity", f"GL{N}", N, "fail", _ce(lam, str(mu), "below lam"))
        want = _qpow(params, rho_pair2(lam)) * poincare_series(params, to_fundamental(lam))
        if p.coeff(lam) != want:
            return CheckResult("Hall-Littlewood leading term", f"GL{N}", N, "fail", _ce(lam, p.coeff(lam), want))
    return CheckResult("Hall-Littlewood structure", f"GL{N}", N, "pass")


def verify_schur_limit(N: int, lo: int = -2, hi: int = 3) -> CheckResult:
    """With q = 0 in the symmetrization (prefactor q^{2<rho,lam>} removed) the
    Hall-Littlewood polynomial is the Schur polynomial a_{lam+delta}/a_delta."""
    for lam in sorted_compositions(N, lo, hi):
        a, b = hall_littlewood_t(N, lam, 0), schur_bialternant(N, lam)
        if a != b:
            return CheckResult("q = 0 limit is Schur", f"GL{N}", N, "fail", _ce(lam, str(a), str(b)))
    return CheckResult("q = 0 limit is Schur", f"GL{N}", N, "pass")


# ------------------------------------------------- coordinate comparison
def _pullback(f, N):
    return LazyFunction(N, lambda lam: f(to_fundamental(lam)))


def matching_omega(rs):
    """The length-zero element of A_{N-1} that u induces on fundamental coordinates."""
    N = rs.rank + 1
    probes = [tuple(random.Random(k).randint(-3, 3) for _ in range(N)) for k in range(6)]
    for _, w in rs.omega_group():
        if all(w.act(to_fundamental(x)) == to_fundamental(u_act(x)) for x in probes):
            return w
    raise AssertionError("no matching length-zero element")


def verify_coordinate_map(N: int, params, seed: int = 1, L: int = 2, radius: int = 2) -> list[CheckResult]:
    """GL_N operators on pullbacks agree with the A_{N-1} operators; Hall-Littlewood
    polynomials map to e_q(lam) P_{lam*}; Morris's V and M_r match the general
    V and M_omega."""
    from .pieri import V_coeff, m_omega_hat
    from .spherical import p_basis

    rs = params.rs
    rng = random.Random(seed)
    window = weight_ball(N, radius)
    f = random_function(rs.rank, L + 1, rng, ring=params.ring, integral=True)
    F = _pullback(f, N)
    out = []
    w = matching_omega(rs)
    for name, G, A in (("difference", GLDifferenceRep(N, params), DifferenceRep(rs, params)),
                       ("integral", GLIntegralRep(N, params), IntegralRep(rs, params))):
        for j in range(1, N):
            out.append(_cmp(f"{name} T_{j} vs A{N-1}", N, G.T(j, F), _pullback(A.T(j, f), N), window))
        out.append(_cmp(f"{name} u vs A{N-1}", N, G.U(F), _pullback(A.U(w, f), N), window))
    for r in range(1, N):
        om = rs.fundamental_weight(r)
        out.append(_cmp(f"M_{r} vs M_omega A{N-1}", N, gl_m_r_hat(N, params, r, F),
                        _pullback(m_omega_hat(rs, params, om, f), N), window))
    bad = None
    for lam in sorted_compositions(N, -1, 2):
        for r in range(1, N):
            for J in subsets(N, r):
                a = morris_V(params, lam, J)
                b = V_coeff(rs, params, to_fundamental(lam), to_fundamental(e_J(N, J)))
                if a != b and bad is None:
                    bad = dict(_ce(lam, str(a), str(b)), J=sorted(J))
    out.append(CheckResult(f"Morris V vs V A{N-1}", f"GL{N}", N, "pass" if bad is None else "fail", bad))
    bad = None
    for lam in sorted_compositions(N, -1, 2):
        p = hall_littlewood(N, params, lam)
        mapped = GroupAlgebraElem(rs.rank)
        for mu, c in p.terms.items():
            mapped = mapped + GroupAlgebraElem.monomial(to_fundamental(mu), c)
        want = p_basis(rs, params, to_fundamental(lam))
        if mapped != want and bad is None:
            bad = _ce(lam, str(mapped), str(want))
    out.append(CheckResult(f"Hall-Littlewood vs e_q P A{N-1}", f"GL{N}", N, "pass" if bad is None else "fail", bad))
    return out
