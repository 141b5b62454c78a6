"""Functions on the weight lattice and the group algebra C[P].

A lattice function is anything callable on weights.  Two concrete kinds:

* ``FiniteFunction``: a dict with finite support (zero elsewhere);
* ``LazyFunction``: a rule evaluated on demand and memoized, with an optional
  finite support bound.

Operators in this package return lazy functions.  This matters because the
integral-reflection operators do not preserve finite support (a string sum
through a fixed point reaches arbitrarily far weights), so values are pulled
exactly at the requested weights instead of pushed over a truncated support.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .qring import LaurentRing, RingElem, coeff_to_json, ring_elem_to_str
from .rootsys import AffineWeylElement, FiniteWeylElement, RootSystem

Weight = tuple


def _is_zero(c) -> bool:
    return not c


class LatticeFunction:
    """Callable weight -> coefficient with an optional finite support bound."""

    rank: int
    support_bound: frozenset | None = None

    def __call__(self, lam: Weight):  # pragma: no cover - abstract
        raise NotImplementedError

    def restrict(self, weights: Iterable[Weight]) -> "FiniteFunction":
        return FiniteFunction(self.rank, {tuple(l): self(tuple(l)) for l in weights})

    def materialize(self) -> "FiniteFunction":
        if self.support_bound is None:
            raise ValueError("function has no finite support bound; use restrict()")
        return self.restrict(self.support_bound)

    def __add__(self, other: "LatticeFunction") -> "LatticeFunction":
        return combine([(1, self), (1, other)])

    def __sub__(self, other: "LatticeFunction") -> "LatticeFunction":
        return combine([(1, self), (-1, other)])

    def scaled(self, c) -> "LatticeFunction":
        return combine([(c, self)])


class FiniteFunction(LatticeFunction):
    """Finitely supported function stored as a dict without zero values."""

    def __init__(self, rank: int, values: Mapping[Weight, object] | None = None):
        self.rank = rank
        self.values = {tuple(k): v for k, v in (values or {}).items() if not _is_zero(v)}
        self.support_bound = frozenset(self.values)

    def __call__(self, lam):
        return self.values.get(lam, 0)

    def support(self) -> list[Weight]:
        return sorted(self.values)

    def __eq__(self, other):
        if isinstance(other, FiniteFunction):
            return self.values == other.values
        return NotImplemented

    def __repr__(self):
        items = ", ".join(f"{list(k)}: {ring_elem_to_str(v)}" for k, v in sorted(self.values.items()))
        return f"FiniteFunction({{{items}}})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"weight": list(k), "coeff": coeff_to_json(self.values[k])}
                for k in sorted(self.values)
            ]
        }

    @classmethod
    def from_json(cls, data, ring: LaurentRing | None = None) -> "FiniteFunction":
        if isinstance(data, str):
            data = json.loads(data)
        vals = {}
        rank = None
        for t in data["terms"]:
            w = tuple(t["weight"])
            rank = len(w)
            if ring is not None:
                vals[w] = ring.from_json(t["coeff"])
            else:
                (c,) = t["coeff"]
                vals[w] = Fraction(c["coeff"])
        return cls(rank or 0, vals)


class LazyFunction(LatticeFunction):
    """Memoized rule; ``support_bound`` is None when the support is infinite."""

    def __init__(self, rank: int, rule: Callable[[Weight], object], support_bound=None):
        self.rank = rank
        self.rule = rule
        self.support_bound = None if support_bound is None else frozenset(support_bound)
        self.memo: dict = {}

    def __call__(self, lam):
        try:
            return self.memo[lam]
        except KeyError:
            if self.support_bound is not None and lam not in self.support_bound:
                v = 0
            else:
                v = self.rule(lam)
            self.memo[lam] = v
            return v


def combine(terms: Sequence[tuple[object, LatticeFunction]]) -> LazyFunction:
    """Linear combination sum c_i f_i."""
    rank = terms[0][1].rank
    bounds = [f.support_bound for _, f in terms]
    bound = None if any(b is None for b in bounds) else frozenset().union(*bounds)

    def rule(lam):
        total = 0
        for c, f in terms:
            v = f(lam)
            if v:
                total = total + c * v
        return total

    return LazyFunction(rank, rule, bound)


def zero_function(rank: int) -> FiniteFunction:
    return FiniteFunction(rank, {})


def delta(lam: Weight, coeff=1) -> FiniteFunction:
    return FiniteFunction(len(lam), {tuple(lam): coeff})


def weyl_act(w, f: LatticeFunction) -> LazyFunction:
    """(w f)(lam) = f(w^{-1} lam) for w in W_0 or the affine Weyl group."""
    winv = w.inverse()
    bound = None if f.support_bound is None else [w.act(l) for l in f.support_bound]
    return LazyFunction(f.rank, lambda lam: f(winv.act(lam)), bound)


def translate(mu: Weight, f: LatticeFunction) -> LazyFunction:
    """(t_mu f)(lam) = f(lam - mu)."""
    mu = tuple(mu)
    bound = (
        None
        if f.support_bound is None
        else [tuple(a + b for a, b in zip(l, mu)) for l in f.support_bound]
    )
    return LazyFunction(
        f.rank, lambda lam: f(tuple(a - b for a, b in zip(lam, mu))), bound
    )


def agree_on(f: LatticeFunction, g: LatticeFunction, window: Iterable[Weight]):
    """First weight in window where f and g differ, else None."""
    for lam in window:
        lam = tuple(lam)
        a, b = f(lam), g(lam)
        if a != b and (a or b):
            return lam, a, b
    return None


def random_function(
    rank: int,
    L: int,
    rng: random.Random,
    density: float = 0.5,
    coeff_range: int = 3,
    ring: LaurentRing | None = None,
    symmetric_under: RootSystem | None = None,
    integral: bool = False,
) -> FiniteFunction:
    """Seeded random function supported in the ball sum|lam_i| <= L with small
    rational values (formal-mode values are lifted to constants of ``ring``).
    ``integral`` draws integers only; for checking linear identities this loses
    nothing (clear denominators) and keeps the arithmetic on machine ints."""
    from .rootsys import weight_ball

    def draw():
        num = rng.randint(-coeff_range, coeff_range)
        den = 1 if integral else rng.randint(1, coeff_range)
        c = Fraction(num, den)
        c = c.numerator if c.denominator == 1 else c
        return ring.const(c) if ring is not None and c else c

    vals = {}
    pts = weight_ball(rank, L)
    if symmetric_under is not None:
        rs = symmetric_under
        for lam in pts:
            if rs.is_dominant(lam) and rng.random() < density:
                c = draw()
                for mu in rs.orbit(lam):
                    vals[mu] = c
    else:
        for lam in pts:
            if rng.random() < density:
                vals[lam] = draw()
    return FiniteFunction(rank, vals)


class GroupAlgebraElem:
    """Element sum c_lam e^lam of C[P] (coefficients RingElem or rationals)."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, object] | None = None):
        self.rank = rank
        self.terms = {tuple(k): v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, lam: Weight, coeff=1) -> "GroupAlgebraElem":
        return cls(len(lam), {tuple(lam): coeff})

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElem):
            other = GroupAlgebraElem(self.rank, {(0,) * self.rank: other})
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return GroupAlgebraElem(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgebraElem(self.rank, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElem):
            if not other:
                return GroupAlgebraElem(self.rank)
            return GroupAlgebraElem(self.rank, {k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                p = v1 * v2
                out[k] = out[k] + p if k in out else p
        return GroupAlgebraElem(self.rank, out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElem):
            return self.terms == other.terms
        if not other:
            return not self.terms
        return self.terms == {(0,) * self.rank: other}

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, lam: Weight):
        return self.terms.get(tuple(lam), 0)

    def act(self, w) -> "GroupAlgebraElem":
        """Linear action e^lam -> e^{w lam}."""
        return GroupAlgebraElem(self.rank, {w.act(k): v for k, v in self.terms.items()})

    def map_coeffs(self, fn) -> "GroupAlgebraElem":
        return GroupAlgebraElem(self.rank, {k: fn(v) for k, v in self.terms.items()})

    def is_invariant(self, rs: RootSystem) -> bool:
        return all(
            self.coeff(rs.s(j, k)) == v for k, v in self.terms.items() for j in range(1, rs.rank + 1)
        )

    def evaluate(self, x: Sequence) -> object:
        """sum_lam c_lam x^lam with x^lam = prod x_i^{lam_i}."""
        total = 0
        for k, v in self.terms.items():
            total = total + v * monomial_value(x, k)
        return total

    def __repr__(self):
        return f"GroupAlgebraElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            e = "e[" + ",".join(str(x) for x in k) + "]"
            s = ring_elem_to_str(v)
            if s == "1":
                parts.append(e)
            elif s == "-1":
                parts.append("-" + e)
            elif isinstance(v, RingElem) and len(v.terms) > 1:
                parts.append(f"({s})*{e}")
            else:
                parts.append(f"{s}*{e}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self) -> dict:
        return {
            "terms": [
                {"weight": list(k), "coeff": coeff_to_json(self.terms[k])}
                for k in sorted(self.terms, reverse=True)
            ]
        }


def divide_along_line(p: GroupAlgebraElem, alpha: Weight, height) -> GroupAlgebraElem:
    """Exact quotient p / (1 - e^alpha) by prefix sums along alpha-lines.
    ``height`` is any linear form with height(alpha) != 0."""
    h = height(alpha)
    lines: dict = {}
    for mu, c in p.terms.items():
        t = Fraction(height(mu)) / Fraction(h)
        key = tuple(Fraction(m) - t * a for m, a in zip(mu, alpha))
        lines.setdefault(key, []).append((t, mu, c))
    out: dict = {}
    for pts in lines.values():
        pts.sort(key=lambda z: z[0])
        acc = 0
        start = pts[0][1]
        t0 = pts[0][0]
        idx = 0
        steps = int(pts[-1][0] - t0)
        for k in range(steps + 1):
            mu = tuple(m + k * a for m, a in zip(start, alpha))
            while idx < len(pts) and pts[idx][0] - t0 == k:
                acc = acc + pts[idx][2]
                idx += 1
            if acc:
                out[mu] = acc
        if acc:
            raise ArithmeticError(f"not divisible by 1 - e^{list(alpha)}")
    return GroupAlgebraElem(p.rank, out)


def monomial_value(x: Sequence, lam: Weight):
    out = Fraction(1)
    for xi, k in zip(x, lam):
        if k:
            out *= Fraction(xi) ** k
    return out.numerator if out.denominator == 1 else out


def orbit_sum(rs: RootSystem, lam: Weight, coeff=1) -> GroupAlgebraElem:
    """m_lam = sum of e^mu over the W_0-orbit of a dominant weight."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    return GroupAlgebraElem(rs.rank, {mu: coeff for mu in rs.orbit(lam)})


def pairing(f: LatticeFunction, p: GroupAlgebraElem):
    """(f, p) = sum_lam c_lam f(-lam); conjugation is trivial on rational data."""
    total = 0
    for k, v in p.terms.items():
        fv = f(tuple(-x for x in k))
        if fv:
            total = total + v * fv
    return total
