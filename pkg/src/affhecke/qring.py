"""Exact coefficient arithmetic in the Hecke parameters.

``RingElem`` is a sparse Laurent polynomial over the rationals in a fixed,
named set of variables.  ``RationalElem`` is a quotient of two of them with
equality by cross-multiplication.  ``MultiplicityParams`` attaches a value
(a formal variable or a positive rational) to each reflection class of a
root system and provides the multiplicity bookkeeping q_w, e_q and the
Poincare series.

Coefficients throughout the package are either ``RingElem`` (formal mode) or
``int``/``Fraction`` (numeric mode); code that only uses ``+ - *`` and the
helpers here works in both.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import _kernel as K
from .rootsys import AffineWeylElement, FiniteWeylElement, RootSystem


class NotDivisible(ArithmeticError):
    pass


def _coerce_scalar(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return _coerce_scalar(Fraction(c))
    raise TypeError(f"not a rational scalar: {c!r}")


class LaurentRing:
    """Laurent polynomial ring Q[x_1^{+-1}, ..., x_k^{+-1}] with named variables."""

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self._zero = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"LaurentRing({', '.join(self.names)})"

    def gen(self, name) -> "RingElem":
        i = self.names.index(name) if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return RingElem(self, {tuple(e): 1})

    def gens(self) -> tuple["RingElem", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff=1) -> "RingElem":
        coeff = _coerce_scalar(coeff)
        return RingElem(self, {tuple(exps): coeff} if coeff else {})

    def const(self, c) -> "RingElem":
        c = _coerce_scalar(c)
        return RingElem(self, {self._zero: c} if c else {})

    def zero(self) -> "RingElem":
        return RingElem(self, {})

    def one(self) -> "RingElem":
        return self.const(1)

    def __call__(self, c) -> "RingElem":
        if isinstance(c, RingElem):
            return self.embed(c)
        return self.const(c)

    def embed(self, x: "RingElem") -> "RingElem":
        """Map an element of another ring in by variable name."""
        if x.ring == self:
            return x
        idx = [self.names.index(nm) for nm in x.ring.names]
        terms = {}
        for k, v in x.terms.items():
            e = [0] * self.nvars
            for i, a in zip(idx, k):
                e[i] = a
            terms[tuple(e)] = v
        return RingElem(self, terms)

    def from_json(self, data) -> "RingElem":
        if isinstance(data, str):
            data = json.loads(data)
        return RingElem(
            self,
            {tuple(t["exponents"]): _coerce_scalar(Fraction(t["coeff"])) for t in data},
        )


class RingElem:
    """Sparse Laurent polynomial; immutable, canonical (no zero coefficients)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # ----------------------------------------------------------- coercion
    def _lift(self, other):
        if isinstance(other, RingElem):
            if other.ring is not self.ring and other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    # --------------------------------------------------------- arithmetic
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, K.add(self.terms, o.terms))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, K.sub(self.terms, o.terms))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RingElem(self.ring, K.sub(o.terms, self.terms))

    def __neg__(self):
        return RingElem(self.ring, {k: -v for k, v in self.terms.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElem(self.ring, K.scale(self.terms, _coerce_scalar(other)))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if len(o.terms) == 1:
            (e, c), = o.terms.items()
            return RingElem(self.ring, K.shift(self.terms, e, c))
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return RingElem(self.ring, K.shift(o.terms, e, c))
        return RingElem(self.ring, K.mul(self.terms, o.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return RingElem(self.ring, {tuple(x * n for x in e): _coerce_scalar(Fraction(c) ** n)})
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        return self.is_monomial()

    def inverse(self) -> "RingElem":
        if len(self.terms) != 1:
            raise NotDivisible(f"{self} is not a unit")
        (e, c), = self.terms.items()
        return RingElem(self.ring, {tuple(-x for x in e): _coerce_scalar(1 / Fraction(c))})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError
            return RingElem(self.ring, K.scale(self.terms, _coerce_scalar(1 / Fraction(other))))
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return exact_div(self, o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return exact_div(o, self)

    # ----------------------------------------------------------- equality
    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {self.ring._zero: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self.terms:
                self._hash = hash(0)
            elif set(self.terms) == {self.ring._zero}:
                self._hash = hash(self.terms[self.ring._zero])
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # ----------------------------------------------------------- queries
    def constant_value(self):
        """The rational value if this is a constant, else raise."""
        if not self.terms:
            return 0
        if set(self.terms) != {self.ring._zero}:
            raise ValueError(f"{self} is not constant")
        return self.terms[self.ring._zero]

    def evaluate(self, values) -> Fraction:
        """Substitute rationals for all variables (dict by name or sequence)."""
        if isinstance(values, Mapping):
            values = [values[n] for n in self.ring.names]
        vals = [Fraction(v) for v in values]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = Fraction(c)
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return _coerce_scalar(total)

    def specialize(self, name: str, value) -> "RingElem":
        """Substitute a rational for one variable, staying in the same ring."""
        i = self.ring.names.index(name)
        value = Fraction(value)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < 0 and value == 0:
                raise ZeroDivisionError(f"{name} = 0 in a term with negative exponent")
            t = c * value ** k if k else c
            e2 = e[:i] + (0,) + e[i + 1 :]
            K.axpy(out, {e2: 1}, _coerce_scalar(t))
        return RingElem(self.ring, out)

    def min_exponents(self) -> tuple[int, ...]:
        return tuple(min(e[i] for e in self.terms) for i in range(self.ring.nvars))

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max(e[i] for e in self.terms) for i in range(self.ring.nvars))

    # ------------------------------------------------------------ output
    def __repr__(self):
        return f"RingElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.ring.names, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def to_json(self) -> list:
        return [
            {"exponents": list(e), "coeff": str(Fraction(self.terms[e]))}
            for e in sorted(self.terms)
        ]


def exact_div(a: RingElem, b: RingElem) -> RingElem:
    """a / b when b divides a in the Laurent ring; NotDivisible otherwise.

    Lexicographic long division: the quotient's leading term is forced at
    each step, and the quotient's lowest term is known in advance, which
    bounds the loop when the division is not exact.
    """
    if not b.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if not a.terms:
        return a.ring.zero()
    if len(b.terms) == 1:
        return a * b.inverse()
    bl = max(b.terms)
    bc = Fraction(b.terms[bl])
    floor = tuple(x - y for x, y in zip(min(a.terms), min(b.terms)))
    rem = dict(a.terms)
    quot = {}
    while rem:
        lt = max(rem)
        e = tuple(x - y for x, y in zip(lt, bl))
        if e < floor:
            raise NotDivisible(f"{b} does not divide {a}")
        c = _coerce_scalar(rem[lt] / bc)
        quot[e] = c
        K.axpy(rem, b.terms, -c, e)
        if lt in rem:  # cancellation must remove the leading term
            raise NotDivisible("inexact leading-term cancellation")
    return RingElem(a.ring, quot)


def divide(a, b):
    """Exact quotient for either coefficient kind."""
    if isinstance(a, RingElem) or isinstance(b, RingElem):
        if not isinstance(a, RingElem):
            a = b.ring.const(a)
        if not isinstance(b, RingElem):
            if not b:
                raise ZeroDivisionError
            return a * Fraction(1) / b
        return exact_div(a, b)
    return _coerce_scalar(Fraction(a) / Fraction(b))


class RationalElem:
    """Quotient num/den of ring elements, compared by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, RationalElem):
            num, den = num.num * 1, num.den * den
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def _lift(self, o):
        return o if isinstance(o, RationalElem) else RationalElem(o, 1)

    def __add__(self, o):
        o = self._lift(o)
        return RationalElem(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._lift(o)
        return RationalElem(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return RationalElem(-self.num, self.den)

    def __mul__(self, o):
        o = self._lift(o)
        return RationalElem(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        return RationalElem(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __eq__(self, o):
        if not isinstance(o, (RationalElem, RingElem, int, Fraction)):
            return NotImplemented
        o = self._lift(o)
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def reduce(self):
        """The ring element num/den when the division is exact."""
        return divide(self.num, self.den)

    def __repr__(self):
        return f"RationalElem(({self.num}) / ({self.den}))"


class MultiplicityParams:
    """Values of the multiplicity function on the reflection classes of a root
    system: formal variables, or positive rationals."""

    def __init__(self, rs: RootSystem, values: Sequence, ring: LaurentRing | None = None):
        self.rs = rs
        self.values = tuple(values)
        self.ring = ring
        self.is_formal = ring is not None
        self.inverses = tuple(
            v.inverse() if isinstance(v, RingElem) else _coerce_scalar(1 / Fraction(v))
            for v in self.values
        )
        self.one = ring.one() if ring is not None else 1
        self._q0 = rs.simple_class(0) if rs.irreducible else None

    @classmethod
    def formal(cls, rs: RootSystem) -> "MultiplicityParams":
        ring = _ring_for(rs.classes)
        return cls(rs, ring.gens(), ring)

    @classmethod
    def numeric(cls, rs: RootSystem, q) -> "MultiplicityParams":
        """q is one rational (all classes) or a mapping class name -> rational."""
        if isinstance(q, Mapping):
            vals = [Fraction(q[name]) for name in rs.classes]
        else:
            vals = [Fraction(q)] * len(rs.classes)
        for v in vals:
            if v == 0:
                raise ValueError("multiplicity parameters must be nonzero")
        return cls(rs, [_coerce_scalar(v) for v in vals])

    def __repr__(self):
        vals = ", ".join(f"{n}={v}" for n, v in zip(self.rs.classes, self.values))
        return f"MultiplicityParams({self.rs.label}: {vals})"

    def q(self, j: int):
        """q_j for the affine simple reflection s_j (j = 0 is the affine node)."""
        return self.values[self.rs.simple_class(j)]

    def qinv(self, j: int):
        return self.inverses[self.rs.simple_class(j)]

    def q0(self):
        return self.values[self._q0]

    def q_root(self, k: int):
        return self.values[self.rs.root_class[k]]

    def monomial(self, exps: Sequence[int]):
        """prod_c (class value)^exps[c]."""
        if self.is_formal:
            return self.ring.monomial(tuple(exps))
        out = Fraction(1)
        for v, e in zip(self.values, exps):
            if e:
                out *= Fraction(v) ** e
        return _coerce_scalar(out)

    def coerce(self, c):
        if self.is_formal:
            return self.ring(c)
        if isinstance(c, RingElem):
            return c.evaluate(self.values)
        return _coerce_scalar(c)

    def specialize(self, c):
        """Evaluate a formal coefficient at numeric values of the same classes."""
        if isinstance(c, RingElem):
            return c.evaluate(self.values)
        return c


@lru_cache(maxsize=None)
def _ring_for(names: tuple) -> LaurentRing:
    return LaurentRing(names)


def class_exponents_q_w(w, rs: RootSystem) -> tuple[int, ...]:
    exps = [0] * len(rs.classes)
    if isinstance(w, FiniteWeylElement):
        for k in w.inversion_set():
            exps[rs.root_class[k]] += 1
    else:
        for k, m in enumerate(w.length_exponents()):
            exps[rs.root_class[k]] += m
    return tuple(exps)


def q_of_element(w, params: MultiplicityParams):
    """q_w: product of q_alpha over the hyperplanes separating A and wA."""
    return params.monomial(class_exponents_q_w(w, params.rs))


def e_q(lam: Sequence[int], params: MultiplicityParams):
    """prod_{alpha > 0} q_alpha^{<lam, alpha^vee>}."""
    rs = params.rs
    exps = [0] * len(rs.classes)
    for k in range(rs.nroots):
        exps[rs.root_class[k]] += rs.pair(lam, k)
    return params.monomial(exps)


def q_t(lam: Sequence[int], params: MultiplicityParams):
    """q_{t_lam} = e_q(lam_+)."""
    return e_q(params.rs.dominant(tuple(lam)), params)


def poincare_brute(params: MultiplicityParams, lam: Sequence[int] | None = None):
    """Sum of q_w^2 over W_0 or the stabilizer of a dominant weight."""
    rs = params.rs
    group = rs.weyl_group() if lam is None else rs.stabilizer(tuple(lam))
    total = 0
    for w in group:
        total = total + q_of_element(w, params) ** 2
    return total


def poincare_product(params: MultiplicityParams, lam: Sequence[int] | None = None):
    """prod (1 - q_alpha^2 e_q(alpha)) / (1 - e_q(alpha)) over positive roots
    orthogonal to lam (all roots when lam is None)."""
    rs = params.rs
    num, den = params.one, params.one
    for k, a in enumerate(rs.positive_roots):
        if lam is not None and rs.pair(lam, k) != 0:
            continue
        ea = e_q(a, params)
        num = num * (1 - params.q_root(k) ** 2 * ea)
        den = den * (1 - ea)
    return divide(num, den)


def poincare_series(params: MultiplicityParams, lam: Sequence[int] | None = None):
    """W_0(q^2), or W_{0,lam}(q^2) for dominant lam; both routes must agree."""
    if lam is not None and not params.rs.is_dominant(tuple(lam)):
        raise ValueError(f"{lam} is not dominant")
    a = poincare_brute(params, lam)
    b = poincare_product(params, lam)
    if a != b:
        raise ArithmeticError(f"Poincare routes disagree: {a} vs {b}")
    return a


def ring_elem_to_str(c) -> str:
    if isinstance(c, (RingElem, str)):
        return str(c)
    return str(Fraction(c))


def coeff_to_json(c):
    if isinstance(c, RingElem):
        return c.to_json()
    return [{"exponents": [], "coeff": str(Fraction(c))}]
