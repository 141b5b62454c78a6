"""Root systems, finite and extended affine Weyl groups.

Weights are integer tuples in the basis of fundamental weights, so the
pairing of a weight with a simple coroot is just a coordinate.  Roots are
stored three ways: in weight coordinates (for acting on weights), in
simple-root coordinates (for positivity and dominance), and as coroots in
simple-coroot coordinates (for pairings).

The affine Weyl group is ``W_0`` extended by translations over the full
weight lattice.  An element ``v t_lam`` acts by ``x -> v(x + lam)``.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates


class RootSystemError(ValueError):
    pass


def _cartan_and_lengths(kind: str, n: int):
    """Cartan matrix C[i][j] = <alpha_i, alpha_j^vee> and squared root lengths."""
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
    lengths = [2] * n
    components = [list(range(n))]
    if kind == "A":
        for i in range(n - 1):
            C[i][i + 1] = C[i + 1][i] = -1
    elif kind in ("B", "C"):
        for i in range(n - 2):
            C[i][i + 1] = C[i + 1][i] = -1
        if kind == "B":
            C[n - 2][n - 1], C[n - 1][n - 2] = -2, -1
            lengths = [2] * (n - 1) + [1]
        else:
            C[n - 2][n - 1], C[n - 1][n - 2] = -1, -2
            lengths = [1] * (n - 1) + [2]
    elif kind == "D":
        for i in range(n - 2):
            C[i][i + 1] = C[i + 1][i] = -1
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif kind == "G":
        C[0][1], C[1][0] = -1, -3
        lengths = [1, 3]
    elif kind == "F":
        C[0][1] = C[1][0] = -1
        C[1][2], C[2][1] = -2, -1
        C[2][3] = C[3][2] = -1
        lengths = [2, 2, 1, 1]
    elif kind == "A1xA1":
        components = [[0], [1]]
    return C, lengths, components


_SUPPORTED = {
    "A": lambda n: 1 <= n <= 6,
    "B": lambda n: 2 <= n <= 4,
    "C": lambda n: 2 <= n <= 4,
    "D": lambda n: 3 <= n <= 4,
    "G": lambda n: n == 2,
    "F": lambda n: n == 4,
}


def parse_cartan_label(label: str) -> tuple[str, int]:
    label = label.strip().upper()
    if label in ("A1XA1", "A1×A1"):
        return "A1xA1", 2
    m = re.fullmatch(r"([ABCDGF])(\d+)", label)
    if not m:
        raise RootSystemError(f"cannot parse Cartan type {label!r}")
    return m.group(1), int(m.group(2))


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int | None = None) -> "RootSystem":
    """Catalog entry for a Cartan type, e.g. ``build_root_system("B", 2)``
    or ``build_root_system("G2")``."""
    if rank is None:
        kind, rank = parse_cartan_label(kind)
    kind = "A1xA1" if kind.upper() in ("A1XA1", "A1×A1") else kind.upper()
    if kind == "G2":
        kind = "G"
    if kind == "F4":
        kind = "F"
    if kind == "A1xA1":
        if rank != 2:
            raise RootSystemError("A1xA1 has rank 2")
    elif kind not in _SUPPORTED or not _SUPPORTED[kind](rank):
        raise RootSystemError(f"unsupported type/rank pair {kind}{rank}")
    return RootSystem(kind, rank)


class RootSystem:
    """Immutable Cartan datum together with the combinatorics derived from it."""

    def __init__(self, kind: str, rank: int):
        self.kind = kind
        self.rank = n = rank
        self.label = kind if kind == "A1xA1" else f"{kind}{rank}"
        C, lengths, components = _cartan_and_lengths(kind, n)
        self.cartan = tuple(tuple(r) for r in C)
        self.simple_lengths = tuple(lengths)
        self.irreducible = len(components) == 1
        self.simple_roots = tuple(tuple(r) for r in C)  # alpha_i = sum_j C[i][j] omega_j

        roots = []
        seen = set()
        frontier = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        for r in frontier:
            seen.add(r)
        while frontier:
            nxt = []
            for c in frontier:
                roots.append(c)
                for j in range(n):
                    p = sum(c[i] * C[i][j] for i in range(n))
                    if p == 0:
                        continue
                    d = list(c)
                    d[j] -= p
                    d = tuple(d)
                    if min(d) >= 0 and d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        roots.sort(key=lambda c: (sum(c), c))
        self.positive_roots_rc = tuple(roots)  # simple-root coordinates
        B = [[Fraction(C[i][j] * lengths[j], 2) for j in range(n)] for i in range(n)]
        sq = [sum(c[i] * c[j] * B[i][j] for i in range(n) for j in range(n)) for c in roots]
        self.root_sqlength = tuple(sq)
        coroots = []
        for c, s in zip(roots, sq):
            cc = [Fraction(c[i] * lengths[i]) / s for i in range(n)]
            assert all(x.denominator == 1 for x in cc)
            coroots.append(tuple(int(x) for x in cc))
        self.positive_coroots = tuple(coroots)  # simple-coroot coordinates
        self.positive_roots = tuple(
            tuple(sum(c[i] * C[i][j] for i in range(n)) for j in range(n)) for c in roots
        )
        self.nroots = len(roots)
        self._root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self._simple_index = [self._root_index[self.simple_roots[j]] for j in range(n)]

        # reflection classes: root length for irreducible, component otherwise
        if self.irreducible:
            distinct = sorted(set(sq))
            if len(distinct) == 1:
                self.classes = ("q",)
                self.root_class = tuple(0 for _ in roots)
            else:
                self.classes = ("q_s", "q_l")
                self.root_class = tuple(0 if s == distinct[0] else 1 for s in sq)
        else:
            self.classes = tuple(f"q_{k + 1}" for k in range(len(components)))
            comp_of = {i: k for k, comp in enumerate(components) for i in comp}
            self.root_class = tuple(
                comp_of[next(i for i in range(n) if c[i])] for c in roots
            )

        if self.irreducible:
            k0 = max(range(self.nroots), key=lambda k: sum(self.positive_coroots[k]))
            self.alpha0_index = k0
            self.alpha0 = self.positive_roots[k0]
        else:
            self.alpha0_index = None
            self.alpha0 = None
        self.rho = tuple(1 for _ in range(n))
        # <lam, rho^vee> = sum_j rho_vee_coeff[j] * lam_j
        self.rho_vee_coeff = tuple(
            Fraction(sum(cv[j] for cv in coroots), 2) for j in range(n)
        )
        self._inverse_cartan_t = _invert([[Fraction(C[j][i]) for j in range(n)] for i in range(n)])

    def __repr__(self):
        return f"RootSystem({self.label})"

    def __reduce__(self):
        return (build_root_system, (self.kind, self.rank))

    # ------------------------------------------------------------------ pairings
    def pair(self, lam: Sequence, k: int):
        """<lam, alpha_k^vee> for the k-th positive root."""
        cv = self.positive_coroots[k]
        return sum(a * b for a, b in zip(cv, lam))

    def pairings(self, lam: Sequence) -> tuple:
        return tuple(sum(a * b for a, b in zip(cv, lam)) for cv in self.positive_coroots)

    def pair_alpha0(self, lam: Sequence):
        return self.pair(lam, self.alpha0_index)

    def pair_rho_vee(self, lam: Sequence):
        return sum(c * x for c, x in zip(self.rho_vee_coeff, lam))

    def root_index(self, root: Weight) -> tuple[int, int]:
        """(index of +-root among positive roots, sign)."""
        k = self._root_index.get(root)
        if k is not None:
            return k, 1
        k = self._root_index.get(tuple(-x for x in root))
        if k is None:
            raise RootSystemError(f"{root} is not a root")
        return k, -1

    def is_root(self, v: Weight) -> bool:
        return v in self._root_index or tuple(-x for x in v) in self._root_index

    def root_class_of(self, root: Weight) -> int:
        return self.root_class[self.root_index(root)[0]]

    def simple_class(self, j: int) -> int:
        """Parameter class of the affine simple reflection s_j (j = 0 is affine)."""
        if j == 0:
            return self.root_class[self.alpha0_index]
        return self.root_class[self._simple_index[j - 1]]

    def to_root_coords(self, lam: Sequence) -> tuple:
        M = self._inverse_cartan_t
        return tuple(sum(M[i][j] * lam[j] for j in range(self.rank)) for i in range(self.rank))

    def in_root_lattice_cone(self, lam: Sequence) -> bool:
        """lam in Q^+ (non-negative integer combination of simple roots)."""
        c = self.to_root_coords(lam)
        return all(x >= 0 and Fraction(x).denominator == 1 for x in c)

    def is_dominant(self, lam: Sequence) -> bool:
        return all(x >= 0 for x in lam)

    # ---------------------------------------------------------- simple actions
    def s(self, j: int, lam: Sequence) -> Weight:
        """Simple reflection s_j, j = 1..n, or the affine s_0 (for j = 0)."""
        if j == 0:
            a0 = self.alpha0
            m = self.pair_alpha0(lam) - 1
            return tuple(x - m * a for x, a in zip(lam, a0))
        a = self.simple_roots[j - 1]
        m = lam[j - 1]
        if m == 0:
            return tuple(lam)
        return tuple(x - m * y for x, y in zip(lam, a))

    def reflect(self, k: int, lam: Sequence) -> Weight:
        m = self.pair(lam, k)
        r = self.positive_roots[k]
        return tuple(x - m * y for x, y in zip(lam, r))

    # -------------------------------------------------- Weyl group machinery
    @lru_cache(maxsize=None)
    def dominant_rep(self, lam: Weight) -> tuple[Weight, "FiniteWeylElement"]:
        """(lam_+, w_lam): w_lam is the shortest element with w_lam lam = lam_+."""
        lam_plus, word = self._dominant_word(tuple(lam))
        # applied letters j1, j2, ...: w_lam = s_jk ... s_j1
        return lam_plus, self.element_from_word(tuple(reversed(word)))

    @lru_cache(maxsize=None)
    def _dominant_word(self, lam: Weight):
        word = []
        lam = tuple(lam)
        while True:
            for j in range(self.rank):
                if lam[j] < 0:
                    lam = self.s(j + 1, lam)
                    word.append(j + 1)
                    break
            else:
                return lam, tuple(word)

    def dominant(self, lam: Weight) -> Weight:
        return self._dominant_word(tuple(lam))[0]

    def w_of(self, lam: Weight) -> "FiniteWeylElement":
        return self.dominant_rep(tuple(lam))[1]

    def element_from_word(self, word: Iterable[int]) -> "FiniteWeylElement":
        M = _identity(self.rank)
        for j in word:
            M = _matmul(M, self._simple_matrix(j))
        return FiniteWeylElement(self, M)

    @lru_cache(maxsize=None)
    def _simple_matrix(self, j: int):
        n = self.rank
        a = self.simple_roots[j - 1]
        return tuple(
            tuple(int(i == k) - (a[i] if k == j - 1 else 0) for k in range(n)) for i in range(n)
        )

    def identity(self) -> "FiniteWeylElement":
        return FiniteWeylElement(self, _identity(self.rank))

    def reflection_element(self, k: int) -> "FiniteWeylElement":
        n = self.rank
        cols = [self.reflect(k, tuple(int(i == c) for i in range(n))) for c in range(n)]
        M = tuple(tuple(cols[c][i] for c in range(n)) for i in range(n))
        return FiniteWeylElement(self, M)

    @lru_cache(maxsize=None)
    def weyl_group(self) -> tuple["FiniteWeylElement", ...]:
        """All elements of W_0, breadth-first by length."""
        e = self.identity()
        out = [e]
        seen = {e.key}
        frontier = [e]
        while frontier:
            nxt = []
            for w in frontier:
                for j in range(1, self.rank + 1):
                    v = self.element_from_matrix(_matmul(w.matrix, self._simple_matrix(j)))
                    if v.key not in seen:
                        seen.add(v.key)
                        nxt.append(v)
            out.extend(nxt)
            frontier = nxt
        return tuple(out)

    def element_from_matrix(self, M) -> "FiniteWeylElement":
        return FiniteWeylElement(self, M)

    @lru_cache(maxsize=None)
    def longest_element(self) -> "FiniteWeylElement":
        return self.dominant_rep(tuple(-x for x in self.rho))[1]

    def w_o(self, lam: Weight) -> Weight:
        return self.longest_element().act(lam)

    def star(self, lam: Weight) -> Weight:
        """lam* = -w_o lam."""
        return tuple(-x for x in self.w_o(lam))

    @lru_cache(maxsize=None)
    def orbit(self, lam: Weight) -> tuple[Weight, ...]:
        lam = tuple(lam)
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for j in range(1, self.rank + 1):
                    nu = self.s(j, mu)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return tuple(sorted(seen, reverse=True))

    def stabilizer(self, lam: Weight) -> list["FiniteWeylElement"]:
        lam = tuple(lam)
        return [w for w in self.weyl_group() if w.act(lam) == lam]

    # ------------------------------------------------------------ orders
    def dominance_leq(self, mu: Weight, lam: Weight) -> bool:
        """mu <= lam in the dominance order extended from P^+ to P."""
        mu, lam = tuple(mu), tuple(lam)
        if mu == lam:
            return True
        mp, wm = self.dominant_rep(mu)
        lp, wl = self.dominant_rep(lam)
        if mp == lp:
            return wm.bruhat_leq(wl)
        return self.in_root_lattice_cone(tuple(a - b for a, b in zip(lp, mp)))

    def dominant_weights_below(self, lam: Weight) -> tuple[Weight, ...]:
        """Dominant mu with mu <= lam (lam dominant), by descending root chains."""
        lam = tuple(lam)
        if not self.is_dominant(lam):
            raise RootSystemError(f"{lam} is not dominant")
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for mu in frontier:
                for a in self.positive_roots:
                    nu = tuple(x - y for x, y in zip(mu, a))
                    if nu not in seen and self.is_dominant(nu):
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        return tuple(sorted(seen, key=lambda m: (self.pair_rho_vee(m), m)))

    def saturated_region(self, lam_max: Weight) -> tuple[Weight, ...]:
        """P(lam_max) = {mu : mu_+ <= lam_max}, sorted along a linear
        extension of the extended dominance order."""
        pts = [mu for d in self.dominant_weights_below(lam_max) for mu in self.orbit(d)]
        return tuple(sorted(pts, key=self.order_key))

    def order_key(self, mu: Weight):
        mp, w = self.dominant_rep(tuple(mu))
        return (self.pair_rho_vee(mp), w.length(), mp, tuple(mu))

    # ------------------------------------------------------------ misc data
    def fundamental_weight(self, j: int) -> Weight:
        return tuple(int(i == j - 1) for i in range(self.rank))

    def minuscule_indices(self) -> tuple[int, ...]:
        return tuple(
            j
            for j in range(1, self.rank + 1)
            if max(self.pair(self.fundamental_weight(j), k) for k in range(self.nroots)) == 1
        )

    def minuscule_weights(self) -> tuple[Weight, ...]:
        return tuple(self.fundamental_weight(j) for j in self.minuscule_indices())

    def quasi_minuscule_weight(self) -> Weight:
        return self.alpha0

    def is_minuscule(self, omega: Weight) -> bool:
        omega = tuple(omega)
        return self.is_dominant(omega) and any(omega) and max(
            self.pair(omega, k) for k in range(self.nroots)
        ) == 1

    def facet_representatives(self) -> tuple[Weight, ...]:
        """W_0-orbits of sum_{j in S} omega_j over all subsets S; every facet
        of the Coxeter complex of W_0 contains one of these weights."""
        pts = set()
        for S in itertools.product((0, 1), repeat=self.rank):
            pts.update(self.orbit(tuple(S)))
        return tuple(sorted(pts, key=lambda m: (sum(map(abs, m)), m)))

    def theta(self, mu: Weight) -> int:
        mp, w = self.dominant_rep(tuple(mu))
        t = self.pair_rho_vee(tuple(a - b for a, b in zip(mp, mu))) - w.length()
        assert Fraction(t).denominator == 1
        return int(t)

    def coxeter_number_mij(self, i: int, j: int) -> int:
        """Order of s_i s_j in W_0 (1 <= i, j <= n)."""
        if i == j:
            return 1
        p = self.cartan[i - 1][j - 1] * self.cartan[j - 1][i - 1]
        return {0: 2, 1: 3, 2: 4, 3: 6}[p]

    def affine_mij(self, i: int, j: int):
        """Order of s_i s_j in the affine Weyl group, None when infinite."""
        if i == j:
            return 1
        if 0 not in (i, j):
            return self.coxeter_number_mij(i, j)
        k = j if i == 0 else i
        if self.rank == 1:
            return None
        a = self.pair(self.simple_roots[k - 1], self.alpha0_index)
        b = self.alpha0[k - 1]
        return {0: 2, 1: 3, 2: 4, 3: 6}[a * b]

    # ------------------------------------------------- affine group helpers
    def affine_simple(self, j: int) -> "AffineWeylElement":
        if j == 0:
            s = self.reflection_element(self.alpha0_index)
            return AffineWeylElement(s, tuple(-x for x in self.alpha0))
        return AffineWeylElement(self.element_from_word((j,)), tuple(0 for _ in range(self.rank)))

    def translation(self, lam: Weight) -> "AffineWeylElement":
        return AffineWeylElement(self.identity(), tuple(lam))

    def v_of(self, lam: Weight) -> "FiniteWeylElement":
        """v_lam: shortest element of W_0 mapping lam into the closed antidominant cone."""
        return self.w_of(tuple(-x for x in lam))

    def u_of(self, lam: Weight) -> "AffineWeylElement":
        """u_lam = t_lam v_lam^{-1}."""
        v = self.v_of(tuple(lam))
        return AffineWeylElement(v.inverse(), v.act(tuple(lam)))

    @lru_cache(maxsize=None)
    def omega_group(self) -> tuple[tuple[int, "AffineWeylElement"], ...]:
        """Length-zero subgroup as (j, u_j) pairs; j = 0 is the identity."""
        zero = tuple(0 for _ in range(self.rank))
        out = [(0, AffineWeylElement(self.identity(), zero))]
        if self.irreducible:
            for j in range(1, self.rank + 1):
                if self.pair_alpha0(self.fundamental_weight(j)) == 1:
                    out.append((j, self.u_of(self.fundamental_weight(j))))
        return tuple(out)

    def omega_permutation(self, u: "AffineWeylElement") -> dict[int, int]:
        """The index map j -> k with u s_j u^{-1} = s_k."""
        uinv = u.inverse()
        gens = {k: self.affine_simple(k) for k in range(self.rank + 1)}
        out = {}
        for j, sj in gens.items():
            c = u * sj * uinv
            ks = [k for k, sk in gens.items() if sk == c]
            if len(ks) != 1:
                raise RootSystemError("length-zero element does not permute the walls")
            out[j] = ks[0]
        return out

    # ---------------------------------------------------------- weight balls
    def ball(self, L: int) -> tuple[Weight, ...]:
        return weight_ball(self.rank, L)

    def interior_alcove_point(self) -> tuple:
        h = sum(self.positive_coroots[self.alpha0_index]) if self.irreducible else 1
        return tuple(Fraction(1, h + 1) for _ in range(self.rank))


@lru_cache(maxsize=None)
def weight_ball(rank: int, L: int) -> tuple[Weight, ...]:
    """Integer vectors with sum of absolute values at most L."""
    pts = [v for v in itertools.product(range(-L, L + 1), repeat=rank) if sum(map(abs, v)) <= L]
    return tuple(sorted(pts, key=lambda v: (sum(map(abs, v)), v)))


def norm(lam: Sequence) -> int:
    return sum(abs(x) for x in lam)


class FiniteWeylElement:
    """Element of W_0 as an integer matrix on fundamental-weight coordinates.

    Identity is determined by the image of rho (a regular weight), which also
    serves as the hash key.
    """

    __slots__ = ("rs", "matrix", "key")

    def __init__(self, rs: RootSystem, matrix):
        self.rs = rs
        self.matrix = matrix
        self.key = _matvec(matrix, rs.rho)

    def act(self, x: Sequence) -> tuple:
        return _matvec(self.matrix, x)

    def __call__(self, x):
        return self.act(x)

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        if isinstance(other, AffineWeylElement):
            return AffineWeylElement(self, tuple(0 for _ in range(self.rs.rank))) * other
        return FiniteWeylElement(self.rs, _matmul(self.matrix, other.matrix))

    def __eq__(self, other):
        return isinstance(other, FiniteWeylElement) and self.key == other.key and self.rs is other.rs

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        w = "".join(f"s{j}" for j in self.word()) or "1"
        return f"<{w}>"

    def word(self) -> tuple[int, ...]:
        """A reduced word (i1, ..., ik) with w = s_i1 ... s_ik."""
        return self.rs._dominant_word(self.key)[1]

    def length(self) -> int:
        return len(self.word())

    def inverse(self) -> "FiniteWeylElement":
        return _inverse(self)

    def is_identity(self) -> bool:
        return self.key == self.rs.rho

    def inversion_set(self) -> tuple[int, ...]:
        """R(w) = {alpha > 0 : w alpha < 0} as positive-root indices."""
        return _inversion_set(self)

    def sends_negative(self, k: int) -> bool:
        return k in _inversion_set(self)

    def bruhat_leq(self, other: "FiniteWeylElement") -> bool:
        return self.key in _bruhat_ideal(other)


@lru_cache(maxsize=None)
def _inversion_set(w: FiniteWeylElement) -> tuple[int, ...]:
    rs = w.rs
    return tuple(
        k for k, r in enumerate(rs.positive_roots) if rs.pair_rho_vee(w.act(r)) < 0
    )


@lru_cache(maxsize=None)
def _inverse(w: FiniteWeylElement) -> FiniteWeylElement:
    return w.rs.element_from_word(tuple(reversed(w.word())))


@lru_cache(maxsize=None)
def _bruhat_ideal(w: FiniteWeylElement) -> frozenset:
    """Keys of all subword products of a fixed reduced word of w."""
    rs = w.rs
    elems = {rs.identity().key: _identity(rs.rank)}
    for j in w.word():
        sm = rs._simple_matrix(j)
        for M in list(elems.values()):
            N = _matmul(M, sm)
            k = _matvec(N, rs.rho)
            if k not in elems:
                elems[k] = N
    return frozenset(elems)


class AffineWeylElement:
    """The element v t_lam of W_0 x| t_P, acting by x -> v(x + lam)."""

    __slots__ = ("finite", "trans")

    def __init__(self, finite: FiniteWeylElement, trans: Sequence):
        self.finite = finite
        self.trans = tuple(trans)

    @property
    def rs(self) -> RootSystem:
        return self.finite.rs

    def act(self, x: Sequence) -> tuple:
        return self.finite.act(tuple(a + b for a, b in zip(x, self.trans)))

    def __call__(self, x):
        return self.act(x)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if isinstance(other, FiniteWeylElement):
            other = AffineWeylElement(other, tuple(0 for _ in self.trans))
        # (v t_lam)(v' t_mu) = (v v') t_{v'^{-1} lam + mu}
        v2 = other.finite
        shifted = v2.inverse().act(self.trans)
        return AffineWeylElement(
            self.finite * v2, tuple(a + b for a, b in zip(shifted, other.trans))
        )

    def inverse(self) -> "AffineWeylElement":
        v = self.finite
        return AffineWeylElement(v.inverse(), tuple(-x for x in v.act(self.trans)))

    def __eq__(self, other):
        return (
            isinstance(other, AffineWeylElement)
            and self.finite == other.finite
            and self.trans == other.trans
        )

    def __hash__(self):
        return hash((self.finite.key, self.trans))

    def __repr__(self):
        return f"AffineWeylElement({self.finite!r}, t{list(self.trans)})"

    def length_exponents(self) -> tuple[int, ...]:
        """Per positive root alpha: |<lam, alpha^vee> + chi(v alpha)|, whose sum is the length."""
        rs = self.rs
        inv = set(self.finite.inversion_set())
        return tuple(
            abs(rs.pair(self.trans, k) + (1 if k in inv else 0)) for k in range(rs.nroots)
        )

    def length(self) -> int:
        return sum(self.length_exponents())

    def reduced_decomposition(self) -> tuple[tuple[int, ...], "AffineWeylElement"]:
        """(word, u) with self = s_j1 ... s_jk u, the word reduced and u in Omega."""
        rs = self.rs
        w = self
        word = []
        ell = w.length()
        gens = [rs.affine_simple(j) for j in range(rs.rank + 1)]
        while ell:
            for j, sj in enumerate(gens):
                c = sj * w
                lc = c.length()
                if lc < ell:
                    word.append(j)
                    w, ell = c, lc
                    break
            else:  # pragma: no cover - impossible for a Coxeter system
                raise RootSystemError("no descent found")
        return tuple(word), w


def separating_hyperplane_count(w: AffineWeylElement) -> tuple[int, ...]:
    """Per positive root, the number of hyperplanes V_{alpha,k} strictly
    between an interior point of A and its image under w."""
    rs = w.rs
    x0 = rs.interior_alcove_point()
    x1 = w.act(x0)
    out = []
    for k in range(rs.nroots):
        a, b = rs.pair(x0, k), rs.pair(x1, k)
        lo, hi = min(a, b), max(a, b)
        out.append(sum(1 for m in range(int(lo) - 1, int(hi) + 2) if lo < m < hi))
    return tuple(out)


def classify_pieri_case(rs: RootSystem, lam: Weight, nu: Weight) -> dict:
    """Which of the two situations for (lam, nu) occurs; lam dominant and
    nu in the orbit of a (quasi-)minuscule weight."""
    lam, nu = tuple(lam), tuple(nu)
    if not rs.is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    omega = rs.dominant(nu)
    if not (rs.is_minuscule(omega) or omega == rs.alpha0):
        raise RootSystemError(f"{nu} is not in a (quasi-)minuscule orbit")
    mu = tuple(a - b for a, b in zip(lam, nu))
    mp, w = rs.dominant_rep(mu)
    th = rs.theta(mu)
    if mp != lam:
        return {"case": "i", "w": w, "theta": th, "fixes_lambda": w.act(lam) == lam}
    wn = w.act(nu)
    j = next(
        (i + 1 for i in range(rs.rank) if wn == tuple(-x for x in rs.simple_roots[i])), None
    )
    return {"case": "ii", "w": w, "j": j, "theta": th}


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(A, B):
    n = len(A)
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _matvec(M, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in M)


def _invert(M):
    n = len(M)
    A = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]
