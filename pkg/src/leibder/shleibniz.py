"""Two-term sh Leibniz algebras, homotopy derivations, crossed modules,
and the dictionary with the categorified (2-vector-space) presentation.

Identity numbering follows the order of appearance in the defining lists:
the eight structure identities (1–8), homotopy-derivation items (a)–(d),
four morphism identities plus three more when the extra homotopy B is
present, and crossed-module axioms (a)–(d).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InputError
from .exactlin import (
    Matrix,
    Vector,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
    scalar,
    vector,
    zero_vector,
)
from .cohomology import Cochain, LeibDerCochain, partial
from .leibniz import (
    CheckReport,
    LeibDerPair,
    LeibDerRepresentation,
    LeibnizAlgebra,
    Representation,
)


@dataclass(frozen=True)
class BilinearMap:
    dim1: int
    dim2: int
    out_dim: int
    values: tuple[Vector, ...]  # row-major over (i, j)

    def __post_init__(self):
        if len(self.values) != self.dim1 * self.dim2:
            raise InputError("bilinear map value array has wrong length")
        if any(len(v) != self.out_dim for v in self.values):
            raise InputError("bilinear map values have wrong coordinate length")

    @staticmethod
    def build(dim1: int, dim2: int, out_dim: int, values) -> "BilinearMap":
        return BilinearMap(dim1, dim2, out_dim, tuple(vector(v) for v in values))

    @staticmethod
    def zero(dim1: int, dim2: int, out_dim: int) -> "BilinearMap":
        z = zero_vector(out_dim)
        return BilinearMap(dim1, dim2, out_dim, (z,) * (dim1 * dim2))

    def at(self, i: int, j: int) -> Vector:
        return self.values[i * self.dim2 + j]

    def eval(self, a: Sequence, b: Sequence) -> Vector:
        a, b = vector(a), vector(b)
        out = zero_vector(self.out_dim)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                out = vec_add(out, vec_scale(ai * bj, self.at(i, j)))
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for v in self.values for x in v)

    def __add__(self, other: "BilinearMap") -> "BilinearMap":
        if (self.dim1, self.dim2, self.out_dim) != (other.dim1, other.dim2, other.out_dim):
            raise InputError("bilinear map shape mismatch")
        return BilinearMap(
            self.dim1, self.dim2, self.out_dim,
            tuple(vec_add(a, b) for a, b in zip(self.values, other.values)),
        )

    def scale(self, c) -> "BilinearMap":
        c = scalar(c)
        return BilinearMap(
            self.dim1, self.dim2, self.out_dim,
            tuple(vec_scale(c, v) for v in self.values),
        )


@dataclass(frozen=True)
class TrilinearMap:
    dim: int       # all three inputs from the same space
    out_dim: int
    values: tuple[Vector, ...]  # row-major over (i, j, k)

    def __post_init__(self):
        if len(self.values) != self.dim ** 3:
            raise InputError("trilinear map value array has wrong length")
        if any(len(v) != self.out_dim for v in self.values):
            raise InputError("trilinear map values have wrong coordinate length")

    @staticmethod
    def build(dim: int, out_dim: int, values) -> "TrilinearMap":
        return TrilinearMap(dim, out_dim, tuple(vector(v) for v in values))

    @staticmethod
    def zero(dim: int, out_dim: int) -> "TrilinearMap":
        z = zero_vector(out_dim)
        return TrilinearMap(dim, out_dim, (z,) * dim ** 3)

    def at(self, i: int, j: int, k: int) -> Vector:
        return self.values[(i * self.dim + j) * self.dim + k]

    def eval(self, a: Sequence, b: Sequence, c: Sequence) -> Vector:
        a, b, c = vector(a), vector(b), vector(c)
        out = zero_vector(self.out_dim)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                for k, ck in enumerate(c):
                    if ck == 0:
                        continue
                    out = vec_add(out, vec_scale(ai * bj * ck, self.at(i, j, k)))
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for v in self.values for x in v)


@dataclass(frozen=True)
class TwoTermShLeibniz:
    """Chain complex A₁ →d A₀ with l₂ in the three admissible degrees and l₃."""

    dim0: int
    dim1: int
    d: Matrix            # A₁ → A₀
    l2_00: BilinearMap   # A₀ × A₀ → A₀
    l2_01: BilinearMap   # A₀ × A₁ → A₁
    l2_10: BilinearMap   # A₁ × A₀ → A₁
    l3: TrilinearMap     # A₀ × A₀ × A₀ → A₁

    def __post_init__(self):
        if (self.d.rows, self.d.cols) != (self.dim0, self.dim1):
            raise InputError("differential shape mismatch")
        if (self.l2_00.dim1, self.l2_00.dim2, self.l2_00.out_dim) != (self.dim0, self.dim0, self.dim0):
            raise InputError("l2 on A0 has wrong shape")
        if (self.l2_01.dim1, self.l2_01.dim2, self.l2_01.out_dim) != (self.dim0, self.dim1, self.dim1):
            raise InputError("l2 on A0 x A1 has wrong shape")
        if (self.l2_10.dim1, self.l2_10.dim2, self.l2_10.out_dim) != (self.dim1, self.dim0, self.dim1):
            raise InputError("l2 on A1 x A0 has wrong shape")
        if (self.l3.dim, self.l3.out_dim) != (self.dim0, self.dim1):
            raise InputError("l3 has wrong shape")

    @staticmethod
    def zero(dim0: int, dim1: int) -> "TwoTermShLeibniz":
        return TwoTermShLeibniz(
            dim0, dim1, Matrix.zeros(dim0, dim1),
            BilinearMap.zero(dim0, dim0, dim0),
            BilinearMap.zero(dim0, dim1, dim1),
            BilinearMap.zero(dim1, dim0, dim1),
            TrilinearMap.zero(dim0, dim1),
        )

    @property
    def is_skeletal(self) -> bool:
        return self.d.is_zero()

    @property
    def is_strict(self) -> bool:
        return self.l3.is_zero()


@dataclass(frozen=True)
class HomotopyDerivation:
    theta0: Matrix        # A₀ → A₀
    theta1: Matrix        # A₁ → A₁
    theta2: BilinearMap   # A₀ × A₀ → A₁

    @property
    def is_strict(self) -> bool:
        return self.theta2.is_zero()

    @staticmethod
    def zero(dim0: int, dim1: int) -> "HomotopyDerivation":
        return HomotopyDerivation(
            Matrix.zeros(dim0, dim0), Matrix.zeros(dim1, dim1),
            BilinearMap.zero(dim0, dim0, dim1),
        )


@dataclass(frozen=True)
class ShMorphism:
    f0: Matrix           # A₀ → A₀′
    f1: Matrix           # A₁ → A₁′
    f2: BilinearMap      # A₀ × A₀ → A₁′
    B: Optional[Matrix] = None  # A₀ → A₁′, derivation-respecting data

    @staticmethod
    def identity(S: TwoTermShLeibniz, with_B: bool = False) -> "ShMorphism":
        B = Matrix.zeros(S.dim1, S.dim0) if with_B else None
        return ShMorphism(
            Matrix.identity(S.dim0), Matrix.identity(S.dim1),
            BilinearMap.zero(S.dim0, S.dim0, S.dim1), B,
        )


@dataclass(frozen=True)
class CrossedModule:
    """((g, φ_g), (h, φ_h), dt, actions of h on g)."""

    g: LeibDerPair
    h: LeibDerPair
    dt: Matrix            # g → h
    action: Representation  # base h.algebra, module of dimension g.dim

    def __post_init__(self):
        if (self.dt.rows, self.dt.cols) != (self.h.dim, self.g.dim):
            raise InputError("connecting map shape mismatch")
        if self.action.base != self.h.algebra or self.action.mdim != self.g.dim:
            raise InputError("action tensors do not match the two algebras")

    @staticmethod
    def zero(gdim: int, hdim: int) -> "CrossedModule":
        g = LeibDerPair(LeibnizAlgebra.abelian(gdim), Matrix.zeros(gdim, gdim))
        h = LeibDerPair(LeibnizAlgebra.abelian(hdim), Matrix.zeros(hdim, hdim))
        return CrossedModule(g, h, Matrix.zeros(hdim, gdim),
                             Representation.trivial(h.algebra, gdim))


# -- axiom checks -------------------------------------------------------


class _Fails:
    def __init__(self):
        self.seen: dict = {}

    def add(self, label, witness):
        self.seen.setdefault(label, witness)

    def report(self) -> CheckReport:
        items = tuple(self.seen.items())
        return CheckReport(ok=not items, failures=items)


def check_sh(S: TwoTermShLeibniz) -> CheckReport:
    """The eight structure identities, reported by number 1–8."""
    fails = _Fails()
    a0, a1 = S.dim0, S.dim1
    e0 = [unit_vector(a0, i) for i in range(a0)]
    e1 = [unit_vector(a1, b) for b in range(a1)]
    d = S.d
    for i, b in itertools.product(range(a0), range(a1)):
        if d.apply(S.l2_01.at(i, b)) != S.l2_00.eval(e0[i], d.col(b)):
            fails.add("1", (i, b))
        if d.apply(S.l2_10.at(b, i)) != S.l2_00.eval(d.col(b), e0[i]):
            fails.add("2", (b, i))
    for b, c in itertools.product(range(a1), repeat=2):
        if S.l2_01.eval(d.col(b), e1[c]) != S.l2_10.eval(e1[b], d.col(c)):
            fails.add("3", (b, c))
    for i, j, k in itertools.product(range(a0), repeat=3):
        lhs = d.apply(S.l3.at(i, j, k))
        rhs = S.l2_00.eval(S.l2_00.at(i, j), e0[k])
        rhs = vec_sub(rhs, S.l2_00.eval(S.l2_00.at(i, k), e0[j]))
        rhs = vec_sub(rhs, S.l2_00.eval(e0[i], S.l2_00.at(j, k)))
        if lhs != rhs:
            fails.add("4", (i, j, k))
    for i, j, b in itertools.product(range(a0), range(a0), range(a1)):
        # 5: l3(x, y, dm) = l2(l2(x,y), m) − l2(l2(x,m), y) − l2(x, l2(y,m))
        lhs = S.l3.eval(e0[i], e0[j], d.col(b))
        rhs = S.l2_01.eval(S.l2_00.at(i, j), e1[b])
        rhs = vec_sub(rhs, S.l2_10.eval(S.l2_01.at(i, b), e0[j]))
        rhs = vec_sub(rhs, S.l2_01.eval(e0[i], S.l2_01.at(j, b)))
        if lhs != rhs:
            fails.add("5", (i, j, b))
        # 6: l3(x, dm, y) = l2(l2(x,m), y) − l2(l2(x,y), m) − l2(x, l2(m,y))
        lhs = S.l3.eval(e0[i], d.col(b), e0[j])
        rhs = S.l2_10.eval(S.l2_01.at(i, b), e0[j])
        rhs = vec_sub(rhs, S.l2_01.eval(S.l2_00.at(i, j), e1[b]))
        rhs = vec_sub(rhs, S.l2_01.eval(e0[i], S.l2_10.at(b, j)))
        if lhs != rhs:
            fails.add("6", (i, j, b))
        # 7: l3(dm, x, y) = l2(l2(m,x), y) − l2(l2(m,y), x) − l2(m, l2(x,y))
        lhs = S.l3.eval(d.col(b), e0[i], e0[j])
        rhs = S.l2_10.eval(S.l2_10.at(b, i), e0[j])
        rhs = vec_sub(rhs, S.l2_10.eval(S.l2_10.at(b, j), e0[i]))
        rhs = vec_sub(rhs, S.l2_10.eval(e1[b], S.l2_00.at(i, j)))
        if lhs != rhs:
            fails.add("7", (b, i, j))
    for i, j, k, w in itertools.product(range(a0), repeat=4):
        lhs = S.l2_01.eval(e0[i], S.l3.at(j, k, w))
        lhs = vec_add(lhs, S.l2_10.eval(S.l3.at(i, k, w), e0[j]))
        lhs = vec_sub(lhs, S.l2_10.eval(S.l3.at(i, j, w), e0[k]))
        lhs = vec_add(lhs, S.l2_10.eval(S.l3.at(i, j, k), e0[w]))
        rhs = S.l3.eval(S.l2_00.at(i, j), e0[k], e0[w])
        rhs = vec_sub(rhs, S.l3.eval(S.l2_00.at(i, k), e0[j], e0[w]))
        rhs = vec_add(rhs, S.l3.eval(S.l2_00.at(i, w), e0[j], e0[k]))
        rhs = vec_sub(rhs, S.l3.eval(e0[i], S.l2_00.at(j, k), e0[w]))
        rhs = vec_add(rhs, S.l3.eval(e0[i], S.l2_00.at(j, w), e0[k]))
        rhs = vec_add(rhs, S.l3.eval(e0[i], e0[j], S.l2_00.at(k, w)))
        if lhs != rhs:
            fails.add("8", (i, j, k, w))
    return fails.report()


def check_homotopy_derivation(S: TwoTermShLeibniz, th: HomotopyDerivation) -> CheckReport:
    """Chain-map condition plus items (a)–(d)."""
    if not check_sh(S).ok:
        raise InputError("underlying structure fails its identities")
    fails = _Fails()
    a0, a1 = S.dim0, S.dim1
    e0 = [unit_vector(a0, i) for i in range(a0)]
    e1 = [unit_vector(a1, b) for b in range(a1)]
    if not (S.d @ th.theta1 == th.theta0 @ S.d):
        fails.add("chain-map", ())
    for i, j in itertools.product(range(a0), repeat=2):
        lhs = S.d.apply(th.theta2.at(i, j))
        rhs = th.theta0.apply(S.l2_00.at(i, j))
        rhs = vec_sub(rhs, S.l2_00.eval(th.theta0.col(i), e0[j]))
        rhs = vec_sub(rhs, S.l2_00.eval(e0[i], th.theta0.col(j)))
        if lhs != rhs:
            fails.add("a", (i, j))
    for i, b in itertools.product(range(a0), range(a1)):
        lhs = th.theta2.eval(e0[i], S.d.col(b))
        rhs = th.theta1.apply(S.l2_01.at(i, b))
        rhs = vec_sub(rhs, S.l2_01.eval(th.theta0.col(i), e1[b]))
        rhs = vec_sub(rhs, S.l2_01.eval(e0[i], th.theta1.col(b)))
        if lhs != rhs:
            fails.add("b", (i, b))
        lhs = th.theta2.eval(S.d.col(b), e0[i])
        rhs = th.theta1.apply(S.l2_10.at(b, i))
        rhs = vec_sub(rhs, S.l2_10.eval(th.theta1.col(b), e0[i]))
        rhs = vec_sub(rhs, S.l2_10.eval(e1[b], th.theta0.col(i)))
        if lhs != rhs:
            fails.add("c", (b, i))
    for i, j, k in itertools.product(range(a0), repeat=3):
        lhs = S.l3.eval(th.theta0.col(i), e0[j], e0[k])
        lhs = vec_add(lhs, S.l3.eval(e0[i], th.theta0.col(j), e0[k]))
        lhs = vec_add(lhs, S.l3.eval(e0[i], e0[j], th.theta0.col(k)))
        lhs = vec_sub(lhs, th.theta1.apply(S.l3.at(i, j, k)))
        rhs = S.l2_10.eval(th.theta2.at(i, j), e0[k])
        rhs = vec_sub(rhs, S.l2_10.eval(th.theta2.at(i, k), e0[j]))
        rhs = vec_sub(rhs, S.l2_01.eval(e0[i], th.theta2.at(j, k)))
        rhs = vec_add(rhs, th.theta2.eval(S.l2_00.at(i, j), e0[k]))
        rhs = vec_sub(rhs, th.theta2.eval(S.l2_00.at(i, k), e0[j]))
        rhs = vec_sub(rhs, th.theta2.eval(e0[i], S.l2_00.at(j, k)))
        if lhs != rhs:
            fails.add("d", (i, j, k))
    return fails.report()


def check_sh_morphism(
    S: TwoTermShLeibniz,
    Sp: TwoTermShLeibniz,
    m: ShMorphism,
    th: Optional[HomotopyDerivation] = None,
    thp: Optional[HomotopyDerivation] = None,
) -> CheckReport:
    """The four morphism identities; plus the three B identities when B, θ, θ′ given."""
    if not check_sh(S).ok or not check_sh(Sp).ok:
        raise InputError("morphism endpoints fail their identities")
    fails = _Fails()
    a0, a1 = S.dim0, S.dim1
    e0 = [unit_vector(a0, i) for i in range(a0)]
    e1 = [unit_vector(a1, b) for b in range(a1)]
    if not (Sp.d @ m.f1 == m.f0 @ S.d):
        fails.add("chain-map", ())
    for i, j in itertools.product(range(a0), repeat=2):
        lhs = Sp.d.apply(m.f2.at(i, j))
        rhs = vec_sub(m.f0.apply(S.l2_00.at(i, j)), Sp.l2_00.eval(m.f0.col(i), m.f0.col(j)))
        if lhs != rhs:
            fails.add("1", (i, j))
    for i, b in itertools.product(range(a0), range(a1)):
        lhs = m.f2.eval(e0[i], S.d.col(b))
        rhs = vec_sub(m.f1.apply(S.l2_01.at(i, b)), Sp.l2_01.eval(m.f0.col(i), m.f1.col(b)))
        if lhs != rhs:
            fails.add("2", (i, b))
        lhs = m.f2.eval(S.d.col(b), e0[i])
        rhs = vec_sub(m.f1.apply(S.l2_10.at(b, i)), Sp.l2_10.eval(m.f1.col(b), m.f0.col(i)))
        if lhs != rhs:
            fails.add("3", (b, i))
    for i, j, k in itertools.product(range(a0), repeat=3):
        acc = m.f1.apply(S.l3.at(i, j, k))
        acc = vec_add(acc, Sp.l2_10.eval(m.f2.at(i, j), m.f0.col(k)))
        acc = vec_sub(acc, Sp.l2_10.eval(m.f2.at(i, k), m.f0.col(j)))
        acc = vec_sub(acc, Sp.l2_01.eval(m.f0.col(i), m.f2.at(j, k)))
        acc = vec_add(acc, m.f2.eval(S.l2_00.at(i, j), e0[k]))
        acc = vec_sub(acc, m.f2.eval(S.l2_00.at(i, k), e0[j]))
        acc = vec_sub(acc, m.f2.eval(e0[i], S.l2_00.at(j, k)))
        acc = vec_sub(acc, Sp.l3.eval(m.f0.col(i), m.f0.col(j), m.f0.col(k)))
        if any(c != 0 for c in acc):
            fails.add("4", (i, j, k))
    if m.B is not None:
        if th is None or thp is None:
            raise InputError("B identities need homotopy derivations on both sides")
        for i in range(a0):
            lhs = vec_sub(m.f0.apply(th.theta0.col(i)), thp.theta0.apply(m.f0.col(i)))
            if lhs != Sp.d.apply(m.B.col(i)):
                fails.add("B1", (i,))
        for b in range(a1):
            lhs = vec_sub(m.f1.apply(th.theta1.col(b)), thp.theta1.apply(m.f1.col(b)))
            if lhs != m.B.apply(S.d.col(b)):
                fails.add("B2", (b,))
        for i, j in itertools.product(range(a0), repeat=2):
            lhs = vec_sub(m.f1.apply(th.theta2.at(i, j)),
                          thp.theta2.eval(m.f0.col(i), m.f0.col(j)))
            rhs = thp.theta1.apply(m.f2.at(i, j))
            rhs = vec_sub(rhs, m.f2.eval(th.theta0.col(i), e0[j]))
            rhs = vec_sub(rhs, m.f2.eval(e0[i], th.theta0.col(j)))
            rhs = vec_add(rhs, m.B.apply(S.l2_00.at(i, j)))
            rhs = vec_sub(rhs, Sp.l2_10.eval(m.B.col(i), m.f0.col(j)))
            rhs = vec_sub(rhs, Sp.l2_01.eval(m.f0.col(i), m.B.col(j)))
            if lhs != rhs:
                fails.add("B3", (i, j))
    return fails.report()


def compose_morphisms(g: ShMorphism, f: ShMorphism) -> ShMorphism:
    """g ∘ f, with (g∘f)₂(x,y) = g₁(f₂(x,y)) + g₂(f₀x, f₀y) and B likewise."""
    a0 = f.f0.cols
    vals = []
    for i in range(a0):
        for j in range(a0):
            vals.append(vec_add(g.f1.apply(f.f2.at(i, j)), g.f2.eval(f.f0.col(i), f.f0.col(j))))
    f2 = BilinearMap(a0, a0, g.f1.rows, tuple(vals))
    B = None
    if f.B is not None and g.B is not None:
        B = g.f1 @ f.B + g.B @ f.f0
    return ShMorphism(g.f0 @ f.f0, g.f1 @ f.f1, f2, B)


# -- skeletal <-> triple -------------------------------------------------


def _rep_from_sh(S: TwoTermShLeibniz, th: HomotopyDerivation) -> tuple[LeibDerPair, LeibDerRepresentation]:
    algebra = LeibnizAlgebra(
        S.dim0, tuple(tuple(S.l2_00.at(i, j) for j in range(S.dim0)) for i in range(S.dim0))
    )
    pair = LeibDerPair(algebra, th.theta0)
    left = tuple(tuple(S.l2_01.at(i, b) for b in range(S.dim1)) for i in range(S.dim0))
    right = tuple(tuple(S.l2_10.at(b, i) for i in range(S.dim0)) for b in range(S.dim1))
    rep = Representation(algebra, S.dim1, left, right)
    return pair, LeibDerRepresentation(rep, th.theta1)


def skeletal_to_triple(
    S: TwoTermShLeibniz, th: HomotopyDerivation
) -> tuple[LeibDerPair, LeibDerRepresentation, LeibDerCochain]:
    """Skeletal data as (pair, representation, combined 3-cocycle (l₃, −θ₂))."""
    if not S.is_skeletal:
        raise InputError("structure is not skeletal")
    if not check_homotopy_derivation(S, th).ok:
        raise InputError("homotopy derivation fails its identities")
    pair, rep = _rep_from_sh(S, th)
    top = Cochain(3, S.dim0, S.dim1, S.l3.values)
    shadow = Cochain(2, S.dim0, S.dim1, tuple(vec_scale(scalar(-1), v) for v in th.theta2.values))
    cocycle = LeibDerCochain(top, shadow)
    if not partial(pair, rep, cocycle).is_zero():
        raise InputError("extracted pair (l3, −θ2) is not a 3-cocycle")
    return pair, rep, cocycle


def triple_to_skeletal(
    pair: LeibDerPair, rep: LeibDerRepresentation, cocycle: LeibDerCochain
) -> tuple[TwoTermShLeibniz, HomotopyDerivation]:
    """Inverse construction: d = 0, l₂ from the structure, l₃ = top, θ₂ = −shadow."""
    if cocycle.degree != 3:
        raise InputError("cocycle must have degree 3")
    if not partial(pair, rep, cocycle).is_zero():
        raise InputError("input is not a 3-cocycle")
    a0, a1 = pair.dim, rep.rep.mdim
    l2_00 = BilinearMap(a0, a0, a0, pair.algebra.bracket_cochain_values())
    l2_01 = BilinearMap(a0, a1, a1, tuple(
        rep.rep.left[i][b] for i in range(a0) for b in range(a1)))
    l2_10 = BilinearMap(a1, a0, a1, tuple(
        rep.rep.right[b][i] for b in range(a1) for i in range(a0)))
    S = TwoTermShLeibniz(
        a0, a1, Matrix.zeros(a0, a1), l2_00, l2_01, l2_10,
        TrilinearMap(a0, a1, cocycle.top.values),
    )
    th = HomotopyDerivation(
        pair.phi, rep.phi_M,
        BilinearMap(a0, a0, a1, tuple(vec_scale(scalar(-1), v) for v in cocycle.shadow.values)),
    )
    return S, th


# -- strict <-> crossed module -------------------------------------------


def check_crossed(C: CrossedModule) -> CheckReport:
    """LeibDer-morphism and representation conditions plus axioms (a)–(d)."""
    from .leibniz import check_leibder_representation, check_pair

    fails = _Fails()
    for label, witness in check_pair(C.g).failures:
        fails.add(f"g-{label}", witness)
    for label, witness in check_pair(C.h).failures:
        fails.add(f"h-{label}", witness)
    gd, hd = C.g.dim, C.h.dim
    eg = [unit_vector(gd, a) for a in range(gd)]
    eh = [unit_vector(hd, i) for i in range(hd)]
    # dt is a morphism of pairs
    for a, b in itertools.product(range(gd), repeat=2):
        if C.dt.apply(C.g.algebra.table[a][b]) != C.h.algebra.bracket(C.dt.col(a), C.dt.col(b)):
            fails.add("dt-bracket", (a, b))
    if not (C.dt @ C.g.phi == C.h.phi @ C.dt):
        fails.add("dt-derivation", ())
    rep_report = check_leibder_representation(C.h, LeibDerRepresentation(C.action, C.g.phi))
    for label, witness in rep_report.failures:
        fails.add(f"rep-{label}", witness)
    act = C.action
    for i, a in itertools.product(range(hd), range(gd)):
        # (a) dt φ(x, m) = [x, dt m] and dt φ(m, x) = [dt m, x]
        if C.dt.apply(act.left[i][a]) != C.h.algebra.bracket(eh[i], C.dt.col(a)):
            fails.add("a", (i, a))
        if C.dt.apply(act.right[a][i]) != C.h.algebra.bracket(C.dt.col(a), eh[i]):
            fails.add("a", (a, i))
    for a, b in itertools.product(range(gd), repeat=2):
        # (b) φ(dt m, n) = [m, n] = φ(m, dt n)
        if act.left_act(C.dt.col(a), eg[b]) != C.g.algebra.table[a][b]:
            fails.add("b", (a, b))
        if act.right_act(eg[a], C.dt.col(b)) != C.g.algebra.table[a][b]:
            fails.add("b", (a, b))
    gbr = C.g.algebra.bracket
    for a, b, i in itertools.product(range(gd), range(gd), range(hd)):
        # (c1) φ([m,n], x) = [φ(m,x), n] + [m, φ(n,x)]
        lhs = act.right_act(C.g.algebra.table[a][b], eh[i])
        rhs = vec_add(gbr(act.right[a][i], eg[b]), gbr(eg[a], act.right[b][i]))
        if lhs != rhs:
            fails.add("c", ("c1", a, b, i))
        # (c2) [φ(x,m), n] = [φ(x,n), m] + φ(x, [m,n])
        lhs = gbr(act.left[i][a], eg[b])
        rhs = vec_add(gbr(act.left[i][b], eg[a]),
                      act.left_act(eh[i], C.g.algebra.table[a][b]))
        if lhs != rhs:
            fails.add("c", ("c2", i, a, b))
        # (c3) [φ(m,x), n] = φ([m,n], x) + [m, φ(x,n)]
        lhs = gbr(act.right[a][i], eg[b])
        rhs = vec_add(act.right_act(C.g.algebra.table[a][b], eh[i]),
                      gbr(eg[a], act.left[i][b]))
        if lhs != rhs:
            fails.add("c", ("c3", a, i, b))
    for i, a in itertools.product(range(hd), range(gd)):
        # (d) φ_g φ(x, m) = φ(φ_h x, m) + φ(x, φ_g m), and symmetrically
        lhs = C.g.phi.apply(act.left[i][a])
        rhs = vec_add(act.left_act(C.h.phi.col(i), eg[a]), act.left_act(eh[i], C.g.phi.col(a)))
        if lhs != rhs:
            fails.add("d", (i, a))
        lhs = C.g.phi.apply(act.right[a][i])
        rhs = vec_add(act.right_act(C.g.phi.col(a), eh[i]), act.right_act(eg[a], C.h.phi.col(i)))
        if lhs != rhs:
            fails.add("d", (a, i))
    return fails.report()


def strict_to_crossed(S: TwoTermShLeibniz, th: HomotopyDerivation) -> CrossedModule:
    """g = A₁ with [m,n] := l₂(dm, n), h = A₀, dt = d, actions from l₂."""
    if not S.is_strict or not th.is_strict:
        raise InputError("structure or derivation is not strict")
    if not check_homotopy_derivation(S, th).ok:
        raise InputError("homotopy derivation fails its identities")
    a0, a1 = S.dim0, S.dim1
    e1 = [unit_vector(a1, b) for b in range(a1)]
    # [m, n] := l2(dm, n)
    gtable = tuple(
        tuple(S.l2_01.eval(S.d.col(a), e1[b]) for b in range(a1)) for a in range(a1)
    )
    g = LeibDerPair(LeibnizAlgebra(a1, gtable), th.theta1)
    htable = tuple(tuple(S.l2_00.at(i, j) for j in range(a0)) for i in range(a0))
    h = LeibDerPair(LeibnizAlgebra(a0, htable), th.theta0)
    left = tuple(tuple(S.l2_01.at(i, b) for b in range(a1)) for i in range(a0))
    right = tuple(tuple(S.l2_10.at(b, i) for i in range(a0)) for b in range(a1))
    C = CrossedModule(g, h, S.d, Representation(h.algebra, a1, left, right))
    report = check_crossed(C)
    if not report.ok:
        raise InputError(f"derived crossed module fails axiom {report.first[0]}")
    return C


def crossed_to_strict(C: CrossedModule) -> tuple[TwoTermShLeibniz, HomotopyDerivation]:
    """A₁ = g, A₀ = h, d = dt, l₂ from the h-bracket and the actions, l₃ = 0."""
    report = check_crossed(C)
    if not report.ok:
        raise InputError(f"crossed module fails axiom {report.first[0]}")
    gd, hd = C.g.dim, C.h.dim
    l2_00 = BilinearMap(hd, hd, hd, C.h.algebra.bracket_cochain_values())
    l2_01 = BilinearMap(hd, gd, gd, tuple(
        C.action.left[i][a] for i in range(hd) for a in range(gd)))
    l2_10 = BilinearMap(gd, hd, gd, tuple(
        C.action.right[a][i] for a in range(gd) for i in range(hd)))
    S = TwoTermShLeibniz(hd, gd, C.dt, l2_00, l2_01, l2_10, TrilinearMap.zero(hd, gd))
    th = HomotopyDerivation(C.h.phi, C.g.phi, BilinearMap.zero(hd, hd, gd))
    rep = check_homotopy_derivation(S, th)
    if not rep.ok:
        raise InputError(f"derived strict structure fails item {rep.first[0]}")
    return S, th


# -- the 2-vector-space dictionary ---------------------------------------


@dataclass(frozen=True)
class TwoVectorSpace:
    """Standard presentation: V₁ = A₀ ⊕ A₁, s(x⊕m) = x, t(x⊕m) = x + dm."""

    v0: int
    v1: int
    s: Matrix
    t: Matrix


@dataclass(frozen=True)
class TwoVectorLeibniz:
    space: TwoVectorSpace
    bracket: BilinearMap       # V₁ × V₁ → V₁ (morphism level)
    J: TrilinearMap            # V₀³ → V₁


@dataclass(frozen=True)
class TwoVectorDerivation:
    D0: Matrix                 # V₀ → V₀
    D1: Matrix                 # V₁ → V₁
    Dmap: BilinearMap          # V₀ × V₀ → V₁ (the natural isomorphism 𝒟)


def to_two_vector(
    S: TwoTermShLeibniz, th: Optional[HomotopyDerivation] = None
) -> tuple[TwoVectorLeibniz, Optional[TwoVectorDerivation]]:
    """[x⊕m, y⊕n] = l₂(x,y) ⊕ (l₂(x,n) + l₂(m,y) + l₂(m,dn));
    J = ([[x,y],z], l₃(x,y,z)); D(x⊕m) = θ₀x ⊕ θ₁m; 𝒟 = (θ₀[x,y], θ₂(x,y))."""
    if not check_sh(S).ok:
        raise InputError("structure fails its identities")
    a0, a1 = S.dim0, S.dim1
    v1 = a0 + a1
    s = Matrix.from_rows([unit_vector(v1, i) for i in range(a0)])
    t_rows = []
    for i in range(a0):
        t_rows.append(unit_vector(v1, i)[:a0] + S.d.row(i))
    t = Matrix(a0, v1, t_rows)
    space = TwoVectorSpace(a0, v1, s, t)

    def split(idx: int):
        if idx < a0:
            return unit_vector(a0, idx), zero_vector(a1)
        return zero_vector(a0), unit_vector(a1, idx - a0)

    br_vals = []
    for i in range(v1):
        x, mm = split(i)
        for j in range(v1):
            y, nn = split(j)
            top = S.l2_00.eval(x, y)
            bot = vec_add(S.l2_01.eval(x, nn), S.l2_10.eval(mm, y))
            bot = vec_add(bot, S.l2_10.eval(mm, S.d.apply(nn)))
            br_vals.append(top + bot)
    bracket = BilinearMap(v1, v1, v1, tuple(br_vals))
    j_vals = []
    for i, j, k in itertools.product(range(a0), repeat=3):
        top = S.l2_00.eval(S.l2_00.at(i, j), unit_vector(a0, k))
        j_vals.append(top + S.l3.at(i, j, k))
    V = TwoVectorLeibniz(space, bracket, TrilinearMap(a0, v1, tuple(j_vals)))
    if th is None:
        return V, None
    D1 = Matrix.diag_blocks(th.theta0, th.theta1)
    d_vals = []
    for i, j in itertools.product(range(a0), repeat=2):
        d_vals.append(th.theta0.apply(S.l2_00.at(i, j)) + th.theta2.at(i, j))
    return V, TwoVectorDerivation(th.theta0, D1, BilinearMap(a0, a0, v1, tuple(d_vals)))


def from_two_vector(
    V: TwoVectorLeibniz, D: Optional[TwoVectorDerivation] = None
) -> tuple[TwoTermShLeibniz, Optional[HomotopyDerivation]]:
    """Recover (A₁ = ker s → A₀, l₂, l₃ = pr∘J) and transport the derivation."""
    a0 = V.space.v0
    v1 = V.space.v1
    a1 = v1 - a0
    if a1 < 0:
        raise InputError("morphism space smaller than object space")
    std_s = Matrix.from_rows([unit_vector(v1, i) for i in range(a0)])
    if V.space.s != std_s:
        raise InputError("source map is not in the standard presentation")
    for i in range(a0):
        if V.space.t.row(i)[:a0] != unit_vector(a0, i):
            raise InputError("target map is not in the standard presentation")
    d = Matrix(a0, a1, [V.space.t.row(i)[a0:] for i in range(a0)])

    def obj(i: int) -> Vector:
        return unit_vector(a0, i) + zero_vector(a1)

    def ker(b: int) -> Vector:
        return zero_vector(a0) + unit_vector(a1, b)

    # the bracket of identity morphisms must be an identity morphism
    for i, j in itertools.product(range(a0), repeat=2):
        if any(c != 0 for c in V.bracket.eval(obj(i), obj(j))[a0:]):
            raise InputError("bracket does not send identity morphisms to identities")
    l2_00 = BilinearMap(a0, a0, a0, tuple(
        V.bracket.eval(obj(i), obj(j))[:a0] for i in range(a0) for j in range(a0)))
    l2_01 = BilinearMap(a0, a1, a1, tuple(
        V.bracket.eval(obj(i), ker(b))[a0:] for i in range(a0) for b in range(a1)))
    l2_10 = BilinearMap(a1, a0, a1, tuple(
        V.bracket.eval(ker(b), obj(i))[a0:] for b in range(a1) for i in range(a0)))
    for i, j, k in itertools.product(range(a0), repeat=3):
        if V.J.at(i, j, k)[:a0] != l2_00.eval(l2_00.at(i, j), unit_vector(a0, k)):
            raise InputError("J sources do not match the iterated bracket")
    l3 = TrilinearMap(a0, a1, tuple(
        V.J.at(i, j, k)[a0:] for i, j, k in itertools.product(range(a0), repeat=3)))
    S = TwoTermShLeibniz(a0, a1, d, l2_00, l2_01, l2_10, l3)
    if D is None:
        return S, None
    # the functor must be block-diagonal in the presentation (forced by s, t)
    if not (V.space.s @ D.D1 == D.D0 @ V.space.s):
        raise InputError("derivation functor does not commute with the source")
    theta0 = D.D0
    theta1 = Matrix(a1, a1, [D.D1.row(a0 + b)[a0:] for b in range(a1)])
    theta2 = BilinearMap(a0, a0, a1, tuple(
        D.Dmap.at(i, j)[a0:] for i, j in itertools.product(range(a0), repeat=2)))
    return S, HomotopyDerivation(theta0, theta1, theta2)
