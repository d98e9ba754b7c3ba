"""Leibniz algebras with a distinguished derivation, and their representations.

Everything is finite dimensional over the rationals and given by structure
constants on a fixed basis.  The bracket convention is the right one:

    [[x, y], z] = [[x, z], y] + [x, [y, z]]

Validity checks are explicit operations (never construction-time asserts) so
that deliberately broken data can flow through negative tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import InputError
from .exactlin import (
    Matrix,
    Vector,
    ZERO,
    is_zero_vector,
    scalar,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
    vector,
    zero_vector,
)

Table = tuple[tuple[Vector, ...], ...]  # table[i][j] = [e_i, e_j]


def _as_table(dim: int, table, vdim: Optional[int] = None) -> Table:
    vdim = dim if vdim is None else vdim
    out = tuple(tuple(vector(v) for v in row) for row in table)
    if len(out) != dim or any(len(row) != dim for row in out):
        raise InputError("structure constant table has wrong shape")
    if any(len(v) != vdim for row in out for v in row):
        raise InputError("structure constant table has wrong value length")
    return out


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an axiom check: the list of violated axioms with witnesses.

    Each failure is (axiom label, witness basis indices).  Only the first
    witness per axiom is kept.
    """

    ok: bool
    failures: tuple[tuple[str, tuple], ...] = ()

    @property
    def first(self) -> Optional[tuple[str, tuple]]:
        return self.failures[0] if self.failures else None

    def violated(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.failures)


class _Failures:
    """Collects the first witness per axiom label, preserving label order."""

    def __init__(self):
        self._seen: dict[str, tuple] = {}

    def add(self, label: str, witness: tuple):
        self._seen.setdefault(label, witness)

    def report(self) -> CheckReport:
        items = tuple(self._seen.items())
        return CheckReport(ok=not items, failures=items)


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Algebra on K^dim with [e_i, e_j] = table[i][j]."""

    dim: int
    table: Table

    @staticmethod
    def from_table(dim: int, table) -> "LeibnizAlgebra":
        return LeibnizAlgebra(dim, _as_table(dim, table))

    @staticmethod
    def abelian(dim: int) -> "LeibnizAlgebra":
        z = zero_vector(dim)
        return LeibnizAlgebra(dim, tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x, y = vector(x), vector(y)
        out = zero_vector(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                out = vec_add(out, vec_scale(xi * yj, self.table[i][j]))
        return out

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def bracket_cochain_values(self) -> tuple[Vector, ...]:
        """The bracket as a flat degree-2 value array (row-major over (i, j))."""
        return tuple(self.table[i][j] for i in range(self.dim) for j in range(self.dim))


@dataclass(frozen=True)
class LeibDerPair:
    algebra: LeibnizAlgebra
    phi: Matrix

    def __post_init__(self):
        d = self.algebra.dim
        if (self.phi.rows, self.phi.cols) != (d, d):
            raise InputError("derivation matrix shape must match the algebra dimension")

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class Representation:
    """Left/right actions of `base` on an mdim-dimensional module.

    left[i][a]  = [e_i, f_a] coordinates (length mdim)
    right[a][i] = [f_a, e_i] coordinates (length mdim)
    """

    base: LeibnizAlgebra
    mdim: int
    left: tuple[tuple[Vector, ...], ...]
    right: tuple[tuple[Vector, ...], ...]

    @staticmethod
    def from_tables(base: LeibnizAlgebra, mdim: int, left, right) -> "Representation":
        d = base.dim
        lt = tuple(tuple(vector(v) for v in row) for row in left)
        rt = tuple(tuple(vector(v) for v in row) for row in right)
        if len(lt) != d or any(len(row) != mdim for row in lt):
            raise InputError("left action table has wrong shape")
        if len(rt) != mdim or any(len(row) != d for row in rt):
            raise InputError("right action table has wrong shape")
        if any(len(v) != mdim for row in lt for v in row) or any(
            len(v) != mdim for row in rt for v in row
        ):
            raise InputError("action table values have wrong length")
        return Representation(base, mdim, lt, rt)

    @staticmethod
    def adjoint(base: LeibnizAlgebra) -> "Representation":
        d = base.dim
        left = tuple(tuple(base.table[i][a] for a in range(d)) for i in range(d))
        right = tuple(tuple(base.table[a][i] for i in range(d)) for a in range(d))
        return Representation(base, d, left, right)

    @staticmethod
    def trivial(base: LeibnizAlgebra, mdim: int) -> "Representation":
        z = zero_vector(mdim)
        left = tuple(tuple(z for _ in range(mdim)) for _ in range(base.dim))
        right = tuple(tuple(z for _ in range(base.dim)) for _ in range(mdim))
        return Representation(base, mdim, left, right)

    def left_act(self, x: Sequence, m: Sequence) -> Vector:
        x, m = vector(x), vector(m)
        out = zero_vector(self.mdim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for a, ma in enumerate(m):
                if ma == 0:
                    continue
                out = vec_add(out, vec_scale(xi * ma, self.left[i][a]))
        return out

    def right_act(self, m: Sequence, x: Sequence) -> Vector:
        m, x = vector(m), vector(x)
        out = zero_vector(self.mdim)
        for a, ma in enumerate(m):
            if ma == 0:
                continue
            for i, xi in enumerate(x):
                if xi == 0:
                    continue
                out = vec_add(out, vec_scale(ma * xi, self.right[a][i]))
        return out


@dataclass(frozen=True)
class LeibDerRepresentation:
    rep: Representation
    phi_M: Matrix

    def __post_init__(self):
        if (self.phi_M.rows, self.phi_M.cols) != (self.rep.mdim, self.rep.mdim):
            raise InputError("module derivation shape must match the module dimension")

    @staticmethod
    def adjoint(pair: LeibDerPair) -> "LeibDerRepresentation":
        return LeibDerRepresentation(Representation.adjoint(pair.algebra), pair.phi)

    @staticmethod
    def trivial(pair: LeibDerPair, mdim: int, phi_M: Optional[Matrix] = None) -> "LeibDerRepresentation":
        if phi_M is None:
            phi_M = Matrix.zeros(mdim, mdim)
        return LeibDerRepresentation(Representation.trivial(pair.algebra, mdim), phi_M)


# -- axiom checks ------------------------------------------------------


def check_leibniz(A: LeibnizAlgebra) -> CheckReport:
    """[[e_i,e_j],e_k] = [[e_i,e_k],e_j] + [e_i,[e_j,e_k]] on all basis triples."""
    fails = _Failures()
    d = A.dim
    for i, j, k in itertools.product(range(d), repeat=3):
        lhs = A.bracket(A.table[i][j], unit_vector(d, k))
        rhs = vec_add(
            A.bracket(A.table[i][k], unit_vector(d, j)),
            A.bracket(unit_vector(d, i), A.table[j][k]),
        )
        if lhs != rhs:
            fails.add("leibniz", (i, j, k))
            break
    return fails.report()


def check_derivation(A: LeibnizAlgebra, D: Matrix) -> CheckReport:
    """D[e_i,e_j] = [D e_i, e_j] + [e_i, D e_j] on all basis pairs."""
    d = A.dim
    if (D.rows, D.cols) != (d, d):
        raise InputError("derivation matrix shape must match the algebra dimension")
    fails = _Failures()
    for i, j in itertools.product(range(d), repeat=2):
        lhs = D.apply(A.table[i][j])
        rhs = vec_add(
            A.bracket(D.col(i), unit_vector(d, j)),
            A.bracket(unit_vector(d, i), D.col(j)),
        )
        if lhs != rhs:
            fails.add("derivation", (i, j))
            break
    return fails.report()


def check_pair(P: LeibDerPair) -> CheckReport:
    rep1 = check_leibniz(P.algebra)
    rep2 = check_derivation(P.algebra, P.phi)
    return CheckReport(ok=rep1.ok and rep2.ok, failures=rep1.failures + rep2.failures)


def inner_derivation(A: LeibnizAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [y, x]."""
    x = vector(x)
    if len(x) != A.dim:
        raise InputError("inner derivation: element length mismatch")
    cols = [A.bracket(unit_vector(A.dim, j), x) for j in range(A.dim)]
    return Matrix.from_cols(cols)


def check_representation(R: Representation) -> CheckReport:
    """The three mixed Leibniz identities (MLL), (LML), (LLM) on basis triples."""
    fails = _Failures()
    d, m = R.base.dim, R.mdim
    eg = [unit_vector(d, i) for i in range(d)]
    em = [unit_vector(m, a) for a in range(m)]
    for a, i, j in itertools.product(range(m), range(d), range(d)):
        # (MLL) [[m, x], y] = [[m, y], x] + [m, [x, y]]
        lhs = R.right_act(R.right[a][i], eg[j])
        rhs = vec_add(R.right_act(R.right[a][j], eg[i]), R.right_act(em[a], R.base.table[i][j]))
        if lhs != rhs:
            fails.add("MLL", (a, i, j))
            break
    for i, a, j in itertools.product(range(d), range(m), range(d)):
        # (LML) [[x, m], y] = [[x, y], m] + [x, [m, y]]
        lhs = R.right_act(R.left[i][a], eg[j])
        rhs = vec_add(R.left_act(R.base.table[i][j], em[a]), R.left_act(eg[i], R.right[a][j]))
        if lhs != rhs:
            fails.add("LML", (i, a, j))
            break
    for i, j, a in itertools.product(range(d), range(d), range(m)):
        # (LLM) [[x, y], m] = [[x, m], y] + [x, [y, m]]
        lhs = R.left_act(R.base.table[i][j], em[a])
        rhs = vec_add(R.right_act(R.left[i][a], eg[j]), R.left_act(eg[i], R.left[j][a]))
        if lhs != rhs:
            fails.add("LLM", (i, j, a))
            break
    return fails.report()


def check_leibder_representation(P: LeibDerPair, R: LeibDerRepresentation) -> CheckReport:
    """check_representation plus the two derivation compatibility identities."""
    if R.rep.base != P.algebra:
        raise InputError("representation base algebra does not match the pair")
    rep = R.rep
    base_report = check_representation(rep)
    fails = _Failures()
    for label, witness in base_report.failures:
        fails.add(label, witness)
    d, m = rep.base.dim, rep.mdim
    eg = [unit_vector(d, i) for i in range(d)]
    em = [unit_vector(m, a) for a in range(m)]
    for i, a in itertools.product(range(d), range(m)):
        # phi_M [x, m] = [phi_g x, m] + [x, phi_M m]
        lhs = R.phi_M.apply(rep.left[i][a])
        rhs = vec_add(rep.left_act(P.phi.col(i), em[a]), rep.left_act(eg[i], R.phi_M.col(a)))
        if lhs != rhs:
            fails.add("phi-left", (i, a))
            break
    for a, i in itertools.product(range(m), range(d)):
        # phi_M [m, x] = [phi_M m, x] + [m, phi_g x]
        lhs = R.phi_M.apply(rep.right[a][i])
        rhs = vec_add(rep.right_act(R.phi_M.col(a), eg[i]), rep.right_act(em[a], P.phi.col(i)))
        if lhs != rhs:
            fails.add("phi-right", (a, i))
            break
    return fails.report()


# -- constructions -----------------------------------------------------


def semidirect_product(P: LeibDerPair, R: LeibDerRepresentation) -> LeibDerPair:
    """Pair on g ⊕ M with [(x,m),(y,n)] = ([x,y], [x,n] + [m,y]) and phi_g ⊕ phi_M."""
    report = check_leibder_representation(P, R)
    if not report.ok:
        raise InputError(f"invalid representation: {report.first}")
    d, m = P.dim, R.rep.mdim
    n = d + m
    eg = [unit_vector(d, i) for i in range(d)]
    em = [unit_vector(m, a) for a in range(m)]

    def brk(i: int, j: int) -> Vector:
        gx, mx = (eg[i], zero_vector(m)) if i < d else (zero_vector(d), em[i - d])
        gy, my = (eg[j], zero_vector(m)) if j < d else (zero_vector(d), em[j - d])
        gpart = P.algebra.bracket(gx, gy)
        mpart = vec_add(R.rep.left_act(gx, my), R.rep.right_act(mx, gy))
        return gpart + mpart

    table = tuple(tuple(brk(i, j) for j in range(n)) for i in range(n))
    return LeibDerPair(LeibnizAlgebra(n, table), Matrix.diag_blocks(P.phi, R.phi_M))


def lieization(P: LeibDerPair) -> LeibDerPair:
    """Quotient by the span of squares; the induced bracket is skew-symmetric.

    Quotient basis: standard basis vectors complementing the column-reduced
    spanning set of S, pivoting on the first nonzero coordinate.
    """
    A = P.algebra
    d = A.dim
    spanning = [A.table[i][i] for i in range(d)]
    spanning += [
        vec_add(A.table[i][j], A.table[j][i]) for i in range(d) for j in range(i + 1, d)
    ]
    span_mat = Matrix.from_cols(spanning) if spanning else Matrix.zeros(d, 0)
    # Column-reduce: pivots of the transpose echelon give an S-basis.
    ech, pivots = span_mat.transpose()._echelon()
    s_basis = [tuple(ech[r]) for r in range(len(pivots))]
    pivot_coords = set()
    for v in s_basis:
        pivot_coords.add(next(k for k in range(d) if v[k] != 0))
    comp = [k for k in range(d) if k not in pivot_coords]
    q = len(comp)
    # Change of basis h = [s_basis | complement unit vectors]; quotient
    # coordinates of v are the complement coefficients of h^{-1} v.
    h = Matrix.from_cols(s_basis + [unit_vector(d, k) for k in comp])

    def project(v: Vector) -> Vector:
        coeffs = h.solve(v)
        if coeffs is None:
            raise InputError("quotient projection failed")  # h is invertible
        return tuple(coeffs[len(s_basis):])

    # phi(S) ⊆ S must hold for the induced map to be well defined.
    for v in s_basis:
        img = P.phi.apply(v)
        if s_basis and Matrix.from_cols(s_basis + [img]).rank() > len(s_basis):
            raise InputError("derivation does not preserve the square span")
        if not s_basis and not is_zero_vector(img):
            raise InputError("derivation does not preserve the square span")

    reps = [unit_vector(d, k) for k in comp]
    table = tuple(
        tuple(project(A.bracket(reps[i], reps[j])) for j in range(q)) for i in range(q)
    )
    phi_bar = Matrix.from_cols([project(P.phi.apply(r)) for r in reps]) if q else Matrix.zeros(0, 0)
    return LeibDerPair(LeibnizAlgebra(q, table), phi_bar)


@dataclass(frozen=True)
class Dialgebra:
    """Two associative-style products given by structure constants."""

    dim: int
    left_prod: Table   # x ⊣ y
    right_prod: Table  # x ⊢ y

    @staticmethod
    def from_tables(dim: int, left_prod, right_prod) -> "Dialgebra":
        return Dialgebra(dim, _as_table(dim, left_prod), _as_table(dim, right_prod))

    def lprod(self, x, y) -> Vector:
        return LeibnizAlgebra(self.dim, self.left_prod).bracket(x, y)

    def rprod(self, x, y) -> Vector:
        return LeibnizAlgebra(self.dim, self.right_prod).bracket(x, y)


def check_dialgebra(D: Dialgebra) -> CheckReport:
    """The five dialgebra axioms on all basis triples."""
    fails = _Failures()
    d = D.dim
    e = [unit_vector(d, i) for i in range(d)]
    axioms: list[tuple[str, Callable, Callable]] = [
        ("x<(y<z)=(x<y)<z", lambda x, y, z: D.lprod(x, D.lprod(y, z)), lambda x, y, z: D.lprod(D.lprod(x, y), z)),
        ("x<(y>z)=(x<y)<z", lambda x, y, z: D.lprod(x, D.rprod(y, z)), lambda x, y, z: D.lprod(D.lprod(x, y), z)),
        ("(x>y)<z=x>(y<z)", lambda x, y, z: D.lprod(D.rprod(x, y), z), lambda x, y, z: D.rprod(x, D.lprod(y, z))),
        ("(x<y)>z=x>(y>z)", lambda x, y, z: D.rprod(D.lprod(x, y), z), lambda x, y, z: D.rprod(x, D.rprod(y, z))),
        ("(x>y)>z=x>(y>z)", lambda x, y, z: D.rprod(D.rprod(x, y), z), lambda x, y, z: D.rprod(x, D.rprod(y, z))),
    ]
    for label, lhs, rhs in axioms:
        for i, j, k in itertools.product(range(d), repeat=3):
            if lhs(e[i], e[j], e[k]) != rhs(e[i], e[j], e[k]):
                fails.add(label, (i, j, k))
                break
    return fails.report()


def from_dialgebra(D: Dialgebra, der: Matrix) -> LeibDerPair:
    """LeibDer pair with bracket [x, y] = x ⊣ y − y ⊢ x."""
    report = check_dialgebra(D)
    if not report.ok:
        raise InputError(f"dialgebra axiom fails: {report.first[0]}")
    d = D.dim
    if (der.rows, der.cols) != (d, d):
        raise InputError("derivation matrix shape mismatch")
    e = [unit_vector(d, i) for i in range(d)]
    for prod, name in ((D.lprod, "left product"), (D.rprod, "right product")):
        for i, j in itertools.product(range(d), repeat=2):
            lhs = der.apply(prod(e[i], e[j]))
            rhs = vec_add(prod(der.col(i), e[j]), prod(e[i], der.col(j)))
            if lhs != rhs:
                raise InputError(f"map is not a derivation for the {name} at {(i, j)}")
    table = tuple(
        tuple(vec_sub(D.lprod(e[i], e[j]), D.rprod(e[j], e[i])) for j in range(d))
        for i in range(d)
    )
    return LeibDerPair(LeibnizAlgebra(d, table), der)


@dataclass(frozen=True)
class NLeibniz:
    """n-ary bracket given by a dense tensor over basis tuples."""

    dim: int
    arity: int
    values: tuple[Vector, ...]  # row-major over index tuples, length dim**arity

    @staticmethod
    def from_values(dim: int, arity: int, values) -> "NLeibniz":
        vals = tuple(vector(v) for v in values)
        if len(vals) != dim ** arity or any(len(v) != dim for v in vals):
            raise InputError("n-ary bracket tensor has wrong shape")
        return NLeibniz(dim, arity, vals)

    def bracket(self, *args: Sequence) -> Vector:
        if len(args) != self.arity:
            raise InputError("wrong number of bracket arguments")
        args = [vector(a) for a in args]
        out = zero_vector(self.dim)
        for idx in itertools.product(range(self.dim), repeat=self.arity):
            c = scalar(1)
            for a, i in zip(args, idx):
                c *= a[i]
                if c == 0:
                    break
            if c == 0:
                continue
            flat = 0
            for i in idx:
                flat = flat * self.dim + i
            out = vec_add(out, vec_scale(c, self.values[flat]))
        return out


def check_n_leibniz(L: NLeibniz) -> CheckReport:
    """The n-ary right Leibniz identity on all basis tuples."""
    fails = _Failures()
    n, d = L.arity, L.dim
    e = [unit_vector(d, i) for i in range(d)]
    for xs in itertools.product(range(d), repeat=n):
        for ys in itertools.product(range(d), repeat=n - 1):
            lhs = L.bracket(L.bracket(*(e[i] for i in xs)), *(e[j] for j in ys))
            rhs = zero_vector(d)
            for pos in range(n):
                inner = L.bracket(e[xs[pos]], *(e[j] for j in ys))
                args = [e[i] for i in xs]
                args[pos] = inner
                rhs = vec_add(rhs, L.bracket(*args))
            if lhs != rhs:
                fails.add("n-leibniz", xs + ys)
                return fails.report()
    return fails.report()


def from_n_leibniz(L: NLeibniz, der: Matrix) -> LeibDerPair:
    """Induced LeibDer pair on L^⊗(n−1).

    [x_1⊗…⊗x_{n−1}, y_1⊗…⊗y_{n−1}] = Σ_i x_1⊗…⊗[x_i, y_1,…,y_{n−1}]⊗…⊗x_{n−1}
    and the derivation acts by the Leibniz rule on tensor factors.
    """
    n, d = L.arity, L.dim
    if (der.rows, der.cols) != (d, d):
        raise InputError("derivation matrix shape mismatch")
    report = check_n_leibniz(L)
    if not report.ok:
        raise InputError(f"n-ary Leibniz identity fails at {report.first[1]}")
    e = [unit_vector(d, i) for i in range(d)]
    for xs in itertools.product(range(d), repeat=n):
        lhs = der.apply(L.bracket(*(e[i] for i in xs)))
        rhs = zero_vector(d)
        for pos in range(n):
            args = [e[i] for i in xs]
            args[pos] = der.col(xs[pos])
            rhs = vec_add(rhs, L.bracket(*args))
        if lhs != rhs:
            raise InputError(f"map is not an n-ary derivation at {xs}")
    if n == 2:
        table = tuple(
            tuple(L.bracket(e[i], e[j]) for j in range(d)) for i in range(d)
        )
        return LeibDerPair(LeibnizAlgebra(d, table), der)

    words = list(itertools.product(range(d), repeat=n - 1))
    index = {w: k for k, w in enumerate(words)}
    big = len(words)

    def tensor_coord(factors: list[Vector]) -> Vector:
        out = [ZERO] * big
        for idx in itertools.product(range(d), repeat=n - 1):
            c = scalar(1)
            for f, i in zip(factors, idx):
                c *= f[i]
                if c == 0:
                    break
            if c != 0:
                out[index[idx]] += c
        return tuple(out)

    def brk(w1: tuple, w2: tuple) -> Vector:
        out = zero_vector(big)
        for pos in range(n - 1):
            inner = L.bracket(e[w1[pos]], *(e[j] for j in w2))
            factors = [e[i] for i in w1]
            factors[pos] = inner
            out = vec_add(out, tensor_coord(factors))
        return out

    table = tuple(tuple(brk(w1, w2) for w2 in words) for w1 in words)
    dbar_cols = []
    for w in words:
        col = zero_vector(big)
        for pos in range(n - 1):
            factors = [e[i] for i in w]
            factors[pos] = der.col(w[pos])
            col = vec_add(col, tensor_coord(factors))
        dbar_cols.append(col)
    return LeibDerPair(LeibnizAlgebra(big, table), Matrix.from_cols(dbar_cols))


# -- free truncated LeibDer pair ---------------------------------------

Word = tuple[int, ...]


@dataclass(frozen=True)
class TruncatedFreeLeibniz:
    """Free Leibniz algebra on V truncated above tensor degree `cap`.

    Basis: words over the V basis with 1 ≤ length ≤ cap; any bracket
    component of degree > cap is dropped.
    """

    base_dim: int
    cap: int
    words: tuple[Word, ...]
    pair: LeibDerPair

    @property
    def index(self) -> dict:
        return {w: k for k, w in enumerate(self.words)}


def _free_bracket(w1: Word, w2: Word, cap: int, cache: dict) -> dict:
    """Bracket of two basis words as a word -> coefficient dict."""
    key = (w1, w2)
    if key in cache:
        return cache[key]
    if len(w1) + len(w2) > cap:
        out: dict = {}
    elif len(w2) == 1:
        out = {w1 + w2: scalar(1)}
    else:
        # [x, y⊗v] = [x, y]⊗v − [x⊗v, y]
        y, v = w2[:-1], w2[-1:]
        out = {}
        for w, c in _free_bracket(w1, y, cap, cache).items():
            if len(w) + 1 <= cap:
                out[w + v] = out.get(w + v, ZERO) + c
        for w, c in _free_bracket(w1 + v, y, cap, cache).items():
            out[w] = out.get(w, ZERO) - c
        out = {w: c for w, c in out.items() if c != 0}
    cache[key] = out
    return out


def free_truncated(base_dim: int, cap: int, d: Matrix) -> TruncatedFreeLeibniz:
    """Materialize the truncated free bracket and the induced derivation."""
    if cap < 1:
        raise InputError("degree cap must be at least 1")
    if (d.rows, d.cols) != (base_dim, base_dim):
        raise InputError("base derivation shape mismatch")
    words: list[Word] = []
    for ln in range(1, cap + 1):
        words.extend(itertools.product(range(base_dim), repeat=ln))
    words = list(words)
    index = {w: k for k, w in enumerate(words)}
    big = len(words)
    cache: dict = {}

    def to_vec(comb: dict) -> Vector:
        out = [ZERO] * big
        for w, c in comb.items():
            out[index[w]] += c
        return tuple(out)

    table = tuple(
        tuple(to_vec(_free_bracket(w1, w2, cap, cache)) for w2 in words) for w1 in words
    )
    dbar_cols = []
    for w in words:
        comb: dict = {}
        for pos in range(len(w)):
            for b in range(base_dim):
                c = d.entries[b][w[pos]]
                if c == 0:
                    continue
                w2 = w[:pos] + (b,) + w[pos + 1:]
                comb[w2] = comb.get(w2, ZERO) + c
        dbar_cols.append(to_vec(comb))
    pair = LeibDerPair(LeibnizAlgebra(big, table), Matrix.from_cols(dbar_cols))
    return TruncatedFreeLeibniz(base_dim, cap, tuple(words), pair)


def free_universal_extend(F: TruncatedFreeLeibniz, P: LeibDerPair, f: Matrix) -> CheckReport:
    """Extend f: V → g to the truncated free pair and verify it is a morphism.

    The extension is forced: a word w⊗v equals [w, v] in the free algebra,
    so f~(w⊗v) = [f~(w), f(v)].  Verifies the bracket morphism property on
    degree-bounded pairs and compatibility with the two derivations.
    """
    if (f.rows, f.cols) != (P.dim, F.base_dim):
        raise InputError("base map shape mismatch")
    if not (P.phi @ f == f @ _restrict_base(F)):
        raise InputError("base map does not intertwine the derivations")
    index = F.index
    ext: dict[Word, Vector] = {}
    for w in F.words:
        if len(w) == 1:
            ext[w] = f.col(w[0])
        else:
            ext[w] = P.algebra.bracket(ext[w[:-1]], f.col(w[-1]))
    ftilde = Matrix.from_cols([ext[w] for w in F.words])

    fails = _Failures()
    alg = F.pair.algebra
    for i, w1 in enumerate(F.words):
        for j, w2 in enumerate(F.words):
            if len(w1) + len(w2) > F.cap:
                continue
            lhs = ftilde.apply(alg.table[i][j])
            rhs = P.algebra.bracket(ext[w1], ext[w2])
            if lhs != rhs:
                fails.add("bracket-morphism", (w1, w2))
                break
    for w in F.words:
        if ftilde.apply(F.pair.phi.col(index[w])) != P.phi.apply(ext[w]):
            fails.add("derivation-compat", (w,))
            break
    return fails.report()


def _restrict_base(F: TruncatedFreeLeibniz) -> Matrix:
    """The base map d: V → V recovered from the degree-1 block of d̄."""
    idx = F.index
    cols = []
    for v in range(F.base_dim):
        col = F.pair.phi.col(idx[(v,)])
        cols.append(tuple(col[idx[(b,)]] for b in range(F.base_dim)))
    return Matrix.from_cols(cols)
