"""Shared corpus builders for the test suite.

Everything is seeded and exact: random scalars are small Fractions, random
structures are produced by constructions that guarantee validity (kernel
sampling for derivations, central products for algebras, conjugation for
deformations), so the identity tests have zero tolerance.
"""

import random
from fractions import Fraction

import pytest

from leibder.exactlin import Matrix
from leibder.leibniz import (
    LeibnizAlgebra,
    LeibDerPair,
    LeibDerRepresentation,
    Representation,
)
from leibder.cohomology import Cochain, LeibDerCochain, cocycle_basis


# -- fixed small structures -------------------------------------------------


def lambda2_algebra() -> LeibnizAlgebra:
    """2-dim Leibniz, non-Lie: [e1, e1] = e2, all other brackets zero."""
    z = [Fraction(0), Fraction(0)]
    e2 = [Fraction(0), Fraction(1)]
    return LeibnizAlgebra.from_table(2, [[e2, list(z)], [list(z), list(z)]])


def lambda2_pair(phi=None) -> LeibDerPair:
    A = lambda2_algebra()
    if phi is None:
        phi = Matrix.zeros(2, 2)
    return LeibDerPair(A, phi)


def sl2_algebra() -> LeibnizAlgebra:
    """sl2 with basis (e, f, h): [e,f]=h, [h,e]=2e, [h,f]=-2f (right bracket)."""
    d = 3

    def vec(**kw):
        v = [Fraction(0)] * d
        for k, c in kw.items():
            v[{"e": 0, "f": 1, "h": 2}[k]] = Fraction(c)
        return v

    z = lambda: [Fraction(0)] * d
    table = [[z() for _ in range(d)] for _ in range(d)]
    table[0][1] = vec(h=1)    # [e,f]=h
    table[1][0] = vec(h=-1)   # [f,e]=-h
    table[2][0] = vec(e=2)    # [h,e]=2e
    table[0][2] = vec(e=-2)   # [e,h]=-2e
    table[2][1] = vec(f=-2)   # [h,f]=-2f
    table[1][2] = vec(f=2)    # [f,h]=2f
    return LeibnizAlgebra.from_table(d, table)


def sl2_pair() -> LeibDerPair:
    return LeibDerPair(sl2_algebra(), Matrix.zeros(3, 3))


def zero_pair(dim: int = 1) -> LeibDerPair:
    return LeibDerPair(LeibnizAlgebra.abelian(dim), Matrix.zeros(dim, dim))


# -- randomized corpus -------------------------------------------------------


def rand_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))


def rand_vector(rng: random.Random, n: int) -> tuple:
    return tuple(rand_scalar(rng) for _ in range(n))


def rand_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix.from_rows([rand_vector(rng, cols) for _ in range(rows)])


def rand_algebra(rng: random.Random, dim: int = None) -> LeibnizAlgebra:
    """Random Leibniz algebra: 2-step nilpotent (V x V -> W central) or a
    fixed classic, chosen at random."""
    pick = rng.randrange(4)
    if pick == 0:
        return lambda2_algebra()
    if pick == 1:
        return sl2_algebra()
    if dim is None:
        dim = rng.randint(1, 3)
    if pick == 2:
        return LeibnizAlgebra.abelian(dim)
    # split dim into V + W, brackets land in the central part W
    w = rng.randint(1, dim)
    v = dim - w
    z = lambda: [Fraction(0)] * dim
    table = [[z() for _ in range(dim)] for _ in range(dim)]
    for i in range(v):
        for j in range(v):
            for k in range(w):
                table[i][j][v + k] = rand_scalar(rng)
    return LeibnizAlgebra.from_table(dim, table)


def derivation_space(A: LeibnizAlgebra) -> list[Matrix]:
    """Basis of Der(A) via kernel of the linearized derivation condition."""
    d = A.dim
    rows = []
    for i in range(d):
        for j in range(d):
            b = A.basis_bracket(i, j)
            for k in range(d):
                row = [Fraction(0)] * (d * d)
                # D[x,y] coordinate k: sum_l D[k][l] * b[l]
                for l in range(d):
                    row[k * d + l] += b[l]
                # -[Dx, y]: D maps e_i to sum_l D[l][i] e_l
                for l in range(d):
                    row[l * d + i] -= A.basis_bracket(l, j)[k]
                # -[x, Dy]
                for l in range(d):
                    row[l * d + j] -= A.basis_bracket(i, l)[k]
                rows.append(tuple(row))
    M = Matrix.from_rows(rows) if rows else Matrix.zeros(0, d * d)
    basis = []
    for v in M.kernel_basis():
        basis.append(Matrix.from_rows([v[r * d:(r + 1) * d] for r in range(d)]))
    return basis


def rand_derivation(rng: random.Random, A: LeibnizAlgebra) -> Matrix:
    basis = derivation_space(A)
    out = Matrix.zeros(A.dim, A.dim)
    for b in basis:
        out = out + b.scale(rand_scalar(rng))
    return out


def rand_pair(rng: random.Random, dim: int = None) -> LeibDerPair:
    A = rand_algebra(rng, dim)
    return LeibDerPair(A, rand_derivation(rng, A))


def rand_leibder_rep(rng: random.Random, P: LeibDerPair) -> LeibDerRepresentation:
    if rng.randrange(2):
        return LeibDerRepresentation.adjoint(P)
    mdim = rng.randint(1, 2)
    return LeibDerRepresentation.trivial(P, mdim, rand_matrix(rng, mdim, mdim))


def rand_cochain(rng: random.Random, degree: int, gdim: int, mdim: int) -> Cochain:
    n = mdim * gdim ** degree
    return Cochain.from_flat(degree, gdim, mdim, rand_vector(rng, n))


def rand_leibder_cochain(rng: random.Random, degree: int, gdim: int, mdim: int) -> LeibDerCochain:
    top = rand_cochain(rng, degree, gdim, mdim)
    if degree == 1:
        return LeibDerCochain(top, None)
    return LeibDerCochain(top, rand_cochain(rng, degree - 1, gdim, mdim))


def rand_cocycle(rng: random.Random, P: LeibDerPair, R: LeibDerRepresentation,
                 degree: int) -> LeibDerCochain:
    basis = cocycle_basis(P, R, degree)
    out = LeibDerCochain.zero(degree, P.dim, R.rep.mdim)
    for b in basis:
        out = out + b.scale(rand_scalar(rng))
    return out


@pytest.fixture
def rng():
    return random.Random(20260823)
