import random
from fractions import Fraction

from leibder.exactlin import Matrix
from leibder.leibniz import (
    LeibnizAlgebra,
    LeibDerPair,
    Representation,
    LeibDerRepresentation,
)
from leibder.cohomology import Cochain, LeibDerCochain
from leibder.shleibniz import (
    BilinearMap,
    TrilinearMap,
    TwoTermShLeibniz,
    HomotopyDerivation,
    ShMorphism,
    CrossedModule,
    check_sh,
    check_homotopy_derivation,
    check_sh_morphism,
    compose_morphisms,
    skeletal_to_triple,
    triple_to_skeletal,
    check_crossed,
    strict_to_crossed,
    crossed_to_strict,
    to_two_vector,
    from_two_vector,
)
from conftest import (
    rand_pair,
    rand_leibder_rep,
    rand_cocycle,
    rand_matrix,
    lambda2_pair,
)


# -- corpora ------------------------------------------------------------------


def rand_triple(rng):
    P = rand_pair(rng, dim=2)
    R = rand_leibder_rep(rng, P)
    c = rand_cocycle(rng, P, R, 3)
    return P, R, c


def rand_crossed(rng):
    if rng.randrange(2):
        # conjugation crossed module: g acts on itself via id
        P = rand_pair(rng, dim=2)
        return CrossedModule(P, P, Matrix.identity(P.dim),
                             Representation.adjoint(P.algebra))
    # abelian module with zero map and zero action
    h = rand_pair(rng, dim=2)
    m = rng.randint(1, 2)
    g = LeibDerPair(LeibnizAlgebra.abelian(m), rand_matrix(rng, m, m))
    return CrossedModule(g, h, Matrix.zeros(h.dim, m),
                         Representation.trivial(h.algebra, m))


# -- skeletal <-> triple --------------------------------------------------------


def test_skeletal_roundtrip(rng):
    for _ in range(20):
        P, R, c = rand_triple(rng)
        S, th = triple_to_skeletal(P, R, c)
        assert S.is_skeletal
        assert check_sh(S).ok
        assert check_homotopy_derivation(S, th).ok
        P2, R2, c2 = skeletal_to_triple(S, th)
        assert P2 == P
        assert R2.rep.left == R.rep.left and R2.rep.right == R.rep.right
        assert R2.phi_M == R.phi_M
        assert c2 == c


def test_strict_crossed_roundtrip(rng):
    for _ in range(20):
        C = rand_crossed(rng)
        assert check_crossed(C).ok
        S, th = crossed_to_strict(C)
        assert S.is_strict
        assert check_sh(S).ok
        assert check_homotopy_derivation(S, th).ok
        C2 = strict_to_crossed(S, th)
        assert C2 == C


def test_crossed_checker_rejects_broken_peiffer():
    P = lambda2_pair()
    C = CrossedModule(P, P, Matrix.identity(2), Representation.trivial(P.algebra, 2))
    report = check_crossed(C)
    assert not report.ok


# -- the 8 single-identity corruption mutants ----------------------------------
# Each structure below is built so that exactly one of the eight 2-term sh
# Leibniz identities fails; the data was found by coefficient search.


def _mutant(a0, a1, entries):
    d = [[Fraction(0)] * a1 for _ in range(a0)]
    l2_00 = [[Fraction(0)] * a0 for _ in range(a0 * a0)]
    l2_01 = [[Fraction(0)] * a1 for _ in range(a0 * a1)]
    l2_10 = [[Fraction(0)] * a1 for _ in range(a1 * a0)]
    l3 = [[Fraction(0)] * a1 for _ in range(a0 ** 3)]
    for name, idx in entries:
        if name == "d":
            d[idx[0]][idx[1]] = Fraction(1)
        elif name == "l2_00":
            l2_00[idx[0] * a0 + idx[1]][idx[2]] = Fraction(1)
        elif name == "l2_01":
            l2_01[idx[0] * a1 + idx[1]][idx[2]] = Fraction(1)
        elif name == "l2_10":
            l2_10[idx[0] * a0 + idx[1]][idx[2]] = Fraction(1)
        elif name == "l3":
            l3[idx[0]][idx[1]] = Fraction(1)
    return TwoTermShLeibniz(
        a0, a1, Matrix.from_rows(d),
        BilinearMap(a0, a0, a0, tuple(tuple(v) for v in l2_00)),
        BilinearMap(a0, a1, a1, tuple(tuple(v) for v in l2_01)),
        BilinearMap(a1, a0, a1, tuple(tuple(v) for v in l2_10)),
        TrilinearMap(a0, a1, tuple(tuple(v) for v in l3)),
    )


MUTANTS = {
    "1": ((2, 1), [("d", (0, 0)), ("l2_00", (1, 0, 1))]),
    "2": ((2, 1), [("d", (0, 0)), ("l2_00", (0, 1, 0))]),
    "3": ((2, 2), [("d", (0, 0)), ("l2_01", (0, 0, 1))]),
    "4": ((2, 1), [("l2_00", (0, 0, 0))]),
    "5": ((2, 1), [("l2_01", (0, 0, 0))]),
    "6": ((2, 2), [("d", (0, 0)), ("l3", (5, 1))]),
    "7": ((2, 1), [("l2_00", (0, 0, 1)), ("l2_10", (0, 1, 0))]),
    "8": ((2, 1), [("l2_00", (0, 0, 1)), ("l3", (1, 0))]),
}


def test_single_identity_mutants():
    for ident, ((a0, a1), entries) in MUTANTS.items():
        S = _mutant(a0, a1, entries)
        report = check_sh(S)
        assert not report.ok
        assert report.violated() == (ident,), (ident, report.violated())


# -- morphisms -----------------------------------------------------------------


def test_identity_morphism(rng):
    for _ in range(10):
        P, R, c = rand_triple(rng)
        S, th = triple_to_skeletal(P, R, c)
        m = ShMorphism.identity(S, with_B=True)
        assert check_sh_morphism(S, S, m, th, th).ok


def test_morphism_composition(rng):
    for _ in range(5):
        P, R, c = rand_triple(rng)
        S, th = triple_to_skeletal(P, R, c)
        m = ShMorphism.identity(S, with_B=True)
        mm = compose_morphisms(m, m)
        assert check_sh_morphism(S, S, mm, th, th).ok


def test_morphism_checker_rejects_bad_f2(rng):
    C = rand_crossed(rng)
    S, th = crossed_to_strict(C)
    m = ShMorphism.identity(S)
    bad_vals = [[Fraction(0)] * S.dim1 for _ in range(S.dim0 * S.dim0)]
    bad_vals[0][0] = Fraction(1)
    bad = ShMorphism(m.f0, m.f1,
                     BilinearMap(S.dim0, S.dim0, S.dim1,
                                 tuple(tuple(v) for v in bad_vals)), None)
    assert not check_sh_morphism(S, S, bad).ok


# -- two-vector dictionary -------------------------------------------------------


def test_two_vector_roundtrip(rng):
    for _ in range(10):
        P, R, c = rand_triple(rng)
        S, th = triple_to_skeletal(P, R, c)
        V, D = to_two_vector(S, th)
        S2, th2 = from_two_vector(V, D)
        assert S2 == S
        assert th2 == th


def test_two_vector_transported_derivation_valid(rng):
    for _ in range(10):
        C = rand_crossed(rng)
        S, th = crossed_to_strict(C)
        V, D = to_two_vector(S, th)
        assert D is not None
        S2, th2 = from_two_vector(V, D)
        assert check_homotopy_derivation(S2, th2).ok
        assert th2 == th
