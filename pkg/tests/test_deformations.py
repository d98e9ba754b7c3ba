import random
from fractions import Fraction

from leibder.exactlin import Matrix
from leibder.leibniz import LeibnizAlgebra, LeibDerPair, LeibDerRepresentation
from leibder.cohomology import (
    Cochain,
    LeibDerCochain,
    partial,
    cocycle_basis,
    solve_coboundary,
    cohomology_dim,
)
from leibder.deformations import (
    Deformation,
    FormalIsomorphism,
    check_deformation,
    check_deformation_bracket,
    infinitesimal,
    apply_equivalence,
    trivialize_step,
    trivialize,
    obstruction,
    extend_deformation,
)
from conftest import (
    lambda2_algebra,
    lambda2_pair,
    zero_pair,
    rand_pair,
    rand_matrix,
    rand_cocycle,
    rand_scalar,
)


def rand_formal_iso(rng, dim, order):
    terms = [Matrix.identity(dim)]
    terms += [rand_matrix(rng, dim, dim) for _ in range(order)]
    return FormalIsomorphism(tuple(terms))


def rand_valid_deformation(rng, order=2):
    """Conjugating the constant deformation by a formal isomorphism always
    yields a valid deformation of the same base pair."""
    P = rand_pair(rng, dim=2)
    psi = rand_formal_iso(rng, P.dim, order)
    return apply_equivalence(Deformation.constant(P, order), psi)


def test_valid_corpus_both_checkers_agree(rng):
    for _ in range(25):
        D = rand_valid_deformation(rng, rng.randint(1, 2))
        assert check_deformation(D).ok
        assert check_deformation_bracket(D).ok


def test_checkers_agree_on_invalid(rng):
    for _ in range(15):
        D = rand_valid_deformation(rng, 2)
        noise_mu = [m + __import__("conftest").rand_cochain(rng, 2, D.base.dim, D.base.dim)
                    for m in D.mu[1:]]
        bad = Deformation.from_terms(D.base, noise_mu, list(D.phi[1:]))
        assert check_deformation(bad).ok == check_deformation_bracket(bad).ok


def test_infinitesimal_is_cocycle(rng):
    count = 0
    while count < 50:
        D = rand_valid_deformation(rng, rng.randint(1, 2))
        c, ok = infinitesimal(D)
        assert ok
        R = LeibDerRepresentation.adjoint(D.base)
        assert partial(D.base, R, c).is_zero()
        count += 1


def test_infinitesimal_difference_of_equivalent_is_exact(rng):
    for _ in range(10):
        D = rand_valid_deformation(rng, 2)
        psi = rand_formal_iso(rng, D.base.dim, 2)
        D2 = apply_equivalence(D, psi)
        c1, _ = infinitesimal(D)
        c2, _ = infinitesimal(D2)
        R = LeibDerRepresentation.adjoint(D.base)
        # (original - transformed) infinitesimal equals the coboundary of psi_1
        expect = partial(D.base, R, LeibDerCochain(Cochain.from_matrix(psi.term(1)), None))
        assert c1 - c2 == expect


def test_obstruction_is_cocycle(rng):
    count = 0
    while count < 50:
        D = rand_valid_deformation(rng, rng.randint(1, 2))
        ob3, ob2, ok = obstruction(D)
        assert ok
        R = LeibDerRepresentation.adjoint(D.base)
        assert partial(D.base, R, LeibDerCochain(ob3, ob2)).is_zero()
        count += 1


def test_extension_examples_both_directions(rng):
    # extensible: abelian base, mu_1 = lambda2 bracket, phi_1 = 0
    base = zero_pair(2)
    lam2 = lambda2_algebra()
    mu1 = Cochain(2, 2, 2, lam2.bracket_cochain_values())
    D = Deformation.from_terms(base, [mu1], [Cochain.zero(1, 2, 2)])
    assert check_deformation(D).ok
    ob3, ob2, ok = obstruction(D)
    assert ok and ob3.is_zero() and ob2.is_zero()
    ext = extend_deformation(D)
    assert ext is not None
    assert check_deformation(ext).ok
    assert ext.order == 2

    # non-extensible: mu_1 not Leibniz makes Ob^3 nonzero and the class
    # nontrivial over the abelian base (coboundaries vanish there only if
    # solve_coboundary fails, which extend_deformation reports)
    flat = [Fraction(0)] * 8
    flat[0] = Fraction(1)  # mu1(e1,e1) = e1 is not a Leibniz bracket
    bad_mu1 = Cochain.from_flat(2, 2, 2, tuple(flat))
    D2 = Deformation.from_terms(base, [bad_mu1], [Cochain.zero(1, 2, 2)])
    assert check_deformation(D2).ok  # order-1 equations hold over abelian base
    ob3b, ob2b, okb = obstruction(D2)
    assert not ob3b.is_zero()
    assert extend_deformation(D2) is None


def test_extend_solves_next_order(rng):
    for _ in range(10):
        D = rand_valid_deformation(rng, 1)
        ext = extend_deformation(D)
        if ext is None:
            continue
        assert ext.order == D.order + 1
        assert check_deformation(ext).ok
        assert ext.mu[1] == D.mu[1] and ext.phi[1] == D.phi[1]


def test_equivalence_is_group_action(rng):
    for _ in range(8):
        D = rand_valid_deformation(rng, 2)
        p1 = rand_formal_iso(rng, D.base.dim, 2)
        p2 = rand_formal_iso(rng, D.base.dim, 2)
        lhs = apply_equivalence(apply_equivalence(D, p1), p2)
        rhs = apply_equivalence(D, p2.compose(p1, D.order))
        assert lhs == rhs


def test_trivialize_step_kills_exact_order(rng):
    for _ in range(10):
        P = rand_pair(rng, dim=2)
        R = LeibDerRepresentation.adjoint(P)
        psi1 = rand_matrix(rng, P.dim, P.dim)
        c = partial(P, R, LeibDerCochain(Cochain.from_matrix(psi1), None))
        D = Deformation.from_terms(P, [c.top], [c.shadow])
        if not check_deformation(D).ok:
            continue
        step = trivialize_step(D)
        assert step.status == "stepped"
        assert step.result.first_nonzero_order() is None


def test_trivialize_rigid_base(rng):
    # the 0-dim pair has H^2 = 0 trivially; every deformation is constant
    Z = zero_pair(0)
    D = Deformation.constant(Z, 2)
    done, final, steps = trivialize(D)
    assert done and final.first_nonzero_order() is None

    # conjugates of the constant deformation trivialize back to constant
    for _ in range(10):
        P = rand_pair(rng, dim=2)
        psi = rand_formal_iso(rng, P.dim, 2)
        D = apply_equivalence(Deformation.constant(P, 2), psi)
        done, final, steps = trivialize(D)
        assert done
        assert final.first_nonzero_order() is None


def test_trivialize_reports_obstruction():
    # the lambda2 bracket direction on the abelian base is a non-exact cocycle
    base = zero_pair(2)
    mu1 = Cochain(2, 2, 2, lambda2_algebra().bracket_cochain_values())
    D = Deformation.from_terms(base, [mu1], [Cochain.zero(1, 2, 2)])
    done, final, steps = trivialize(D)
    assert not done
