"""Formal deformations of a Leibniz algebra with derivation, mod t^{N+1}.

A deformation is a pair of truncated series (μ_0..μ_N, φ_0..φ_N) of
2-cochains and 1-cochains with adjoint coefficients, μ_0 and φ_0 being the
undeformed structure.  Validity, infinitesimals, equivalences, stepwise
trivialization and obstruction-driven order extension all reduce to exact
linear algebra in the combined cochain complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .exactlin import Matrix, unit_vector, vec_add, vec_sub, vec_scale, scalar, zero_vector
from .cohomology import (
    Cochain,
    LeibDerCochain,
    bullet,
    gbracket,
    partial,
    solve_coboundary,
)
from .leibniz import CheckReport, LeibDerPair, LeibDerRepresentation


@dataclass(frozen=True)
class Deformation:
    base: LeibDerPair
    mu: tuple[Cochain, ...]   # degree-2 cochains, adjoint coefficients
    phi: tuple[Cochain, ...]  # degree-1 cochains, adjoint coefficients

    def __post_init__(self):
        d = self.base.dim
        if len(self.mu) != len(self.phi) or not self.mu:
            raise InputError("deformation needs matching mu/phi lists, orders 0..N")
        for c, deg in ((self.mu, 2), (self.phi, 1)):
            for f in c:
                if (f.degree, f.gdim, f.mdim) != (deg, d, d):
                    raise InputError("deformation coefficient has wrong shape")
        if self.mu[0].values != self.base.algebra.bracket_cochain_values():
            raise InputError("order-0 bracket must equal the base bracket")
        if self.phi[0].as_matrix() != self.base.phi:
            raise InputError("order-0 derivation must equal the base derivation")

    @property
    def order(self) -> int:
        return len(self.mu) - 1

    @staticmethod
    def constant(base: LeibDerPair, order: int) -> "Deformation":
        d = base.dim
        mu0 = Cochain(2, d, d, base.algebra.bracket_cochain_values())
        phi0 = Cochain.from_matrix(base.phi)
        mu = (mu0,) + tuple(Cochain.zero(2, d, d) for _ in range(order))
        phi = (phi0,) + tuple(Cochain.zero(1, d, d) for _ in range(order))
        return Deformation(base, mu, phi)

    @staticmethod
    def from_terms(base: LeibDerPair, mu_terms, phi_terms) -> "Deformation":
        """Build from the order ≥ 1 coefficients only."""
        if len(mu_terms) != len(phi_terms):
            raise InputError("mu and phi term lists must have the same length")
        c = Deformation.constant(base, len(mu_terms))
        return Deformation(base, (c.mu[0],) + tuple(mu_terms), (c.phi[0],) + tuple(phi_terms))

    def first_nonzero_order(self) -> Optional[int]:
        for n in range(1, self.order + 1):
            if not (self.mu[n].is_zero() and self.phi[n].is_zero()):
                return n
        return None


@dataclass(frozen=True)
class FormalIsomorphism:
    psi: tuple[Matrix, ...]  # psi[0] must be the identity

    def __post_init__(self):
        if not self.psi:
            raise InputError("formal isomorphism needs at least the order-0 term")
        d = self.psi[0].rows
        if self.psi[0] != Matrix.identity(d):
            raise InputError("order-0 term of a formal isomorphism must be the identity")
        if any((m.rows, m.cols) != (d, d) for m in self.psi):
            raise InputError("formal isomorphism terms must be square of equal size")

    @property
    def order(self) -> int:
        return len(self.psi) - 1

    @property
    def dim(self) -> int:
        return self.psi[0].rows

    def term(self, n: int) -> Matrix:
        return self.psi[n] if n < len(self.psi) else Matrix.zeros(self.dim, self.dim)

    def inverse_terms(self, order: int) -> list[Matrix]:
        """Series inverse mod t^{order+1}: inv_0 = id, inv_n = −Σ_{k≥1} ψ_k inv_{n−k}."""
        d = self.dim
        inv = [Matrix.identity(d)]
        for n in range(1, order + 1):
            acc = Matrix.zeros(d, d)
            for k in range(1, n + 1):
                acc = acc + self.term(k) @ inv[n - k]
            inv.append(-acc)
        return inv

    def compose(self, other: "FormalIsomorphism", order: int) -> "FormalIsomorphism":
        """(self ∘ other) truncated: term n = Σ_{a+b=n} self_a · other_b."""
        d = self.dim
        terms = []
        for n in range(order + 1):
            acc = Matrix.zeros(d, d)
            for a in range(n + 1):
                acc = acc + self.term(a) @ other.term(n - a)
            terms.append(acc)
        return FormalIsomorphism(tuple(terms))


def _adjoint(base: LeibDerPair) -> LeibDerRepresentation:
    return LeibDerRepresentation.adjoint(base)


def check_deformation(D: Deformation) -> CheckReport:
    """Order-by-order structure equations, elementwise on basis tuples.

    For every n ≤ N:
      Σ_{i+j=n} μ_i(μ_j(x,y),z) = Σ_{i+j=n} μ_i(μ_j(x,z),y) + μ_i(x, μ_j(y,z))
      Σ_{i+j=n} φ_i(μ_j(x,y)) = Σ_{i+j=n} μ_i(φ_j x, y) + μ_i(x, φ_j y)
    """
    d = D.base.dim
    e = [unit_vector(d, i) for i in range(d)]
    failures = []
    for n in range(D.order + 1):
        bad = None
        for x, y, z in itertools.product(range(d), repeat=3):
            acc = zero_vector(d)
            for i in range(n + 1):
                j = n - i
                acc = vec_add(acc, D.mu[i].eval([D.mu[j].at(x, y), e[z]]))
                acc = vec_sub(acc, D.mu[i].eval([D.mu[j].at(x, z), e[y]]))
                acc = vec_sub(acc, D.mu[i].eval([e[x], D.mu[j].at(y, z)]))
            if any(c != 0 for c in acc):
                bad = (x, y, z)
                break
        if bad is not None:
            failures.append((f"bracket-order-{n}", bad))
        bad = None
        for x, y in itertools.product(range(d), repeat=2):
            acc = zero_vector(d)
            for i in range(n + 1):
                j = n - i
                acc = vec_add(acc, D.phi[i].eval([D.mu[j].at(x, y)]))
                acc = vec_sub(acc, D.mu[i].eval([D.phi[j].at(x), e[y]]))
                acc = vec_sub(acc, D.mu[i].eval([e[x], D.phi[j].at(y)]))
            if any(c != 0 for c in acc):
                bad = (x, y)
                break
        if bad is not None:
            failures.append((f"derivation-order-{n}", bad))
    return CheckReport(ok=not failures, failures=tuple(failures))


def check_deformation_bracket(D: Deformation) -> CheckReport:
    """Independent code path: the same equations in graded-bracket form.

    Order n holds iff Σ_{i+j=n} μ_i•μ_j = 0 and Σ_{i+j=n} ⟦φ_i, μ_j⟧ = 0.
    """
    d = D.base.dim
    failures = []
    for n in range(D.order + 1):
        acc3 = Cochain.zero(3, d, d)
        acc2 = Cochain.zero(2, d, d)
        for i in range(n + 1):
            acc3 = acc3 + bullet(D.mu[i], D.mu[n - i])
            acc2 = acc2 + gbracket(D.phi[i], D.mu[n - i])
        if not acc3.is_zero():
            failures.append((f"bracket-order-{n}", ()))
        if not acc2.is_zero():
            failures.append((f"derivation-order-{n}", ()))
    return CheckReport(ok=not failures, failures=tuple(failures))


def infinitesimal(D: Deformation) -> tuple[LeibDerCochain, bool]:
    """The linear term (μ_1, φ_1) and whether it is a ∂-cocycle (it must be)."""
    if D.order < 1:
        raise InputError("deformation has no linear term")
    if not check_deformation(D).ok:
        raise InputError("invalid deformation")
    c = LeibDerCochain(D.mu[1], D.phi[1])
    return c, partial(D.base, _adjoint(D.base), c).is_zero()


def _conjugate_mu(mu: Cochain, post: Matrix, left: Matrix, right: Matrix) -> Cochain:
    d = mu.gdim
    vals = []
    for i in range(d):
        for j in range(d):
            vals.append(post.apply(mu.eval([left.col(i), right.col(j)])))
    return Cochain(2, d, d, tuple(vals))


def apply_equivalence(D: Deformation, Psi: FormalIsomorphism) -> Deformation:
    """μ′ = ψ_t ∘ μ_t ∘ (ψ_t⁻¹ ⊗ ψ_t⁻¹), φ′ = ψ_t ∘ φ_t ∘ ψ_t⁻¹, mod t^{N+1}."""
    d = D.base.dim
    if Psi.dim != d:
        raise InputError("formal isomorphism dimension mismatch")
    N = D.order
    inv = Psi.inverse_terms(N)
    zero2 = Cochain.zero(2, d, d)
    mu_out = []
    phi_out = []
    for n in range(N + 1):
        acc2 = zero2
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    e = n - a - b - c
                    acc2 = acc2 + _conjugate_mu(D.mu[b], Psi.term(a), inv[c], inv[e])
        mu_out.append(acc2)
        acc1 = Matrix.zeros(d, d)
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                acc1 = acc1 + Psi.term(a) @ D.phi[b].as_matrix() @ inv[c]
        phi_out.append(Cochain.from_matrix(acc1))
    return Deformation(D.base, tuple(mu_out), tuple(phi_out))


@dataclass(frozen=True)
class TrivializeStep:
    status: str  # "already-trivial" | "stepped" | "obstructed"
    order: Optional[int] = None
    iso: Optional[FormalIsomorphism] = None
    result: Optional["Deformation"] = None
    obstructing: Optional[LeibDerCochain] = None


def trivialize_step(D: Deformation) -> TrivializeStep:
    """Kill the first nonzero order by conjugating with id + tⁿψ_n, if possible.

    (μ_n, φ_n) is a ∂-cocycle; when it is exact with ∂ψ_n = (μ_n, φ_n),
    conjugation pushes the first nonzero order strictly up.
    """
    if not check_deformation(D).ok:
        raise InputError("invalid deformation")
    n = D.first_nonzero_order()
    if n is None:
        return TrivializeStep(status="already-trivial")
    c = LeibDerCochain(D.mu[n], D.phi[n])
    u = solve_coboundary(D.base, _adjoint(D.base), c)
    if u is None:
        return TrivializeStep(status="obstructed", order=n, obstructing=c)
    d = D.base.dim
    terms = [Matrix.identity(d)] + [Matrix.zeros(d, d)] * (n - 1) + [u.top.as_matrix()]
    iso = FormalIsomorphism(tuple(terms))
    conj = apply_equivalence(D, iso)
    if conj.first_nonzero_order() is not None and conj.first_nonzero_order() <= n:
        raise InputError("trivialization step failed to raise the order")
    return TrivializeStep(status="stepped", order=n, iso=iso, result=conj)


def trivialize(D: Deformation) -> tuple[bool, Deformation, list[FormalIsomorphism]]:
    """Iterate trivialize_step; returns (fully trivialized?, final, steps used)."""
    steps: list[FormalIsomorphism] = []
    cur = D
    while True:
        step = trivialize_step(cur)
        if step.status == "already-trivial":
            return (True, cur, steps)
        if step.status == "obstructed":
            return (False, cur, steps)
        steps.append(step.iso)
        cur = step.result


def obstruction(D: Deformation) -> tuple[Cochain, Cochain, bool]:
    """(Ob³, Ob²) for order N+1, plus the verdict that it is a ∂-cocycle.

    Ob³ = Σ_{i+j=N+1, i,j≥1} μ_i•μ_j  (= ½ Σ ⟦μ_i, μ_j⟧),
    Ob² = Σ_{i+j=N+1, i,j≥1} ⟦φ_i, μ_j⟧.
    """
    if not check_deformation(D).ok:
        raise InputError("invalid deformation")
    d = D.base.dim
    N = D.order
    ob3 = Cochain.zero(3, d, d)
    ob2 = Cochain.zero(2, d, d)
    for i in range(1, N + 1):
        j = N + 1 - i
        if j < 1 or j > N:
            continue
        ob3 = ob3 + bullet(D.mu[i], D.mu[j])
        ob2 = ob2 + gbracket(D.phi[i], D.mu[j])
    combined = LeibDerCochain(ob3, ob2)
    is_cocycle = partial(D.base, _adjoint(D.base), combined).is_zero()
    return ob3, ob2, is_cocycle


def extend_deformation(D: Deformation) -> Optional[Deformation]:
    """Order N+1 continuation: solve ∂(μ_{N+1}, φ_{N+1}) = (Ob³, Ob²)."""
    ob3, ob2, is_cocycle = obstruction(D)
    if not is_cocycle:
        raise InputError("obstruction failed its cocycle condition")
    u = solve_coboundary(D.base, _adjoint(D.base), LeibDerCochain(ob3, ob2))
    if u is None:
        return None
    ext = Deformation(D.base, D.mu + (u.top,), D.phi + (u.shadow,))
    if not check_deformation(ext).ok:
        raise InputError("extended deformation failed validation")
    return ext
