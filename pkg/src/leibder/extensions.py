"""Central and abelian extensions of Leibniz algebras with derivations.

Central extensions are classified by degree-2 classes of the combined
complex with trivial coefficients; abelian extensions by the same complex
with coefficients in the acting representation.  Extending a pair of
derivations to the middle of a central extension is governed by an
obstruction class in plain Leibniz cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .exactlin import Matrix, unit_vector, vec_add, vec_sub, zero_vector
from .cohomology import (
    Cochain,
    LeibDerCochain,
    delta_L,
    delta_L_matrix,
    delta_phi,
    partial,
    solve_coboundary,
)
from .leibniz import (
    CheckReport,
    LeibDerPair,
    LeibDerRepresentation,
    LeibnizAlgebra,
    Representation,
    check_derivation,
    check_leibniz,
    check_pair,
)


@dataclass(frozen=True)
class CentralExtensionData:
    base: LeibDerPair
    fiber: LeibDerPair  # abelian algebra with a (then automatic) derivation
    psi: Cochain        # degree 2, values in the fiber
    chi: Cochain        # degree 1, values in the fiber


@dataclass(frozen=True)
class AbelianExtensionData:
    base: LeibDerPair
    rep: LeibDerRepresentation
    cocycle: LeibDerCochain  # degree 2, (f, f̄)


@dataclass(frozen=True)
class ExtensionDiagram:
    """0 → fiber →i h →p base → 0 with an optional preferred section."""

    base: LeibDerPair
    total: LeibDerPair
    inj: Matrix   # fiber coordinates → h
    proj: Matrix  # h → base coordinates
    section: Optional[Matrix] = None

    @property
    def fiber_dim(self) -> int:
        return self.inj.cols


def _trivial_coeffs(base: LeibDerPair, fiber: LeibDerPair) -> LeibDerRepresentation:
    return LeibDerRepresentation.trivial(base, fiber.dim, fiber.phi)


def check_central_data(data: CentralExtensionData) -> CheckReport:
    """Validity of the inputs plus the two cocycle equations."""
    failures = []
    failures.extend(check_pair(data.base).failures)
    if any(not all(c == 0 for c in v) for row in data.fiber.algebra.table for v in row):
        failures.append(("fiber-abelian", ()))
    d, a = data.base.dim, data.fiber.dim
    if (data.psi.degree, data.psi.gdim, data.psi.mdim) != (2, d, a):
        raise InputError("psi must be a 2-cochain from the base to the fiber")
    if (data.chi.degree, data.chi.gdim, data.chi.mdim) != (1, d, a):
        raise InputError("chi must be a 1-cochain from the base to the fiber")
    R = _trivial_coeffs(data.base, data.fiber)
    if not delta_L(R.rep, data.psi).is_zero():
        failures.append(("cocycle-psi", ()))
    shadow = delta_L(R.rep, data.chi) + delta_phi(data.base, R, data.psi)
    if not shadow.is_zero():
        failures.append(("cocycle-chi", ()))
    return CheckReport(ok=not failures, failures=tuple(failures))


def build_central_extension(data: CentralExtensionData) -> ExtensionDiagram:
    """h = g ⊕ a, [(x,a),(y,b)] = ([x,y], ψ(x,y)), φ(x,a) = (φ_g x, φ_a a + χ x)."""
    report = check_central_data(data)
    if not report.ok:
        raise InputError(f"invalid central extension data: {report.first[0]}")
    d, a = data.base.dim, data.fiber.dim
    n = d + a
    g = data.base.algebra

    def brk(i: int, j: int):
        if i < d and j < d:
            return g.table[i][j] + data.psi.at(i, j)
        return zero_vector(n)

    table = tuple(tuple(brk(i, j) for j in range(n)) for i in range(n))
    phi = Matrix.diag_blocks(data.base.phi, data.fiber.phi)
    # add the χ block: φ_h(e_i) picks up χ(e_i) in fiber coordinates
    rows = [list(r) for r in phi.entries]
    for i in range(d):
        for b in range(a):
            rows[d + b][i] += data.chi.at(i)[b]
    total = LeibDerPair(LeibnizAlgebra(n, table), Matrix(n, n, rows))
    inj = Matrix.from_cols([unit_vector(n, d + b) for b in range(a)])
    proj = Matrix.from_rows([unit_vector(n, i) for i in range(d)])
    section = Matrix.from_cols([unit_vector(n, i) for i in range(d)])
    return ExtensionDiagram(data.base, total, inj, proj, section)


def default_section(E: ExtensionDiagram) -> Matrix:
    """The stored section, or a particular linear splitting of proj."""
    if E.section is not None:
        return E.section
    cols = []
    for j in range(E.base.dim):
        sol = E.proj.solve(unit_vector(E.base.dim, j))
        if sol is None:
            raise InputError("projection is not surjective")
        cols.append(sol)
    return Matrix.from_cols(cols)


def _pullback(E: ExtensionDiagram, v) -> tuple:
    sol = E.inj.solve(v)
    if sol is None:
        raise InputError("value does not lie in the image of the fiber")
    return sol


def fiber_retraction(E: ExtensionDiagram, s: Matrix) -> Matrix:
    """r with inj∘r = id − s∘proj (the fiber component in the splitting by s)."""
    n = E.total.dim
    cols = []
    for j in range(n):
        v = unit_vector(n, j)
        cols.append(_pullback(E, vec_sub(v, s.apply(E.proj.apply(v)))))
    return Matrix.from_cols(cols)


def check_central_extension(E: ExtensionDiagram) -> CheckReport:
    """Structural sanity: exactness of the sequence, centrality, morphism laws."""
    failures = []
    failures.extend(check_pair(E.total).failures)
    n, d, a = E.total.dim, E.base.dim, E.fiber_dim
    if not (E.proj @ E.inj).is_zero():
        failures.append(("proj-inj-zero", ()))
    if E.inj.rank() != a:
        failures.append(("inj-injective", ()))
    if E.proj.rank() != d:
        failures.append(("proj-surjective", ()))
    # centrality: [i(f), h] = 0 = [h, i(f)]
    h = E.total.algebra
    for b in range(a):
        fb = E.inj.col(b)
        for j in range(n):
            ej = unit_vector(n, j)
            if not (all(c == 0 for c in h.bracket(fb, ej)) and all(c == 0 for c in h.bracket(ej, fb))):
                failures.append(("centrality", (b, j)))
                break
        else:
            continue
        break
    # proj is a morphism of pairs
    g = E.base.algebra
    for i in range(n):
        for j in range(n):
            if E.proj.apply(h.bracket(unit_vector(n, i), unit_vector(n, j))) != g.bracket(
                E.proj.col(i), E.proj.col(j)
            ):
                failures.append(("proj-morphism", (i, j)))
                break
        else:
            continue
        break
    if not (E.proj @ E.total.phi == E.base.phi @ E.proj):
        failures.append(("proj-derivation", ()))
    return CheckReport(ok=not failures, failures=tuple(failures))


def cocycle_from_section(E: ExtensionDiagram, s: Optional[Matrix] = None) -> tuple[Cochain, Cochain]:
    """ψ(x,y) = [s x, s y] − s[x,y] and χ(x) = φ_h(s x) − s(φ_g x), in fiber coordinates."""
    if s is None:
        s = default_section(E)
    d = E.base.dim
    if (s.rows, s.cols) != (E.total.dim, d) or not (E.proj @ s == Matrix.identity(d)):
        raise InputError("not a section of the projection")
    g, h = E.base.algebra, E.total.algebra
    psi_vals = []
    for i in range(d):
        for j in range(d):
            v = vec_sub(h.bracket(s.col(i), s.col(j)), s.apply(g.table[i][j]))
            psi_vals.append(_pullback(E, v))
    chi_vals = []
    for i in range(d):
        v = vec_sub(E.total.phi.apply(s.col(i)), s.apply(E.base.phi.col(i)))
        chi_vals.append(_pullback(E, v))
    a = E.fiber_dim
    return Cochain(2, d, a, tuple(psi_vals)), Cochain(1, d, a, tuple(chi_vals))


def is_isomorphic_extension(
    E1: ExtensionDiagram, E2: ExtensionDiagram, fiber: LeibDerPair
) -> tuple[bool, Optional[Matrix]]:
    """Equivalence test by coboundary solving; the witness fixes base and fiber.

    Returns (verdict, η) with η: total(E1) → total(E2), η(x, a) = (x, a + u(x)).
    """
    if E1.base != E2.base or E1.fiber_dim != E2.fiber_dim or E1.fiber_dim != fiber.dim:
        raise InputError("extensions do not share base and fiber")
    psi1, chi1 = cocycle_from_section(E1)
    psi2, chi2 = cocycle_from_section(E2)
    diff = LeibDerCochain(psi1 - psi2, chi1 - chi2)
    R = _trivial_coeffs(E1.base, fiber)
    u = solve_coboundary(E1.base, R, diff)
    if u is None:
        return (False, None)
    u_mat = u.top.as_matrix()
    s1, s2 = default_section(E1), default_section(E2)
    r1 = fiber_retraction(E1, s1)
    eta = s2 @ E1.proj + E2.inj @ (r1 + u_mat @ E1.proj)
    return (True, eta)


# -- derivation extension obstruction (plain Leibniz, trivial coefficients)


def obstruction_class(
    E: ExtensionDiagram, phi_g: Matrix, phi_a: Matrix
) -> tuple[Cochain, bool, Optional[Matrix]]:
    """Ob(x,y) = φ_a ψ(x,y) − ψ(φ_g x, y) − ψ(x, φ_g y); triviality via Ob = δ_L λ.

    The underlying extension is one of plain Leibniz algebras; any derivation
    data on the total space is ignored.
    """
    d, a = E.base.dim, E.fiber_dim
    if (phi_g.rows, phi_g.cols) != (d, d) or (phi_a.rows, phi_a.cols) != (a, a):
        raise InputError("derivation matrix shape mismatch")
    if not check_derivation(E.base.algebra, phi_g).ok:
        raise InputError("phi_g is not a derivation of the base")
    psi, _ = cocycle_from_section(E)
    e = [unit_vector(d, i) for i in range(d)]
    vals = []
    for i in range(d):
        for j in range(d):
            v = phi_a.apply(psi.at(i, j))
            v = vec_sub(v, psi.eval([phi_g.col(i), e[j]]))
            v = vec_sub(v, psi.eval([e[i], phi_g.col(j)]))
            vals.append(v)
    ob = Cochain(2, d, a, tuple(vals))
    triv = Representation.trivial(E.base.algebra, a)
    if not delta_L(triv, ob).is_zero():
        raise InputError("obstruction failed its own cocycle condition")
    lam_flat = delta_L_matrix(triv, 1).solve(ob.flat())
    if lam_flat is None:
        return (ob, False, None)
    lam = Cochain.from_flat(1, d, a, lam_flat).as_matrix()
    return (ob, True, lam)


def extend_derivation_pair(
    E: ExtensionDiagram, phi_g: Matrix, phi_a: Matrix
) -> Optional[Matrix]:
    """φ_h with φ_h(s x + i a) = s(φ_g x) + i(λ x) + i(φ_a a), when the class vanishes."""
    ob, trivial, lam = obstruction_class(E, phi_g, phi_a)
    if not trivial:
        return None
    s = default_section(E)
    r = fiber_retraction(E, s)
    phi_h = (s @ phi_g + E.inj @ lam) @ E.proj + E.inj @ phi_a @ r
    if not check_derivation(E.total.algebra, phi_h).ok:
        raise InputError("extended map failed the derivation law")
    return phi_h


# -- abelian extensions --------------------------------------------------


def check_abelian_data(data: AbelianExtensionData) -> CheckReport:
    failures = []
    failures.extend(check_pair(data.base).failures)
    c = data.cocycle
    if c.degree != 2 or (c.top.gdim, c.top.mdim) != (data.base.dim, data.rep.rep.mdim):
        raise InputError("cocycle must be a combined 2-cochain with module coefficients")
    if not partial(data.base, data.rep, c).is_zero():
        failures.append(("cocycle", ()))
    return CheckReport(ok=not failures, failures=tuple(failures))


def build_abelian_extension(data: AbelianExtensionData) -> ExtensionDiagram:
    """h = g ⊕ M, [(x,m),(y,n)] = ([x,y], [x,n] + [m,y] + f(x,y)),
    φ_h(x,m) = (φ_g x, φ_M m + f̄ x)."""
    report = check_abelian_data(data)
    if not report.ok:
        raise InputError(f"invalid abelian extension data: {report.first[0]}")
    P, R = data.base, data.rep
    f, fbar = data.cocycle.top, data.cocycle.shadow
    d, m = P.dim, R.rep.mdim
    n = d + m
    eg = [unit_vector(d, i) for i in range(d)]
    em = [unit_vector(m, a) for a in range(m)]

    def brk(i: int, j: int):
        gx, mx = (eg[i], zero_vector(m)) if i < d else (zero_vector(d), em[i - d])
        gy, my = (eg[j], zero_vector(m)) if j < d else (zero_vector(d), em[j - d])
        gpart = P.algebra.bracket(gx, gy)
        mpart = vec_add(R.rep.left_act(gx, my), R.rep.right_act(mx, gy))
        if i < d and j < d:
            mpart = vec_add(mpart, f.at(i, j))
        return gpart + mpart

    table = tuple(tuple(brk(i, j) for j in range(n)) for i in range(n))
    phi = Matrix.diag_blocks(P.phi, R.phi_M)
    rows = [list(r) for r in phi.entries]
    for i in range(d):
        for b in range(m):
            rows[d + b][i] += fbar.at(i)[b]
    total = LeibDerPair(LeibnizAlgebra(n, table), Matrix(n, n, rows))
    inj = Matrix.from_cols([unit_vector(n, d + b) for b in range(m)])
    proj = Matrix.from_rows([unit_vector(n, i) for i in range(d)])
    section = Matrix.from_cols([unit_vector(n, i) for i in range(d)])
    return ExtensionDiagram(P, total, inj, proj, section)


@dataclass(frozen=True)
class ExtensionClass:
    cocycle: LeibDerCochain
    is_exact: bool
    witness: Optional[LeibDerCochain]


def classify_abelian_extension(E: ExtensionDiagram, R: LeibDerRepresentation) -> ExtensionClass:
    """Extract (f, f̄) from a section, verify everything, and report exactness."""
    if R.rep.base != E.base.algebra:
        raise InputError("representation base does not match the extension base")
    s = default_section(E)
    d, m, n = E.base.dim, E.fiber_dim, E.total.dim
    if R.rep.mdim != m:
        raise InputError("representation module does not match the fiber")
    h = E.total.algebra
    # induced actions must reproduce R
    for i in range(d):
        for a in range(m):
            if _pullback(E, h.bracket(s.col(i), E.inj.col(a))) != R.rep.left[i][a]:
                raise InputError("induced left action does not match the representation")
            if _pullback(E, h.bracket(E.inj.col(a), s.col(i))) != R.rep.right[a][i]:
                raise InputError("induced right action does not match the representation")
    if not (E.total.phi @ E.inj == E.inj @ R.phi_M):
        raise InputError("total derivation does not restrict to the module derivation")
    g = E.base.algebra
    f_vals = []
    for i in range(d):
        for j in range(d):
            v = vec_sub(h.bracket(s.col(i), s.col(j)), s.apply(g.table[i][j]))
            f_vals.append(_pullback(E, v))
    fb_vals = []
    for i in range(d):
        v = vec_sub(E.total.phi.apply(s.col(i)), s.apply(E.base.phi.col(i)))
        fb_vals.append(_pullback(E, v))
    cocycle = LeibDerCochain(Cochain(2, d, m, tuple(f_vals)), Cochain(1, d, m, tuple(fb_vals)))
    if not partial(E.base, R, cocycle).is_zero():
        raise InputError("extracted data is not a cocycle")
    witness = solve_coboundary(E.base, R, cocycle)
    return ExtensionClass(cocycle, witness is not None, witness)


def is_equivalent_abelian(
    E1: ExtensionDiagram, E2: ExtensionDiagram, R: LeibDerRepresentation
) -> tuple[bool, Optional[Matrix]]:
    """Equivalence via Ψ(x, m) = (x, m + h(x)) where the cocycles differ by ∂h."""
    c1 = classify_abelian_extension(E1, R).cocycle
    c2 = classify_abelian_extension(E2, R).cocycle
    u = solve_coboundary(E1.base, R, c1 - c2)
    if u is None:
        return (False, None)
    u_mat = u.top.as_matrix()
    s1, s2 = default_section(E1), default_section(E2)
    r1 = fiber_retraction(E1, s1)
    psi = s2 @ E1.proj + E2.inj @ (r1 + u_mat @ E1.proj)
    return (True, psi)
