"""JSON interchange for all domain objects.

Scalars serialize as strings "p/q" (just "p" when the denominator is 1);
integers are accepted on input as shorthand.  Array flattening orders match
the owning modules (row-major over basis tuples, module coordinate fastest).
"""

from __future__ import annotations

from typing import Optional

from .errors import InputError
from .exactlin import Matrix, scalar, scalar_str
from .cohomology import Cochain, LeibDerCochain
from .deformations import Deformation
from .extensions import ExtensionDiagram
from .leibniz import LeibDerPair, LeibDerRepresentation, LeibnizAlgebra, Representation
from .shleibniz import (
    BilinearMap,
    CrossedModule,
    HomotopyDerivation,
    TrilinearMap,
    TwoTermShLeibniz,
)


def _field(obj: dict, name: str, where: str):
    if not isinstance(obj, dict) or name not in obj:
        raise InputError(f"missing field {name!r} in {where}")
    return obj[name]


def _count(obj: dict, name: str, where: str) -> int:
    v = _field(obj, name, where)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InputError(f"field {name!r} in {where} must be a nonnegative integer")
    return v


def scalar_in(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"bad scalar in {where}: {x!r}")
    return scalar(x)


def vector_in(xs, where: str) -> tuple:
    if not isinstance(xs, list):
        raise InputError(f"expected a list of scalars in {where}")
    return tuple(scalar_in(x, where) for x in xs)


def vector_out(v) -> list:
    return [scalar_str(x) for x in v]


def matrix_in(obj, rows: int, cols: int, where: str) -> Matrix:
    if not isinstance(obj, list) or len(obj) != rows:
        raise InputError(f"matrix in {where} must have {rows} rows")
    data = [vector_in(row, where) for row in obj]
    if any(len(row) != cols for row in data):
        raise InputError(f"matrix in {where} must have {cols} columns")
    return Matrix(rows, cols, data)


def matrix_out(m: Matrix) -> list:
    return [vector_out(row) for row in m.entries]


# -- algebras and pairs --------------------------------------------------


def algebra_in(obj: dict, where: str = "algebra") -> LeibnizAlgebra:
    dim = _count(obj, "dim", where)
    bracket = _field(obj, "bracket", where)
    if not isinstance(bracket, list) or len(bracket) != dim:
        raise InputError(f"field 'bracket' in {where} must be a {dim}-row table")
    table = []
    for i, row in enumerate(bracket):
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"bracket row {i} in {where} has wrong length")
        table.append([vector_in(v, f"{where}.bracket[{i}]") for v in row])
    if any(len(v) != dim for row in table for v in row):
        raise InputError(f"bracket values in {where} have wrong length")
    return LeibnizAlgebra.from_table(dim, table)


def algebra_out(A: LeibnizAlgebra) -> dict:
    return {
        "dim": A.dim,
        "bracket": [[vector_out(v) for v in row] for row in A.table],
    }


def pair_in(obj: dict, where: str = "pair") -> LeibDerPair:
    A = algebra_in(obj, where)
    phi = matrix_in(_field(obj, "phi", where), A.dim, A.dim, f"{where}.phi")
    return LeibDerPair(A, phi)


def pair_out(P: LeibDerPair) -> dict:
    out = algebra_out(P.algebra)
    out["phi"] = matrix_out(P.phi)
    return out


def representation_in(base: LeibDerPair, obj: dict, where: str = "representation") -> LeibDerRepresentation:
    mdim = _count(obj, "mdim", where)
    d = base.dim
    left_raw = _field(obj, "left", where)
    right_raw = _field(obj, "right", where)
    if not isinstance(left_raw, list) or len(left_raw) != d:
        raise InputError(f"field 'left' in {where} must have {d} rows")
    if not isinstance(right_raw, list) or len(right_raw) != mdim:
        raise InputError(f"field 'right' in {where} must have {mdim} rows")
    left = [[vector_in(v, f"{where}.left") for v in row] for row in left_raw]
    right = [[vector_in(v, f"{where}.right") for v in row] for row in right_raw]
    rep = Representation.from_tables(base.algebra, mdim, left, right)
    if "phi_M" in obj:
        phi_M = matrix_in(obj["phi_M"], mdim, mdim, f"{where}.phi_M")
    else:
        phi_M = Matrix.zeros(mdim, mdim)
    return LeibDerRepresentation(rep, phi_M)


def representation_out(R: LeibDerRepresentation) -> dict:
    return {
        "mdim": R.rep.mdim,
        "left": [[vector_out(v) for v in row] for row in R.rep.left],
        "right": [[vector_out(v) for v in row] for row in R.rep.right],
        "phi_M": matrix_out(R.phi_M),
    }


# -- cochains ------------------------------------------------------------


def cochain_in(obj: dict, gdim: int, mdim: int, where: str = "cochain") -> Cochain:
    degree = _count(obj, "degree", where)
    gdim = obj.get("gdim", gdim)
    mdim = obj.get("mdim", mdim)
    flat = vector_in(_field(obj, "values", where), f"{where}.values")
    return Cochain.from_flat(degree, gdim, mdim, flat)


def cochain_out(f: Cochain) -> dict:
    return {
        "degree": f.degree,
        "gdim": f.gdim,
        "mdim": f.mdim,
        "values": vector_out(f.flat()),
    }


def leibder_cochain_in(obj: dict, gdim: int, mdim: int, where: str = "cocycle") -> LeibDerCochain:
    top = cochain_in(_field(obj, "top", where), gdim, mdim, f"{where}.top")
    shadow = None
    if obj.get("shadow") is not None:
        shadow = cochain_in(obj["shadow"], gdim, mdim, f"{where}.shadow")
    return LeibDerCochain(top, shadow)


def leibder_cochain_out(c: LeibDerCochain) -> dict:
    return {
        "top": cochain_out(c.top),
        "shadow": cochain_out(c.shadow) if c.shadow is not None else None,
    }


# -- deformations ---------------------------------------------------------


def deformation_in(obj: dict, where: str = "deformation") -> Deformation:
    base = pair_in(_field(obj, "pair", where), f"{where}.pair")
    order = _count(obj, "order", where)
    mu_raw = _field(obj, "mu", where)
    phi_raw = _field(obj, "phi", where)
    if not isinstance(mu_raw, list) or len(mu_raw) != order:
        raise InputError(f"field 'mu' in {where} must list orders 1..{order}")
    if not isinstance(phi_raw, list) or len(phi_raw) != order:
        raise InputError(f"field 'phi' in {where} must list orders 1..{order}")
    d = base.dim
    mu = [Cochain.from_flat(2, d, d, vector_in(b, f"{where}.mu")) for b in mu_raw]
    phi = [Cochain.from_flat(1, d, d, vector_in(b, f"{where}.phi")) for b in phi_raw]
    return Deformation.from_terms(base, mu, phi)


def deformation_out(D: Deformation) -> dict:
    return {
        "pair": pair_out(D.base),
        "order": D.order,
        "mu": [vector_out(f.flat()) for f in D.mu[1:]],
        "phi": [vector_out(f.flat()) for f in D.phi[1:]],
    }


# -- extension diagrams ----------------------------------------------------


def diagram_in(obj: dict, base: LeibDerPair, fiber_dim: int, where: str = "extension") -> ExtensionDiagram:
    total = pair_in(_field(obj, "total", where), f"{where}.total")
    n = total.dim
    inj = matrix_in(_field(obj, "inj", where), n, fiber_dim, f"{where}.inj")
    proj = matrix_in(_field(obj, "proj", where), base.dim, n, f"{where}.proj")
    section = None
    if obj.get("section") is not None:
        section = matrix_in(obj["section"], n, base.dim, f"{where}.section")
    return ExtensionDiagram(base, total, inj, proj, section)


def diagram_out(E: ExtensionDiagram) -> dict:
    return {
        "total": pair_out(E.total),
        "inj": matrix_out(E.inj),
        "proj": matrix_out(E.proj),
        "section": matrix_out(E.section) if E.section is not None else None,
    }


# -- sh structures ----------------------------------------------------------


def _block_in(obj, dim1: int, dim2: int, out_dim: int, where: str) -> BilinearMap:
    if not isinstance(obj, list) or len(obj) != dim1:
        raise InputError(f"block {where} must have {dim1} rows")
    vals = []
    for row in obj:
        if not isinstance(row, list) or len(row) != dim2:
            raise InputError(f"block {where} rows must have length {dim2}")
        for v in row:
            vals.append(vector_in(v, where))
    if any(len(v) != out_dim for v in vals):
        raise InputError(f"block {where} values have wrong length")
    return BilinearMap(dim1, dim2, out_dim, tuple(vals))


def _block_out(b: BilinearMap) -> list:
    return [
        [vector_out(b.at(i, j)) for j in range(b.dim2)] for i in range(b.dim1)
    ]


def sh_in(obj: dict, where: str = "sh") -> TwoTermShLeibniz:
    a0 = _count(obj, "dim0", where)
    a1 = _count(obj, "dim1", where)
    d = matrix_in(_field(obj, "d", where), a0, a1, f"{where}.d")
    l2_00 = _block_in(_field(obj, "l2_00", where), a0, a0, a0, f"{where}.l2_00")
    l2_01 = _block_in(_field(obj, "l2_01", where), a0, a1, a1, f"{where}.l2_01")
    l2_10 = _block_in(_field(obj, "l2_10", where), a1, a0, a1, f"{where}.l2_10")
    l3_raw = _field(obj, "l3", where)
    if not isinstance(l3_raw, list) or len(l3_raw) != a0 ** 3:
        raise InputError(f"field 'l3' in {where} must list {a0 ** 3} values")
    l3 = TrilinearMap(a0, a1, tuple(vector_in(v, f"{where}.l3") for v in l3_raw))
    return TwoTermShLeibniz(a0, a1, d, l2_00, l2_01, l2_10, l3)


def sh_out(S: TwoTermShLeibniz) -> dict:
    return {
        "dim0": S.dim0,
        "dim1": S.dim1,
        "d": matrix_out(S.d),
        "l2_00": _block_out(S.l2_00),
        "l2_01": _block_out(S.l2_01),
        "l2_10": _block_out(S.l2_10),
        "l3": [vector_out(v) for v in S.l3.values],
    }


def theta_in(obj: dict, a0: int, a1: int, where: str = "theta") -> HomotopyDerivation:
    theta0 = matrix_in(_field(obj, "theta0", where), a0, a0, f"{where}.theta0")
    theta1 = matrix_in(_field(obj, "theta1", where), a1, a1, f"{where}.theta1")
    t2_raw = _field(obj, "theta2", where)
    if not isinstance(t2_raw, list) or len(t2_raw) != a0 * a0:
        raise InputError(f"field 'theta2' in {where} must list {a0 * a0} values")
    theta2 = BilinearMap(a0, a0, a1, tuple(vector_in(v, f"{where}.theta2") for v in t2_raw))
    return HomotopyDerivation(theta0, theta1, theta2)


def theta_out(th: HomotopyDerivation) -> dict:
    return {
        "theta0": matrix_out(th.theta0),
        "theta1": matrix_out(th.theta1),
        "theta2": [vector_out(v) for v in th.theta2.values],
    }


def crossed_in(obj: dict, where: str = "crossed") -> CrossedModule:
    g = pair_in(_field(obj, "g", where), f"{where}.g")
    h = pair_in(_field(obj, "h", where), f"{where}.h")
    dt = matrix_in(_field(obj, "dt", where), h.dim, g.dim, f"{where}.dt")
    left_raw = _field(obj, "left", where)
    right_raw = _field(obj, "right", where)
    left = [[vector_in(v, f"{where}.left") for v in row] for row in left_raw]
    right = [[vector_in(v, f"{where}.right") for v in row] for row in right_raw]
    action = Representation.from_tables(h.algebra, g.dim, left, right)
    return CrossedModule(g, h, dt, action)


def crossed_out(C: CrossedModule) -> dict:
    return {
        "g": pair_out(C.g),
        "h": pair_out(C.h),
        "dt": matrix_out(C.dt),
        "left": [[vector_out(v) for v in row] for row in C.action.left],
        "right": [[vector_out(v) for v in row] for row in C.action.right],
    }
