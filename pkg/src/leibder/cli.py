"""Command-line driver: JSON in, JSON out.

Exit codes: 0 for success/pass, 1 for checked-failure verdicts (an axiom
fails, an extension is not extensible, structures are not isomorphic),
2 for malformed or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .errors import InputError
from .exactlin import Matrix
from .cohomology import cocycle_basis, cohomology_dim, solve_coboundary
from .deformations import (
    check_deformation,
    extend_deformation,
    infinitesimal,
    obstruction,
    trivialize,
)
from .extensions import (
    CentralExtensionData,
    AbelianExtensionData,
    build_abelian_extension,
    build_central_extension,
    classify_abelian_extension,
    cocycle_from_section,
    check_central_extension,
    is_isomorphic_extension,
    obstruction_class,
    extend_derivation_pair,
)
from .leibniz import (
    LeibDerPair,
    LeibDerRepresentation,
    check_derivation,
    check_leibder_representation,
    check_leibniz,
    check_pair,
)
from .shleibniz import (
    check_crossed,
    check_homotopy_derivation,
    check_sh,
    from_two_vector,
    skeletal_to_triple,
    strict_to_crossed,
    to_two_vector,
)
from .cohomology import Cochain, LeibDerCochain, partial


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: top-level value must be an object")
    return obj


def _emit(obj) -> None:
    print(json.dumps(obj))


def _verdict(key: str, report) -> dict:
    out = {key: report.ok}
    if not report.ok:
        out["failures"] = [list(f) for f in report.failures]
    return out


# -- subcommand handlers --------------------------------------------------


def cmd_check(args) -> int:
    obj = _load(args.file)
    if args.kind == "algebra":
        report = check_leibniz(jsonio.algebra_in(obj))
        _emit(_verdict("leibniz", report))
        return 0 if report.ok else 1
    if args.kind == "derivation":
        P = jsonio.pair_in(obj)
        report = check_derivation(P.algebra, P.phi)
        _emit(_verdict("derivation", report))
        return 0 if report.ok else 1
    if args.kind == "pair":
        report = check_pair(jsonio.pair_in(obj))
        _emit(_verdict("pair", report))
        return 0 if report.ok else 1
    if args.kind == "representation":
        P = jsonio.pair_in(obj.get("pair", {}), "pair")
        R = jsonio.representation_in(P, obj.get("representation", {}))
        report = check_leibder_representation(P, R)
        _emit(_verdict("representation", report))
        return 0 if report.ok else 1
    if args.kind == "sh":
        S = jsonio.sh_in(obj)
        report = check_sh(S)
        out = {"sh": report.ok, "violated": list(report.violated())}
        code = 0 if report.ok else 1
        if obj.get("theta") is not None and report.ok:
            th = jsonio.theta_in(obj["theta"], S.dim0, S.dim1)
            rep2 = check_homotopy_derivation(S, th)
            out["homotopy_derivation"] = rep2.ok
            out["theta_violated"] = list(rep2.violated())
            code = 0 if (report.ok and rep2.ok) else 1
        _emit(out)
        return code
    if args.kind == "crossed":
        report = check_crossed(jsonio.crossed_in(obj))
        _emit({"crossed": report.ok, "violated": list(report.violated())})
        return 0 if report.ok else 1
    raise InputError(f"unknown check kind {args.kind!r}")


def _representation_for(P: LeibDerPair, args) -> LeibDerRepresentation:
    if args.rep == "adjoint":
        return LeibDerRepresentation.adjoint(P)
    if args.rep == "trivial":
        return LeibDerRepresentation.trivial(P, args.mdim)
    return jsonio.representation_in(P, _load(args.rep))


def cmd_cohomology(args) -> int:
    P = jsonio.pair_in(_load(args.file))
    report = check_pair(P)
    if not report.ok:
        raise InputError(f"input pair is invalid: {report.first[0]}")
    R = _representation_for(P, args)
    z, b, h = cohomology_dim(P, R, args.degree)
    out = {"Z": z, "B": b, "H": h}
    if args.representatives:
        out["representatives"] = [
            jsonio.leibder_cochain_out(c) for c in cocycle_basis(P, R, args.degree)
        ]
    _emit(out)
    return 0


def _central_data(obj: dict) -> CentralExtensionData:
    base = jsonio.pair_in(obj.get("base", {}), "base")
    fiber = jsonio.pair_in(obj.get("fiber", {}), "fiber")
    psi = jsonio.cochain_in(obj.get("psi", {}), base.dim, fiber.dim, "psi")
    chi = jsonio.cochain_in(obj.get("chi", {}), base.dim, fiber.dim, "chi")
    return CentralExtensionData(base, fiber, psi, chi)


def cmd_central(args) -> int:
    obj = _load(args.file)
    if args.mode == "build":
        E = build_central_extension(_central_data(obj))
        report = check_central_extension(E)
        _emit({"extension": jsonio.diagram_out(E), "checks": report.ok})
        return 0 if report.ok else 1
    base = jsonio.pair_in(obj.get("base", {}), "base")
    fiber = jsonio.pair_in(obj.get("fiber", {}), "fiber")
    if args.mode == "classify":
        E = jsonio.diagram_in(obj.get("extension", {}), base, fiber.dim)
        psi, chi = cocycle_from_section(E)
        from .extensions import _trivial_coeffs
        R = _trivial_coeffs(base, fiber)
        c = LeibDerCochain(psi, chi)
        if not partial(base, R, c).is_zero():
            raise InputError("extracted data is not a cocycle")
        u = solve_coboundary(base, R, c)
        _emit({
            "psi": jsonio.cochain_out(psi),
            "chi": jsonio.cochain_out(chi),
            "exact": u is not None,
        })
        return 0
    if args.mode == "isomorphic":
        E1 = jsonio.diagram_in(obj.get("first", {}), base, fiber.dim, "first")
        E2 = jsonio.diagram_in(obj.get("second", {}), base, fiber.dim, "second")
        ok, eta = is_isomorphic_extension(E1, E2, fiber)
        _emit({"isomorphic": ok, "witness": jsonio.matrix_out(eta) if eta else None})
        return 0 if ok else 1
    raise InputError(f"unknown central mode {args.mode!r}")


def cmd_abelian(args) -> int:
    obj = _load(args.file)
    base = jsonio.pair_in(obj.get("base", {}), "base")
    R = jsonio.representation_in(base, obj.get("representation", {}))
    if args.mode == "build":
        c = jsonio.leibder_cochain_in(obj.get("cocycle", {}), base.dim, R.rep.mdim)
        E = build_abelian_extension(AbelianExtensionData(base, R, c))
        _emit({"extension": jsonio.diagram_out(E)})
        return 0
    if args.mode == "classify":
        E = jsonio.diagram_in(obj.get("extension", {}), base, R.rep.mdim)
        cls = classify_abelian_extension(E, R)
        _emit({
            "cocycle": jsonio.leibder_cochain_out(cls.cocycle),
            "exact": cls.is_exact,
        })
        return 0
    raise InputError(f"unknown abelian mode {args.mode!r}")


def cmd_extend_derivation(args) -> int:
    obj = _load(args.file)
    base_alg = jsonio.algebra_in(obj.get("base", {}), "base")
    d = base_alg.dim
    from .leibniz import LeibnizAlgebra
    fdim = obj.get("fiber_dim")
    if not isinstance(fdim, int) or fdim < 0:
        raise InputError("field 'fiber_dim' must be a nonnegative integer")
    base = LeibDerPair(base_alg, Matrix.zeros(d, d))
    fiber = LeibDerPair(LeibnizAlgebra.abelian(fdim), Matrix.zeros(fdim, fdim))
    psi = jsonio.cochain_in(obj.get("psi", {}), d, fdim, "psi")
    chi = Cochain.zero(1, d, fdim)
    E = build_central_extension(CentralExtensionData(base, fiber, psi, chi))
    phi_g = jsonio.matrix_in(obj.get("phi_g"), d, d, "phi_g")
    phi_a = jsonio.matrix_in(obj.get("phi_a"), fdim, fdim, "phi_a")
    ob, trivial, lam = obstruction_class(E, phi_g, phi_a)
    if not trivial:
        _emit({"extensible": False, "obstruction_class_nonzero": True})
        return 1
    phi_h = extend_derivation_pair(E, phi_g, phi_a)
    _emit({
        "extensible": True,
        "obstruction_class_nonzero": False,
        "obstruction": jsonio.cochain_out(ob),
        "phi_h": jsonio.matrix_out(phi_h),
    })
    return 0


def cmd_deform(args) -> int:
    D = jsonio.deformation_in(_load(args.file))
    if args.mode == "check":
        report = check_deformation(D)
        _emit(_verdict("valid", report))
        return 0 if report.ok else 1
    if args.mode == "infinitesimal":
        c, ok = infinitesimal(D)
        _emit({"cocycle": ok, "infinitesimal": jsonio.leibder_cochain_out(c)})
        return 0 if ok else 1
    if args.mode == "obstruction":
        ob3, ob2, ok = obstruction(D)
        _emit({
            "ob3": jsonio.cochain_out(ob3),
            "ob2": jsonio.cochain_out(ob2),
            "cocycle": ok,
        })
        return 0 if ok else 1
    if args.mode == "extend":
        ext = extend_deformation(D)
        if ext is None:
            _emit({"extensible": False})
            return 1
        _emit({"extensible": True, "deformation": jsonio.deformation_out(ext)})
        return 0
    if args.mode == "trivialize":
        done, final, steps = trivialize(D)
        _emit({"trivialized": done, "steps": len(steps)})
        return 0 if done else 1
    raise InputError(f"unknown deform mode {args.mode!r}")


def cmd_sh(args) -> int:
    obj = _load(args.file)
    S = jsonio.sh_in(obj)
    th = None
    if obj.get("theta") is not None:
        th = jsonio.theta_in(obj["theta"], S.dim0, S.dim1)
    if args.mode == "skeletal":
        if th is None:
            raise InputError("skeletal conversion needs a 'theta' block")
        pair, rep, cocycle = skeletal_to_triple(S, th)
        _emit({
            "pair": jsonio.pair_out(pair),
            "representation": jsonio.representation_out(rep),
            "cocycle": jsonio.leibder_cochain_out(cocycle),
        })
        return 0
    if args.mode == "strict":
        if th is None:
            raise InputError("strict conversion needs a 'theta' block")
        C = strict_to_crossed(S, th)
        _emit({"crossed": jsonio.crossed_out(C)})
        return 0
    if args.mode == "two-vector":
        V, DV = to_two_vector(S, th)
        S2, th2 = from_two_vector(V, DV)
        roundtrip = S2 == S and th2 == th
        out = {
            "s": jsonio.matrix_out(V.space.s),
            "t": jsonio.matrix_out(V.space.t),
            "bracket": [
                [jsonio.vector_out(V.bracket.at(i, j)) for j in range(V.space.v1)]
                for i in range(V.space.v1)
            ],
            "J": [jsonio.vector_out(v) for v in V.J.values],
            "roundtrip": roundtrip,
        }
        if DV is not None:
            out["derivation"] = {
                "D0": jsonio.matrix_out(DV.D0),
                "D1": jsonio.matrix_out(DV.D1),
                "Dmap": [jsonio.vector_out(v) for v in DV.Dmap.values],
            }
        _emit(out)
        return 0 if roundtrip else 1
    raise InputError(f"unknown sh mode {args.mode!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="leibder",
        description="Exact computations for Leibniz algebras with derivations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify axioms of a structure")
    c.add_argument("kind", choices=["algebra", "derivation", "representation", "pair", "sh", "crossed"])
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("cohomology", help="dimensions of the combined complex")
    c.add_argument("file")
    c.add_argument("--rep", default="adjoint",
                   help="'adjoint', 'trivial', or a representation JSON path")
    c.add_argument("--mdim", type=int, default=1, help="module dimension for --rep trivial")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--representatives", action="store_true")
    c.set_defaults(func=cmd_cohomology)

    c = sub.add_parser("central", help="central extensions")
    c.add_argument("mode", choices=["build", "classify", "isomorphic"])
    c.add_argument("file")
    c.set_defaults(func=cmd_central)

    c = sub.add_parser("abelian", help="abelian extensions")
    c.add_argument("mode", choices=["build", "classify"])
    c.add_argument("file")
    c.set_defaults(func=cmd_abelian)

    c = sub.add_parser("extend-derivation", help="obstruction to extending derivations")
    c.add_argument("file")
    c.set_defaults(func=cmd_extend_derivation)

    c = sub.add_parser("deform", help="formal deformations")
    c.add_argument("mode", choices=["check", "infinitesimal", "obstruction", "extend", "trivialize"])
    c.add_argument("file")
    c.set_defaults(func=cmd_deform)

    c = sub.add_parser("sh", help="two-term sh structures")
    c.add_argument("mode", choices=["skeletal", "strict", "two-vector"])
    c.add_argument("file")
    c.set_defaults(func=cmd_sh)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
