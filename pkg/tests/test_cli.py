import json
from fractions import Fraction

from leibder import jsonio
from leibder.cli import main
from leibder.exactlin import Matrix
from leibder.leibniz import LeibnizAlgebra, LeibDerPair, LeibDerRepresentation
from leibder.cohomology import Cochain, LeibDerCochain
from leibder.extensions import CentralExtensionData, build_central_extension
from leibder.deformations import Deformation
from leibder.shleibniz import triple_to_skeletal
from conftest import lambda2_pair, zero_pair


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_algebra_pass(tmp_path, capsys):
    f = write(tmp_path, "a.json", jsonio.algebra_out(lambda2_pair().algebra))
    code, out, err = run(capsys, "check", "algebra", f)
    assert code == 0
    assert out == '{"leibniz": true}\n'


def test_check_algebra_fail(tmp_path, capsys):
    obj = jsonio.algebra_out(lambda2_pair().algebra)
    obj["bracket"][0][0] = ["1", "1"]
    f = write(tmp_path, "a.json", obj)
    code, out, err = run(capsys, "check", "algebra", f)
    assert code == 1
    assert json.loads(out)["leibniz"] is False


def test_cohomology_lambda2_byte_exact(tmp_path, capsys):
    f = write(tmp_path, "p.json", jsonio.pair_out(lambda2_pair()))
    code, out, err = run(capsys, "cohomology", f, "--degree", "1")
    assert code == 0
    assert out == '{"Z": 2, "B": 0, "H": 2}\n'


def test_cohomology_zero_pair_byte_exact(tmp_path, capsys):
    f = write(tmp_path, "p.json", jsonio.pair_out(zero_pair(1)))
    code, out, err = run(capsys, "cohomology", f, "--degree", "1")
    assert code == 0
    assert out == '{"Z": 1, "B": 0, "H": 1}\n'
    code, out, err = run(capsys, "cohomology", f, "--degree", "2")
    assert out == '{"Z": 2, "B": 0, "H": 2}\n'


def test_cohomology_representatives_are_cocycles(tmp_path, capsys):
    f = write(tmp_path, "p.json", jsonio.pair_out(lambda2_pair()))
    code, out, err = run(capsys, "cohomology", f, "--degree", "2", "--representatives")
    assert code == 0
    data = json.loads(out)
    assert len(data["representatives"]) == data["Z"]


def test_deterministic_output(tmp_path, capsys):
    f = write(tmp_path, "p.json", jsonio.pair_out(lambda2_pair()))
    outs = set()
    for _ in range(3):
        _, out, _ = run(capsys, "cohomology", f, "--degree", "2", "--representatives")
        outs.add(out)
    assert len(outs) == 1


def lambda2_as_extension():
    base = zero_pair(1)
    fiber = zero_pair(1)
    return {
        "base": jsonio.pair_out(base),
        "fiber": jsonio.pair_out(fiber),
        "psi": {"degree": 2, "values": ["1"]},
        "chi": {"degree": 1, "values": ["0"]},
    }


def test_central_build_classify_roundtrip(tmp_path, capsys):
    f = write(tmp_path, "c.json", lambda2_as_extension())
    code, out, err = run(capsys, "central", "build", f)
    assert code == 0
    ext = json.loads(out)["extension"]
    obj = lambda2_as_extension()
    obj["extension"] = ext
    f2 = write(tmp_path, "c2.json", obj)
    code, out, err = run(capsys, "central", "classify", f2)
    assert code == 0
    data = json.loads(out)
    assert data["psi"]["values"] == ["1"]
    assert data["exact"] is False


def test_central_isomorphic_self(tmp_path, capsys):
    f = write(tmp_path, "c.json", lambda2_as_extension())
    _, out, _ = run(capsys, "central", "build", f)
    ext = json.loads(out)["extension"]
    obj = lambda2_as_extension()
    obj["first"] = ext
    obj["second"] = ext
    f2 = write(tmp_path, "iso.json", obj)
    code, out, err = run(capsys, "central", "isomorphic", f2)
    assert code == 0
    assert json.loads(out)["isomorphic"] is True


def test_central_not_isomorphic(tmp_path, capsys):
    f = write(tmp_path, "c.json", lambda2_as_extension())
    _, out, _ = run(capsys, "central", "build", f)
    ext1 = json.loads(out)["extension"]
    trivial = lambda2_as_extension()
    trivial["psi"]["values"] = ["0"]
    f2 = write(tmp_path, "t.json", trivial)
    _, out, _ = run(capsys, "central", "build", f2)
    ext2 = json.loads(out)["extension"]
    obj = lambda2_as_extension()
    obj["first"] = ext1
    obj["second"] = ext2
    f3 = write(tmp_path, "iso.json", obj)
    code, out, err = run(capsys, "central", "isomorphic", f3)
    assert code == 1
    assert json.loads(out)["isomorphic"] is False


def test_extend_derivation_family(tmp_path, capsys):
    yes = {
        "base": {"dim": 1, "bracket": [[["0"]]]},
        "fiber_dim": 1,
        "psi": {"degree": 2, "values": ["1"]},
        "phi_g": [["1"]],
        "phi_a": [["2"]],
    }
    f = write(tmp_path, "y.json", yes)
    code, out, err = run(capsys, "extend-derivation", f)
    assert code == 0
    data = json.loads(out)
    assert data["extensible"] is True
    assert data["phi_h"] == [["1", "0"], ["0", "2"]]

    yes["phi_a"] = [["0"]]
    f = write(tmp_path, "n.json", yes)
    code, out, err = run(capsys, "extend-derivation", f)
    assert code == 1
    assert out == '{"extensible": false, "obstruction_class_nonzero": true}\n'


def test_abelian_build_classify(tmp_path, capsys):
    base = zero_pair(2)
    R = LeibDerRepresentation.trivial(base, 1)
    psi = Cochain.from_flat(2, 2, 1, (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
    obj = {
        "base": jsonio.pair_out(base),
        "representation": jsonio.representation_out(R),
        "cocycle": jsonio.leibder_cochain_out(
            LeibDerCochain(psi, Cochain.zero(1, 2, 1))),
    }
    f = write(tmp_path, "ab.json", obj)
    code, out, err = run(capsys, "abelian", "build", f)
    assert code == 0
    obj["extension"] = json.loads(out)["extension"]
    f2 = write(tmp_path, "ab2.json", obj)
    code, out, err = run(capsys, "abelian", "classify", f2)
    assert code == 0
    assert json.loads(out)["cocycle"]["top"]["values"] == ["1", "0", "0", "0"]


def test_deform_pipeline(tmp_path, capsys):
    base = zero_pair(2)
    mu1 = Cochain(2, 2, 2, lambda2_pair().algebra.bracket_cochain_values())
    D = Deformation.from_terms(base, [mu1], [Cochain.zero(1, 2, 2)])
    f = write(tmp_path, "d.json", jsonio.deformation_out(D))
    code, out, _ = run(capsys, "deform", "check", f)
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "deform", "infinitesimal", f)
    assert code == 0 and json.loads(out)["cocycle"] is True
    code, out, _ = run(capsys, "deform", "obstruction", f)
    assert code == 0
    code, out, _ = run(capsys, "deform", "extend", f)
    assert code == 0 and json.loads(out)["extensible"] is True
    code, out, _ = run(capsys, "deform", "trivialize", f)
    assert code == 1  # nonzero class: honest failure verdict


def test_sh_commands(tmp_path, capsys):
    P = lambda2_pair(Matrix.from_rows([[1, 0], [0, 2]]))
    R = LeibDerRepresentation.adjoint(P)
    c = LeibDerCochain(Cochain.zero(3, 2, 2), Cochain.zero(2, 2, 2))
    S, th = triple_to_skeletal(P, R, c)
    obj = jsonio.sh_out(S)
    obj["theta"] = jsonio.theta_out(th)
    f = write(tmp_path, "sh.json", obj)
    code, out, _ = run(capsys, "check", "sh", f)
    assert code == 0
    code, out, _ = run(capsys, "sh", "skeletal", f)
    assert code == 0
    assert json.loads(out)["pair"] == jsonio.pair_out(P)
    code, out, _ = run(capsys, "sh", "two-vector", f)
    assert code == 0
    assert json.loads(out)["roundtrip"] is True


def test_input_errors_exit_2(tmp_path, capsys):
    code, out, err = run(capsys, "check", "algebra", str(tmp_path / "nope.json"))
    assert code == 2
    assert "nope.json" in err

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, "check", "algebra", str(bad))
    assert code == 2
    assert "bad.json" in err

    missing = write(tmp_path, "m.json", {"dim": 2})
    code, out, err = run(capsys, "check", "algebra", missing)
    assert code == 2
    assert "bracket" in err
