import io
import json
from fractions import Fraction

import pytest
from hypothesis import given

from natdiff.cli.catalog import CATALOG, VarietyFile, load_variety
from natdiff.cli.grammar import (
    ParseError,
    format_polynomial,
    parse_index_list,
    parse_polynomial,
    parse_rational,
    parse_word,
    split_top_level,
)
from natdiff.cli.main import run
from natdiff.cli.serialize import presentation_from_json, presentation_to_dict, presentation_to_json
from natdiff.dermod import natural_generators
from natdiff.jacobi import is_smooth, jacobi_data
from natdiff.relgen import Gen, Mul, apply_operator, presentation, verify_presentation

from strategies import XY, XYZ, polynomials

x, y = XY.gens


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


# -- grammar -------------------------------------------------------------


def test_parse_examples():
    assert parse_polynomial("x^3 - y^2", ["x", "y"]) == x**3 - y**2
    assert parse_polynomial("2/3*x*y + 1", ["x", "y"]) == Fraction(2, 3) * x * y + 1
    assert parse_polynomial("(x+y)^2", ["x", "y"]) == x**2 + 2 * x * y + y**2
    assert parse_polynomial("  - x  *  y ", ["x", "y"]) == -x * y
    assert parse_polynomial("x1^2 - x_2", ["x1", "x_2"]).total_degree() == 2


@pytest.mark.parametrize("text", ["2x", "x y", "x^", "x +", "(x", "z", "1/0", "", "x ^ -1", "x)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, ["x", "y"])


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + w", ["x", "y"])
    assert info.value.pos == 4


@given(polynomials())
def test_print_parse_round_trip(p):
    assert parse_polynomial(format_polynomial(p), XY) == p


@given(polynomials(XYZ))
def test_print_parse_round_trip_three_vars(p):
    assert parse_polynomial(format_polynomial(p), XYZ) == p


def test_helpers():
    assert parse_rational(" -3/4") == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_rational("x")
    assert parse_index_list("1, 2,3") == (1, 2, 3)
    assert parse_index_list("") == ()
    assert split_top_level("x*(a*b)*d[1;1,2]", "*") == ["x", "(a*b)", "d[1;1,2]"]


def test_parse_word(cusp):
    e = parse_word("d[1;1,2]*x", cusp)
    assert e.terms[0][1] == (Gen((1,), (1, 2)), Mul(cusp.x(1)))
    assert apply_operator(e, cusp.one) == cusp.project(2 * y)


# -- variety files and the catalog ----------------------------------------


def test_variety_file_validation(tmp_path):
    with pytest.raises(ValueError):
        VarietyFile.from_dict({"name": "a", "variables": ["x", "x"], "generators": ["x"]})
    with pytest.raises(ValueError):
        VarietyFile.from_dict({"name": "a", "variables": ["1x"], "generators": ["x"]})
    with pytest.raises(ValueError):
        VarietyFile.from_dict({"name": "a", "variables": ["x"], "generators": ["x"], "order": "grevlex"})
    with pytest.raises(ValueError):
        VarietyFile.from_dict({"name": "a", "variables": ["x"]})
    vf = VarietyFile.from_dict({"name": "c", "variables": ["x", "y"], "generators": ["x^3 - y^2"]})
    path = tmp_path / "c.json"
    path.write_text(json.dumps(vf.to_dict()))
    assert load_variety(str(path)) == vf
    assert load_variety("cusp.json") == CATALOG["cusp"].variety
    with pytest.raises(FileNotFoundError):
        load_variety("nowhere.json")


def test_catalog_consistency(catalog_variety):
    name, A = catalog_variety
    e = CATALOG[name].expected
    d = jacobi_data(A)
    got = {"r": d.r, "dim": A.dimension, "smooth": is_smooth(A), "generator_count": len(natural_generators(A))}
    assert got == e


def test_catalog_has_the_listed_varieties():
    assert sorted(CATALOG) == sorted(
        ["cusp", "node", "circle", "twisted_cubic", "whitney_umbrella", "coordinate_1_2", "coordinate_2_4", "double_cusp"]
    )


# -- presentation JSON ---------------------------------------------------


def test_json_round_trip(catalog_variety):
    _, A = catalog_variety
    text = presentation_to_json(presentation(A))
    doc = presentation_from_json(text)
    assert presentation_to_json(doc) == text
    assert verify_presentation(A, presentation_from_json(text, A)).ok


def test_json_schema(cusp):
    data = presentation_to_dict(presentation(cusp))
    assert data["generators"] == {"variables": ["x", "y"], "d_symbols": [{"i": [1], "j": [1, 2]}]}
    assert data["rd1"] == ["x^3 - y^2"]
    assert data["rd2"] == [
        {"i": [1], "j": [1, 2], "k": 1, "constant": "2*y"},
        {"i": [1], "j": [1, 2], "k": 2, "constant": "3*x^2"},
    ]
    assert data["rd3"][0]["terms"] == [{"sign": 1, "minor": "3*x^2", "target_j": [1, 2]}]


# -- commands ------------------------------------------------------------


def test_info():
    assert cli("info", "cusp.json") == (0, "n=2 m=1 r=1 dim=1 smooth=false generators=1\n")


def test_smooth_exit_codes():
    assert cli("smooth", "circle.json")[0] == 0
    assert cli("smooth", "cusp")[0] == 1


def test_verify():
    code, out = cli("verify", "cusp.json")
    assert code == 0 and out.strip().endswith("all 9 property suites passed")
    code, out = cli("verify", "cusp", "--suite", "relations")
    assert code == 0 and "all 1 property suite passed" in out


def test_other_commands():
    code, out = cli("rank", "twisted_cubic")
    assert code == 0 and "J_r: (1,2) (1,3) (2,3)" in out
    code, out = cli("ideals", "cusp", "--k", "1")
    assert out == "a_1: minors [3*x^2, -2*y] gb [x^2, y]\n"
    assert cli("ideals", "cusp", "--k", "2")[0] == 3
    code, out = cli("derivations", "cusp")
    assert out == "d[1;1,2] = (2*y)*d/dx + (3*x^2)*d/dy\n"
    code, out = cli("relations", "cusp")
    assert "RD2: d[1;1,2]*x = x*d[1;1,2] + 2*y" in out
    code, out = cli("presentation", "cusp", "--json")
    assert json.loads(out)["rd1"] == ["x^3 - y^2"]
    code, out = cli("presentation", "coordinate_1_2")
    assert out.startswith("generators: x1 x2 d[1;1,2]")
    assert cli("apply", "cusp", "--op", "d[1;1,2]*x", "--to", "1") == (0, "2*y\n")
    assert cli("member", "cusp", "--derivation", "2*x, 3*y") == (0, "derivation=true natural=false\n")
    assert cli("member", "cusp", "--derivation", "2*y,3*x^2") == (0, "derivation=true natural=true\n")
    assert cli("member", "cusp", "--derivation", "1,0") == (0, "derivation=false natural=false\n")
    assert cli("point", "cusp", "--at", "0,0") == (0, "on_variety=true singular=true tangent_dim=2\n")
    assert cli("point", "circle", "--at", "3/5,-4/5") == (0, "on_variety=true singular=false tangent_dim=1\n")
    assert cli("point", "cusp", "--at", "1,2") == (0, "on_variety=false\n")
    code, out = cli("catalog")
    assert code == 0 and len(out.splitlines()) == len(CATALOG)


def test_error_exit_codes(tmp_path):
    assert cli("info", "missing.json")[0] == 2
    assert cli("apply", "cusp", "--op", "d[1;1,2]", "--to", "2x")[0] == 2
    assert cli("point", "cusp", "--at", "1")[0] == 2
    assert cli("member", "cusp", "--derivation", "x")[0] == 2
    assert cli("bogus")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli("info", str(bad))[0] == 2
    for gens in (["x", "y"], ["x*y"], ["x", "1 - x"]):
        f = tmp_path / "v.json"
        f.write_text(json.dumps({"name": "v", "variables": ["x", "y"], "generators": gens}))
        assert cli("info", str(f))[0] == 3


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "natdiff", "info", "circle"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "n=2 m=1 r=1 dim=1 smooth=true generators=1\n"
