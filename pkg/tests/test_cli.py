import json

from ffr.cli import run
from ffr.ring import PolyRing, QQ, parse_poly


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_gb_command(capsys):
    code, rep = run_json(capsys, ["gb", "--vars", "x,y",
                                  "--ideal", '["x+y","x-y"]'])
    assert code == 0
    assert rep["verdict"] == "computed"
    assert sorted(rep["basis"]) == ["x", "y"]


def test_gb_accepts_ideal_object(capsys):
    code, rep = run_json(capsys, ["gb", "--vars", "x,y",
                                  "--ideal", '{"gens": ["x^2*y", "x*y^3"]}'])
    assert code == 0 and len(rep["basis"]) == 2


def test_member_command(capsys):
    code, rep = run_json(capsys, ["member", "--vars", "x,y",
                                  "--ideal", '["x","y"]', "--poly", "x^2+y"])
    assert code == 0 and rep["verdict"] == "member"
    code, rep = run_json(capsys, ["member", "--vars", "x,y",
                                  "--ideal", '["x"]', "--poly", "y"])
    assert code == 0 and rep["verdict"] == "not-member"


def test_colon_and_sat(capsys):
    code, rep = run_json(capsys, ["colon", "--vars", "x,y",
                                  "--ideal", '["x^2","y^2"]',
                                  "--by", '["x*y"]'])
    assert code == 0 and sorted(rep["gens"]) == ["x", "y"]
    code, rep = run_json(capsys, ["sat", "--vars", "x,y",
                                  "--ideal", '["x*y"]', "--poly", "y"])
    assert code == 0 and rep["gens"] == ["x"]


def test_dim_command(capsys):
    code, rep = run_json(capsys, ["dim", "--vars", "x,y,z",
                                  "--ideal", '["x*y","x*z"]'])
    assert code == 0 and rep["dimension"] == 2


def test_depth_fails_with_witness(capsys):
    code, rep = run_json(capsys, ["depth", "--vars", "x,y",
                                  "--ideal", '["x","y"]', "--atleast", "3"])
    assert code == 0
    assert rep["verdict"].startswith("fails at")
    assert rep["certificate"]["witness"]


def test_depth_holds(capsys):
    code, rep = run_json(capsys, ["depth", "--vars", "x,y",
                                  "--ideal", '["x","y"]', "--atleast", "2"])
    assert code == 0 and rep["verdict"] == "at least 2"


def test_depth_value_infinity(capsys):
    code, rep = run_json(capsys, ["depth-value", "--vars", "x",
                                  "--ideal", '["1"]'])
    assert code == 0 and rep["depth"] == "infinity"


def test_secant_with_relations(capsys):
    code, rep = run_json(capsys, [
        "secant", "--vars", "x,y,z", "--relations", '["x*(y-1)"]',
        "--seq", '["z*(y-1)","y"]'])
    assert code == 0 and rep["verdict"] == "completely-secant"


def test_wiebe_command(capsys):
    code, rep = run_json(capsys, [
        "wiebe", "--vars", "x,y", "--c", '["x^2","y^2"]', "--a", '["x","y"]',
        "--u", '[["x","0"],["0","y"]]'])
    assert code == 0 and rep["verdict"] == "holds"
    assert rep["delta"] == "x*y"


def test_certify_command(tmp_path, capsys):
    doc = {"field": "Q", "vars": ["x", "y"],
           "matrices": [[["x", "y"]], [["-y"], ["x"]]]}
    path = tmp_path / "koszul2.json"
    path.write_text(json.dumps(doc))
    code, rep = run_json(capsys, ["certify", "--complex", str(path)])
    assert code == 0 and rep["verdict"] == "exact"
    assert [c["verdict"] for c in rep["conditions"]] == ["holds", "holds"]


def test_certify_rejects_with_witness(tmp_path, capsys):
    doc = {"field": "Q", "vars": ["x", "y"],
           "matrices": [[["x", "y"]], [["0"], ["0"]]],
           "expected_ranks": [0, 1, 1]}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, rep = run_json(capsys, ["certify", "--complex", str(path)])
    assert code == 0 and rep["verdict"] == "not-exact"
    failing = [c for c in rep["conditions"] if c["verdict"] == "fails"]
    assert failing and failing[0]["witness"]


def test_cayley_command(tmp_path, capsys):
    doc = {"field": "Q", "vars": ["x", "y"],
           "matrices": [[["x", "0"], ["0", "y"]]]}
    path = tmp_path / "diag.json"
    path.write_text(json.dumps(doc))
    code, rep = run_json(capsys, ["cayley", "--complex", str(path)])
    assert code == 0 and rep["verdict"] == "factorized"
    assert rep["determinant"] == "x*y"


def test_hilbert_burch_command(tmp_path, capsys):
    doc = {"field": "Q", "vars": ["x", "y"],
           "matrix": [["y^2", "0"], ["-x", "y^2"], ["0", "-x^2"]]}
    path = tmp_path / "hb.json"
    path.write_text(json.dumps(doc))
    code, rep = run_json(capsys, ["hilbert-burch", "--matrix", str(path),
                                  "--alpha", '["x^3","x^2*y^2","y^4"]'])
    assert code == 0 and rep["verdict"] == "exact"
    assert rep["delta"] == ["x^3", "x^2*y^2", "y^4"]
    assert rep["factor"] == "1" and rep["factor_strong_gcd"]


def test_resultant_command(capsys):
    for d in ("2", "3"):
        code, rep = run_json(capsys, ["resultant", "--P", "X+2*Y",
                                      "--Q", "X^2+X*Y+Y^2", "--d", d])
        assert code == 0
        assert rep["resultant"] in ("3", "-3")


def test_taylor_command(capsys):
    code, rep = run_json(capsys, [
        "taylor", "--vars", "x,y,z",
        "--monomials", "x^2*y,x*y^3,x,y*z",
        "--check-homotopy", "--minimal"])
    assert code == 0
    assert rep["homotopy_identity"] is True
    assert rep["minimal"] is False
    assert rep["ranks"] == [1, 4, 6, 4, 1]


def test_mccoy_command(capsys):
    code, rep = run_json(capsys, ["mccoy", "--vars", "x,y",
                                  "--matrix", '[["x"],["y"]]'])
    assert code == 0 and rep["verdict"] == "injective"
    code, rep = run_json(capsys, ["mccoy", "--vars", "x", "--relations",
                                  '["x^2"]', "--matrix", '[["x"]]'])
    assert code == 0 and rep["verdict"] == "not-injective"


def test_hodge_selftest(capsys):
    code, rep = run_json(capsys, ["hodge-selftest", "--n", "4"])
    assert code == 0 and rep["verdict"] == "passed"


def test_ring_json_document(capsys):
    ring = json.dumps({"field": "Q", "vars": ["x", "y", "z"],
                       "order": "grevlex", "relations": ["x*(y-1)"]})
    code, rep = run_json(capsys, ["depth", "--ring", ring,
                                  "--ideal", '["y","z*(y-1)"]',
                                  "--atleast", "2"])
    assert code == 0 and rep["verdict"] == "at least 2"
    assert rep["inputs"]["relations"] == ["x*y - x"]


def test_exit_2_on_bad_json(capsys):
    code = run(["gb", "--vars", "x", "--ideal", "[unclosed"])
    assert code == 2


def test_exit_2_on_unknown_variable(capsys):
    code = run(["gb", "--vars", "x", "--ideal", '["z"]'])
    assert code == 2


def test_exit_2_on_bad_field(capsys):
    code = run(["gb", "--field", "Fp:6", "--vars", "x", "--ideal", '["x"]'])
    assert code == 2


def test_determinism_and_round_trip(capsys):
    argv = ["depth", "--vars", "x,y", "--ideal", '["x","y"]',
            "--atleast", "3"]
    code1, rep1 = run_json(capsys, argv)
    code2, rep2 = run_json(capsys, argv)
    rep1.pop("timing_ms")
    rep2.pop("timing_ms")
    assert rep1 == rep2
    R = PolyRing(QQ, ["x", "y"])
    ext = None
    for w in rep1["certificate"]["witness"]:
        # witnesses live in the Kronecker extension; reparse there
        from ffr.ring import RESERVED_PREFIX
        names = sorted({tok for tok in w.replace("*", " ").replace("^", " ")
                        .replace("+", " ").replace("-", " ").split()
                        if tok.startswith(RESERVED_PREFIX)})
        ext = PolyRing(QQ, ["x", "y"] + names, _allow_reserved=True)
        assert parse_poly(w, ext) is not None


def test_report_written_to_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["dim", "--vars", "x", "--ideal", '["x"]', "--out", str(out)])
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["dimension"] == 0
