import json

from starplumb.cli import main, render_svg
from starplumb.families import FamilyTag, generate
from starplumb.graph_core import StarPlumbing
from starplumb.toric import build_template, template_from_json_dict


def write_graph(path, g):
    path.write_text(json.dumps(g.to_json_dict()), encoding="utf-8")
    return str(path)


GAMMA = generate(FamilyTag("Gamma", 0, 0, 0))
ONE_LEG = StarPlumbing(-2, ((-2,),))
INDEFINITE = StarPlumbing(-2, ((-2, -2), (-2, -2), (-2, -2)))


def test_family_gen_json(capsys):
    assert main(["family", "gen", "Gamma", "0", "0", "0", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert StarPlumbing.from_json_dict(out) == GAMMA


def test_family_gen_unicode_alias(capsys):
    assert main(["family", "gen", "Γ", "1", "2", "3", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["family", "gen", "Gamma", "1", "2", "3", "--json"]) == 0
    assert capsys.readouterr().out == first


def test_family_gen_human(capsys):
    assert main(["family", "gen", "Lambda", "0", "0", "0"]) == 0
    out = capsys.readouterr().out
    assert "central -2" in out and "-6" in out


def test_family_id(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", GAMMA)
    assert main(["family", "id", p]) == 0
    assert capsys.readouterr().out.strip() == "Gamma(0,0,0)"
    p2 = write_graph(tmp_path / "h.json", StarPlumbing(-2, ((-2,), (-2,), (-2,))))
    assert main(["family", "id", p2, "--json"]) == 0
    assert json.loads(capsys.readouterr().out) is None


def test_check_human(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", GAMMA)
    assert main(["check", p]) == 0
    out = capsys.readouterr().out
    assert "negative-definite (star criterion): true" in out
    assert "negative-definite (leading minors): true" in out
    assert "fundamental cycle: 1 1 1 1" in out
    assert "rational: true" in out
    assert "L-space: true" in out


def test_check_json_indefinite(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", INDEFINITE)
    assert main(["check", p, "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["negative_definite_star"] is False
    assert rec["negative_definite_minors"] is False
    assert rec["fundamental_cycle"] is None
    assert rec["rational"] is None


def test_check_batch_sorted(tmp_path, capsys):
    write_graph(tmp_path / "b.json", ONE_LEG)
    write_graph(tmp_path / "a.json", GAMMA)
    assert main(["check", "--batch", str(tmp_path), "--json"]) == 0
    recs = json.loads(capsys.readouterr().out)
    assert [r["file"].endswith(n) for r, n in zip(recs, ("a.json", "b.json"))] == [True, True]
    assert len(recs) == 2


def test_check_usage_error(tmp_path, capsys):
    assert main(["check"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_graph_is_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"central": -2, "legs": [[-1]]}', encoding="utf-8")
    assert main(["check", str(p)]) == 2
    assert "error:" in capsys.readouterr().err
    p.write_text('{"central": -2, "legs"', encoding="utf-8")
    assert main(["check", str(p)]) == 2
    assert "invalid JSON" in capsys.readouterr().err
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()


def test_unknown_verb_is_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_seifert_roundtrip_via_files(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", StarPlumbing(-2, ((-2, -2),)))
    assert main(["seifert", "from-graph", p, "--json"]) == 0
    sd = json.loads(capsys.readouterr().out)
    assert sd == {"e0": -2, "ratios": ["2/3"]}
    sp = tmp_path / "sd.json"
    sp.write_text(json.dumps(sd), encoding="utf-8")
    assert main(["seifert", "to-graph", str(sp), "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"central": -2, "legs": [[-2, -2]]}


def test_template_build_verify_render(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", ONE_LEG)
    tpath = tmp_path / "t.json"
    assert main(["template", "build", p, "-o", str(tpath)]) == 0
    capsys.readouterr()
    t, g = template_from_json_dict(json.loads(tpath.read_text(encoding="utf-8")))
    assert g == ONE_LEG
    assert t.y0 == 1

    assert main(["verify", str(tpath)]) == 0
    out = capsys.readouterr().out
    assert "verified: all" in out and "FAIL" not in out

    svg_path = tmp_path / "t.svg"
    assert main(["render", str(tpath), "-o", str(svg_path)]) == 0
    svg = svg_path.read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    assert "(1, 1)" in svg and "(3, 2)" in svg
    assert "stroke-dasharray" in svg


def test_template_build_options(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", GAMMA)
    areas = tmp_path / "areas.json"
    areas.write_text(json.dumps({"legs": [["1/2"], ["1"], [2]], "lambda0": "3/2"}),
                     encoding="utf-8")
    assert main(["template", "build", p, "--areas", str(areas),
                 "--u-split", "4,0,0", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["u_split"] == [4, 0, 0]
    assert doc["lambda0"] == "3/2"
    t, g = template_from_json_dict(doc)
    assert [lt.lambdas[1] for lt in t.legs] == [0.5, 1, 2]

    assert main(["template", "build", p, "--lambda0", "7/3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["lambda0"] == "7/3"

    assert main(["template", "build", p, "--u-split", "1,1,1"]) == 2
    assert "u-split" in capsys.readouterr().err


def test_template_build_indefinite_exit_2(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", INDEFINITE)
    assert main(["template", "build", p]) == 2
    err = capsys.readouterr().err
    assert "Neumann-Raymond" in err


def test_verify_tampered_file_exit_1(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", ONE_LEG)
    tpath = tmp_path / "t.json"
    assert main(["template", "build", p, "-o", str(tpath)]) == 0
    capsys.readouterr()
    doc = json.loads(tpath.read_text(encoding="utf-8"))
    doc["legs"][0]["points"][2] = ["3", "3"]
    tpath.write_text(json.dumps(doc), encoding="utf-8")
    assert main(["verify", str(tpath)]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "cond2-origin-line" in out

    assert main(["render", str(tpath), "-o", str(tmp_path / "t.svg")]) == 1
    assert "refusing to render" in capsys.readouterr().err


def test_verify_json_report(tmp_path, capsys):
    p = write_graph(tmp_path / "g.json", GAMMA)
    tpath = tmp_path / "t.json"
    assert main(["template", "build", p, "-o", str(tpath)]) == 0
    capsys.readouterr()
    assert main(["verify", str(tpath), "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] is True
    assert all(set(c) == {"name", "expected", "actual", "ok"} for c in rep["checks"])


def test_render_is_deterministic():
    t = build_template(GAMMA, [[1], [1], [1]], 1)
    assert render_svg(t) == render_svg(t)
    assert render_svg(t).endswith("</svg>\n")
