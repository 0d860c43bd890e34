from __future__ import annotations

import json

import pytest

from chevalley_b.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roots(capsys):
    code, out, err = run(capsys, "roots", "--rank", "2")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 8
    assert data[0] == {"index": 1, "root": "e1-e2", "coords": [1, -1], "length": "long", "height": 1}
    assert "n = 10" in err


def test_gens_x_matrix(capsys):
    code, out, _ = run(capsys, "gens", "--rank", "2", "--ring", "gfp(7)", "--what", "x", "--root", "e1")
    assert code == 0
    assert len(json.loads(out)["rows"]) == 10


def test_gens_ad_needs_no_ring(capsys):
    code, out, _ = run(capsys, "gens", "--rank", "3", "--what", "ad", "--root", "e1-e2")
    assert code == 0
    assert json.loads(out)["ring"] is None


def test_gens_w_rejects_non_unit(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gens", "--rank", "2", "--ring", "zmod(3,2)", "--what", "w", "--root", "e1", "--param", "3"])
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["roots", "--rank", "1"],
    ["gens", "--rank", "2", "--ring", "nonsense", "--what", "x", "--root", "e1"],
    ["gens", "--rank", "2", "--ring", "gfp(7)", "--what", "x", "--root", "e9"],
    ["verify", "--rank", "2", "--ring", "gfp(7)", "--suite", "con"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_steinberg_passes(capsys):
    code, out, _ = run(capsys, "verify", "--rank", "2", "--ring", "zmod(3,3)", "--suite", "steinberg",
                       "--samples", "10")
    assert code == 0
    assert json.loads(out)["failed"] == 0


def test_verify_con_reports_con4(capsys):
    code, out, err = run(capsys, "verify", "--rank", "3", "--ring", "gfp(7)", "--suite", "con")
    assert code == 1
    res = json.loads(out)["results"]
    assert [k for k, v in res.items() if not v["pass"]] == ["Con4"]
    assert "FAIL  Con4" in err


def test_compose_reconstruct_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "compose", "--rank", "2", "--ring", "zmod(3,3)", "--coeffs", "random",
                       "--seed", "5")
    assert code == 0
    data = json.loads(out)
    path = tmp_path / "m.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "reconstruct", "--matrix", f"@{path}")
    assert code == 0
    assert json.loads(out2) == data["coeffs"]


def test_reconstruct_rejects_non_congruent(capsys):
    _, out, _ = run(capsys, "gens", "--rank", "2", "--ring", "zmod(3,2)", "--what", "x", "--root", "e1")
    code, out2, _ = run(capsys, "reconstruct", "--matrix", out)
    assert code == 1
    assert "error" in json.loads(out2)


def test_matrix_units(capsys):
    code, out, _ = run(capsys, "matrix-units", "--rank", "2", "--ring", "zmod(3,2)")
    assert code == 0
    data = json.loads(out)
    assert data["units"] == data["expected"] == 100 and data["complete"]
    code, out, _ = run(capsys, "matrix-units", "--rank", "2", "--ring", "zmod(3,2)", "--show", "0,1")
    assert code == 0
    assert json.loads(out)["recipe"].startswith("[seed")


def test_aut_ring_dual_scale(capsys):
    code, out, _ = run(capsys, "aut", "--rank", "2", "--ring", "dual(gfp(7))", "--kind", "ring",
                       "--sigma", "dual-scale", "--u", "3", "--target", "x:e1:1+2*eps")
    assert code == 0
    data = json.loads(out)
    assert data["before"] != data["after"]


def test_aut_inner_and_lift(capsys):
    code, _, _ = run(capsys, "aut", "--rank", "2", "--ring", "gfp(7)", "--kind", "inner", "--by", "w:e1:1",
                     "--target", "x:e2:2")
    assert code == 0
    code, _, err = run(capsys, "aut", "--rank", "2", "--ring", "gfp(7)", "--kind", "lift", "--r", "3",
                       "--verify-lift")
    assert code == 0
    assert "torus lift" in err


def test_aut_inner_requires_by(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["aut", "--rank", "2", "--ring", "gfp(7)", "--kind", "inner"])
    assert exc.value.code == 2
