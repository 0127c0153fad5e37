import json

import pytest

from weylkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_weyl_normal_orders(capsys):
    code, out, err = run(capsys, "eval", "q p")
    assert (code, err) == (0, "")
    assert out == "p q - 1\n"


def test_eval_json_document(capsys):
    code, out, _ = run(capsys, "eval", "q p", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["mode"] == "weyl"
    assert doc["value"] == [
        {"exp": [1, 1], "coeff": "1"},
        {"exp": [0, 0], "coeff": "-1"},
    ]


def test_eval_poly_mode(capsys):
    code, out, _ = run(capsys, "eval", "(X+Y)^2", "-m", "poly")
    assert code == 0
    assert out == "X^2 + 2 X Y + Y^2\n"


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "p", "q")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "bracket", "X^2", "Y", "-m", "poly")
    assert (code, out) == (0, "2 X\n")


def test_grade_lists_levels_descending(capsys):
    code, out, _ = run(capsys, "grade", "p q + q^3")
    assert code == 0
    assert out == "3: q^3\n0: p q\n"
    code, out, _ = run(capsys, "grade", "0")
    assert code == 0
    assert out == "0\n"


def test_leading(capsys):
    code, out, _ = run(capsys, "leading", "p + p^2 q^3 + p^5", "-r", "1", "-s", "1")
    assert code == 0
    assert out == "degree: 5\nleading: X^5 + X^2 Y^3\n"


def test_ntp_text_output(capsys):
    code, out, _ = run(capsys, "ntp", "p + p^2 q^3 + p^3 q + p^4 q^2 + p^5")
    assert code == 0
    assert out == (
        "vertices: (0,0) (5,0) (4,2) (2,3) (0,1)\n"
        "roof: (5,0) (4,2) (2,3)\n"
    )


def test_ntp_svg_file(capsys, tmp_path):
    target = tmp_path / "fig.svg"
    code, out, _ = run(
        capsys, "ntp", "p + p^2 q^3 + p^3 q + p^4 q^2 + p^5", "--svg", str(target)
    )
    assert code == 0
    text = target.read_text()
    assert text.startswith("<svg")
    assert 'id="ntp-hull"' in text
    assert 'id="ntp-roof"' in text
    assert 'viewBox="-1 -4 7 5"' in text
    assert text.endswith("\n")


def test_classify_omega_json(capsys):
    code, out, _ = run(capsys, "classify-omega", "X + 2 Y^3", "Y")
    assert code == 0
    doc = json.loads(out)
    assert doc["case"] == "Case3-XplusYn"
    assert doc["params"] == {"lam": "2", "n": 3}
    assert doc["witness_word"] == ""


def test_classify_omega_rejects_non_member(capsys):
    code, out, err = run(capsys, "classify-omega", "X", "2 Y")
    assert code == 2
    assert err.startswith("error:")


def test_dc_check_generates(capsys):
    code, out, _ = run(capsys, "dc-check", "p", "q")
    assert code == 0
    doc = json.loads(out)
    assert doc["outcome"] == "Generates"
    assert doc["certificate"]["criterion"] == "homogeneous"


def test_dc_check_exit_codes(capsys):
    code, out, _ = run(capsys, "dc-check", "q", "p")
    assert code == 3
    assert json.loads(out)["outcome"] == "NotAWeylPair"

    code, out, _ = run(capsys, "dc-check", "p q", "q")
    assert code == 4
    assert json.loads(out)["outcome"] == "NoPartnerPossible"


def test_dc_check_parse_error_is_not_a_pair(capsys):
    code, out, _ = run(capsys, "dc-check", "p +", "q")
    assert code == 3
    doc = json.loads(out)
    assert doc["outcome"] == "NotAWeylPair"


def test_dc_check_pre_word(capsys):
    code, out, _ = run(capsys, "dc-check", "p", "q", "--pre-word", "rot")
    assert code == 0
    doc = json.loads(out)
    assert doc["pair"] is not None


def test_aut_apply(capsys):
    code, out, _ = run(capsys, "aut", "apply", "rot,scale:2", "p + q")
    assert (code, out) == (0, "-2 p + 1/2 q\n")
    code, out, _ = run(capsys, "aut", "apply", "triu:[0,0,1]", "X", "-m", "poly")
    assert (code, out) == (0, "Y^2 + X\n")


def test_wrong_mode_symbol_reports_hint(capsys):
    code, _, err = run(capsys, "eval", "X")
    assert code == 2
    assert "poly mode" in err


def test_degree_cap_is_a_clean_error(capsys, monkeypatch):
    monkeypatch.setenv("WEYL_MAX_DEGREE", "8")
    code, _, err = run(capsys, "eval", "p^9")
    assert code == 2
    assert err.startswith("error:")
