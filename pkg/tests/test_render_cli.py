import json

import pytest

from partcat.cli import main
from partcat.diagrams import PartitionDiagram, half_crossing, matching_cup
from partcat.render import ascii_render, svg_render


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


# -- render -------------------------------------------------------------------


def test_ascii_render_crossing():
    art = ascii_render(half_crossing())
    lines = art.splitlines()
    assert lines[0].count("o") == 3
    assert lines[-1].count("o") == 3
    assert any("-" in ln for ln in lines[1:-1])


def test_ascii_render_colors_and_cup():
    art = ascii_render(PartitionDiagram.parse("wb|;u1-u2"))
    assert "o" in art.splitlines()[0] and "*" in art.splitlines()[0]
    art2 = ascii_render(matching_cup("b"))
    assert "*" in art2.splitlines()[-1] and "o" in art2.splitlines()[-1]


def test_svg_render_structure():
    svg = svg_render(half_crossing())
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    assert svg.count("<circle") == 6
    assert svg.count('fill="white"') == 6
    assert svg_render(half_crossing()) == svg  # deterministic


# -- CLI ----------------------------------------------------------------------


def test_cli_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--lower", "wwwwww", "--class", "P2")
    assert code == 0 and "count: 15" in out
    code, out = run(capsys, "enumerate", "--lower", "wbwbwb",
                    "--class", "calNC2")
    assert code == 0 and "count: 5" in out
    code, out = run(capsys, "enumerate", "--lower", "w")
    assert code == 0 and "count: 0" in out


def test_cli_member(capsys):
    code, out = run(capsys, "member", "--geometry", "O_Nstar", "--diagram",
                    "www|www;u1-l3,u2-l2,u3-l1", "--budget", "6")
    assert code == 0 and out.strip() == "IN"
    code, out = run(capsys, "member", "--geometry", "U_Nplus", "--diagram",
                    "www|www;u1-l3,u2-l2,u3-l1", "--budget", "6")
    assert code == 0 and out.strip() == "NOT-FOUND-WITHIN-BUDGET"


def test_cli_closure_json(capsys, tmp_path):
    out_path = tmp_path / "closure.json"
    code, _ = run(capsys, "--format", "json", "--out", str(out_path),
                  "closure", "--geometry", "U_Nplus", "--budget", "4")
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["saturated"] is True
    assert "w|w" in payload["table"]


def test_cli_freeness(capsys):
    code, out = run(capsys, "freeness", "--max-len", "4")
    assert code == 0 and out.startswith("PASS")


def test_cli_separate_tori(capsys):
    code, out = run(capsys, "separate-tori", "--N", "2")
    assert code == 0 and "trivial: True" in out and "trivial: False" in out


def test_cli_sphere_model(capsys):
    code, out = run(capsys, "sphere-model", "--N", "3", "--seeds", "1,2")
    assert code == 0 and "all checks pass: True" in out


def test_cli_model_relations(capsys):
    code, out = run(capsys, "model-relations", "--variant", "real",
                    "--N", "2", "--seeds", "1,2")
    assert code == 0 and "True" in out


def test_cli_render(capsys):
    code, out = run(capsys, "render", "www|www;u1-l3,u2-l2,u3-l1")
    assert code == 0 and "o" in out
    code, out = run(capsys, "render", "w|b;u1-l1", "--format", "svg")
    assert code == 0 and out.startswith("<svg")


def test_cli_brauer_small(capsys):
    code, out = run(capsys, "--format", "json", "brauer", "--geometry", "O_N",
                    "--N", "2", "--budget", "2", "--seeds", "1,2")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_equal"] is True


def test_cli_torus_relations(capsys):
    # at N=2 every half-liberated instance is freely trivial, so the
    # deduplicated presentation is empty; N=3 carries real relations
    code, out = run(capsys, "torus-relations", "--geometry", "U_Ntimes",
                    "--N", "3", "--budget", "6")
    assert code == 0
    assert "=" in out
    code, out = run(capsys, "torus-relations", "--geometry", "U_Ntimes",
                    "--N", "2", "--budget", "6", "--include-trivial")
    assert code == 0 and "=" in out


def test_cli_scan(capsys):
    code, out = run(capsys, "--format", "json", "scan-intermediate",
                    "--budget", "6")
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"]["OTHER"] == 0


def test_cli_json_deterministic(capsys):
    _, out1 = run(capsys, "--format", "json", "brauer", "--geometry", "U_N",
                  "--N", "2", "--budget", "2", "--seeds", "5,6")
    _, out2 = run(capsys, "--format", "json", "brauer", "--geometry", "U_N",
                  "--N", "2", "--budget", "2", "--seeds", "5,6")
    assert out1 == out2


def test_cli_csv(capsys):
    code, out = run(capsys, "--format", "csv", "brauer", "--geometry", "O_N",
                    "--N", "2", "--budget", "2", "--seeds", "1,2")
    assert code == 0
    assert out.splitlines()[0] == "upper,lower,n_diagrams,dim_span,verdict"


def test_cli_usage_error_exit_2(capsys):
    assert main(["member", "--geometry", "NOPE", "--diagram", "w|w;u1-l1"]) == 2
    assert main(["render", "garbage"]) == 2


def test_cli_overflow_exit_3(capsys):
    code = main(["member", "--geometry", "O_N", "--budget", "4",
                 "--diagram", "www|www;u1-l3,u2-l2,u3-l1"])
    assert code == 3
