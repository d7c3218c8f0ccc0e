import json
import subprocess
import sys

import pytest

from gl2aut.cli import main
from gl2aut.graphs import build_graph_ex1, export_json, parse_json
from gl2aut.reiner import LinearAutoSpec
from gl2aut.words import build_ex1cusp

import helpers


def run_ok(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    assert code == 0, out.err
    assert out.err == ""
    return out.out.rstrip("\n")


def run_err(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    assert code == 2
    assert out.err.startswith("error:")
    return out.err


def test_aut_count(capsys):
    out = run_ok(capsys, ["aut-count", "--q", "5"])
    data = json.loads(out)
    assert data == {"q": 5, "count": 4, "classes": [1, 5, 13, 17]}


def test_ell_count_documented_example(capsys):
    assert run_ok(capsys, ["ell-count", "--curve", "q=2;y2+y=x3"]) == "3"


def test_class_data(capsys):
    out = run_ok(capsys, ["class-data", "--curve", "q=2;y2+y=x3+x+1"])
    data = json.loads(out)
    assert data["q"] == 2
    assert data["points"] == 1
    assert data["lpoly"] == [1, -2, 2]
    assert (data["h"], data["cl2"], data["r"]) == (1, 1, 2)
    assert data["cl2"] + 2 * data["r"] == data["ell_eq"] + data["ell_neq"] == 5


def test_cs_order_from_r_and_q(capsys):
    assert run_ok(capsys, ["cs-order", "--r", "2", "--q", "2"]) == "8"


def test_cs_order_from_curve(capsys):
    assert run_ok(capsys, ["cs-order", "--curve", "q=2;y2+y=x3+x+1"]) == "8"
    assert run_ok(capsys, ["cs-order", "--curve", "q=2;y2+y=x3"]) == "2"


def test_cs_order_requires_an_input(capsys):
    run_err(capsys, ["cs-order", "--q", "2"])


def test_nagao_decompose_documented_example(capsys):
    out = run_ok(capsys, ["nagao-decompose", "--q", "2",
                          "--matrix", "[[1,0],[t,1]]"])
    assert out == "G:[[0,1],[1,0]];B:[[1,t],[0,1]];G:[[0,1],[1,0]]"


def test_nagao_decompose_rejects_singular(capsys):
    run_err(capsys, ["nagao-decompose", "--q", "2",
                     "--matrix", "[[1,1],[1,1]]"])


def test_reiner_image_and_inverse(capsys):
    R = helpers.ring_of(2)
    spec = LinearAutoSpec.from_pairs(R, {1: "t^2", 2: "t"}, {1: "t^2", 2: "t"})
    spec_json = json.dumps(spec.to_json())
    matrix = "[[1,t],[0,1]]"
    out = run_ok(capsys, ["reiner-image", "--q", "2", "--spec", spec_json,
                          "--matrix", matrix])
    assert out == "[[1,t^2],[0,1]]"
    back = run_ok(capsys, ["reiner-image", "--q", "2", "--spec", spec_json,
                           "--matrix", out, "--inverse"])
    assert back == matrix


def test_reiner_image_spec_from_file(tmp_path, capsys):
    R = helpers.ring_of(2)
    spec = LinearAutoSpec.from_pairs(R, {1: "t^3", 3: "t"}, {1: "t^3", 3: "t"})
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec.to_json()))
    out = run_ok(capsys, ["reiner-image", "--q", "2", "--spec", str(path),
                          "--matrix", "[[1,t],[0,1]]"])
    assert out == "[[1,t^3],[0,1]]"


def test_unipotent_fiber(capsys):
    R = helpers.ring_of(2)
    spec = LinearAutoSpec.from_pairs(R, {1: "t^2", 2: "t"}, {1: "t^2", 2: "t"})
    out = run_ok(capsys, ["unipotent-fiber", "--q", "2",
                          "--spec", json.dumps(spec.to_json()),
                          "--modulus", "t^2", "--bound", "3"])
    data = json.loads(out)
    assert data["q"] == 2 and data["modulus"] == "t^2" and data["bound"] == 3
    assert data["count"] == len(data["members"])
    from gl2aut.reiner import unipotent_fiber
    want = [p.text() for p in unipotent_fiber(spec, R.poly((0, 0, 1)), 3)]
    assert data["members"] == want


def test_cusp_count_presets(capsys):
    base = ["cusp-count", "--q", "2", "--modulus", "t"]
    assert run_ok(capsys, base + ["--subgroup", "trivial"]) == "3"
    assert run_ok(capsys, base + ["--subgroup", "borel"]) == "2"
    assert run_ok(capsys, base + ["--subgroup", "full"]) == "1"


def test_cusp_count_generators(capsys):
    out = run_ok(capsys, ["cusp-count", "--q", "2", "--modulus", "t",
                          "--gens", "[[1,1],[0,1]]"])
    assert out == "2"
    out = run_ok(capsys, ["cusp-count", "--q", "2", "--modulus", "t",
                          "--gens", "[[1,1],[0,1]];[[0,1],[1,0]]"])
    assert out == "1"


def test_cs_wreath_check(capsys):
    out = run_ok(capsys, ["cs-wreath-check", "--r", "2", "--q", "2"])
    data = json.loads(out)
    assert data["order"] == 8
    assert data["expected_order"] == 8
    assert data["ok"] is True
    assert data["permutations_full"] is True


def test_dihedral_demo(capsys):
    out = run_ok(capsys, ["dihedral-demo"])
    data = json.loads(out)
    assert data["index"] == 3
    assert data["inner_index"] == 1


def test_graph_export_json(capsys):
    out = run_ok(capsys, ["graph-export", "--graph", "ex1", "--format", "json"])
    assert parse_json(out) == build_graph_ex1()


def test_graph_export_dot_with_depth(capsys):
    out = run_ok(capsys, ["graph-export", "--graph", "ex3", "--format", "dot",
                          "--depth", "2"])
    assert out.startswith("graph quotient {")
    assert "toward (0,1)" in out


def test_aut_apply_spike_script(capsys):
    script = json.dumps([{"type": "spike", "factor": 1, "exponent": 2,
                          "q": 2}])
    out = run_ok(capsys, ["aut-apply", "--decl", "ex1cusp",
                          "--script", script, "--word", "f1:1.f2:1"])
    assert out == "f1:2·f2:1"


def test_aut_apply_partial_conjugation(capsys):
    script = json.dumps([{"type": "partial_conj", "source": 0, "target": 1,
                          "conjugator": "[[1,t],[0,1]]"}])
    out = run_ok(capsys, ["aut-apply", "--decl", "ex1cusp",
                          "--script", script, "--word", "f1:1"])
    assert out == "f0:[[1,t],[0,1]]·f1:1·f0:[[1,t],[0,1]]"


def test_aut_apply_script_from_file(tmp_path, capsys):
    path = tmp_path / "script.json"
    path.write_text(json.dumps([{"type": "swap", "left": 1, "right": 2,
                                 "exponent": 1}]))
    out = run_ok(capsys, ["aut-apply", "--decl", "ex1cusp",
                          "--script", str(path), "--word", "f1:1·f2:2"])
    assert out == "f2:1·f1:2"


def test_error_paths_exit_2(capsys):
    run_err(capsys, ["ell-count", "--curve", "q=2;y2=x3"])  # singular
    run_err(capsys, ["aut-count", "--q", "6"])  # not a prime power
    run_err(capsys, ["aut-apply", "--decl", "missing", "--script", "[]",
                     "--word", "e"])
    run_err(capsys, ["unipotent-fiber", "--q", "2", "--spec", "{not json",
                     "--modulus", "t", "--bound", "2"])
    run_err(capsys, ["cusp-count", "--q", "2", "--modulus", "1",
                     "--subgroup", "full"])


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["aut-count"])  # missing required --q
    assert exc.value.code == 2


def test_installed_entry_point_runs():
    proc = subprocess.run(["gl2aut", "ell-count", "--curve", "q=2;y2+y=x3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"


def test_module_invocation_runs():
    proc = subprocess.run([sys.executable, "-m", "gl2aut.cli", "cs-order",
                           "--r", "3", "--q", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "48"
