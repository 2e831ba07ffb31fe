"""Exit codes, JSON schemas, and determinism of the command line."""

import json
import pathlib
import subprocess

import jsonschema

from circmix.cli import main
from circmix.graphs import circular_clique, read_graph

SCHEMAS = pathlib.Path(__file__).resolve().parent.parent / "schemas"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv)
    return code, json.loads(out)


def check(name, payload):
    schema = json.loads((SCHEMAS / f"{name}.json").read_text())
    jsonschema.validate(payload, schema)


def test_exit_codes(capsys):
    ok, _, _ = run_cli(capsys, "mixing", "--graph", "clique:3",
                       "--target", "circ:9/2")
    assert ok == 0
    bad, _, err = run_cli(capsys, "mixing", "--graph", "clique:zero",
                          "--target", "circ:9/2")
    assert bad == 1 and "error:" in err
    capped, _, err = run_cli(capsys, "mixing", "--graph", "clique:3",
                             "--target", "circ:9/2", "--cap", "3")
    assert capped == 2 and "cap exceeded" in err
    miss, _, err = run_cli(capsys, "mixing", "--graph", "clique:3",
                           "--target", "circ:9/2", "--expect", "NotMixing")
    assert miss == 3 and "expected NotMixing, got Mixing" in err


def test_mixing_report_schema_and_values(capsys):
    code, payload = run_json(capsys, "mixing", "--graph", "circ:5/2",
                             "--target", "clique:3")
    assert code == 0
    check("mixing", payload)
    assert payload["verdict"] == "NotMixing"
    assert payload["hom_count"] == 30
    assert payload["class_count"] == 2
    assert payload["witnesses"] == ["0,0,1,1,2", "0,0,2,1,1"]


def test_components_schema(capsys):
    code, payload = run_json(capsys, "components", "--graph", "clique:3",
                             "--target", "circ:7/2", "--kind", "colour")
    assert code == 0
    check("components", payload)
    assert payload["classes"][0]["size"] == 21


def test_hom_and_frozen_schema(capsys):
    code, payload = run_json(capsys, "hom", "--graph", "clique:3",
                             "--target", "circ:7/2", "--pin", "0=1")
    assert code == 0
    check("hom", payload)
    assert payload == {"exists": True, "hom": "1,3,5"}

    code, payload = run_json(capsys, "frozen", "--graph", "gadget:g62x",
                             "--target", "gadget:g62x", "--colouring",
                             "0,1,2,3,4,5,6")
    assert code == 0
    check("frozen", payload)


def test_lower_parent_schema(capsys):
    code, payload = run_json(capsys, "lower-parent", "19", "7")
    assert code == 0
    check("lower_parent", payload)
    assert payload == {"k'": 8, "q'": 3}


def test_structure_ops_schema(capsys):
    for op in ("col", "omega", "stiff", "core", "dismantlable", "rigid",
               "self-mixing"):
        code, payload = run_json(capsys, "structure", "--graph", "circ:6/2",
                                 "--op", op)
        assert code == 0, op
        check("structure", payload)
    code, payload = run_json(capsys, "structure", "--graph", "circ:6/2",
                             "--op", "core")
    assert payload["vertices"] == [0, 2, 4]
    code, _, _ = run_cli(capsys, "structure", "--graph", "clique:1",
                         "--op", "rigid", "--expect", "True")
    assert code == 0


def test_sigma_schema(capsys):
    code, payload = run_json(capsys, "sigma", "--graph", "clique:3",
                             "--cycle", "0,1,2",
                             "--colouring", "0,2,4", "--frac", "7/2")
    assert code == 0
    check("sigma", payload)
    assert payload["sigma"] == 7 and payload["constricting"] is True


def test_certify_schema(capsys):
    code, payload = run_json(capsys, "certify-nonmixing", "--graph", "clique:3",
                             "--frac", "7/2", "--expect", "Certified")
    assert code == 0
    check("certify", payload)
    assert payload["certified"] is True
    assert payload["sigma"] == 7 and payload["sigma_reflection"] == 14
    code, _, _ = run_cli(capsys, "certify-nonmixing", "--graph", "circ:8/2",
                         "--frac", "7/2")
    assert code == 1  # bipartite input is a domain error


def test_extend_schema(capsys):
    args = ["extend", "--graph", "gadget:g62x", "--target", "clique:4"]
    pins_bad = sum((["--pin", f"{v}={c}"]
                    for v, c in enumerate((0, 1, 1, 2, 2, 3))), [])
    code, payload = run_json(capsys, *args, *pins_bad)
    assert code == 0
    check("extend", payload)
    assert payload["status"] == "NoExtension"
    assert payload["certificate"] == "exhausted backtracking over all completions"

    pins_ok = sum((["--pin", f"{v}={c}"]
                   for v, c in enumerate((0, 0, 2, 1, 1, 3))), [])
    code, payload = run_json(capsys, *args, *pins_ok, "--expect", "Extended")
    assert code == 0
    check("extend", payload)
    assert payload["extension"] == "0,0,2,1,1,3,2"


def test_scan_schema_and_rows(capsys):
    code, payload = run_json(capsys, "scan", "--graph", "clique:3",
                             "--fracs", "2/1,3/1,7/2,4/1,9/2")
    assert code == 0
    check("scan", payload)
    verdicts = [r["verdict"] for r in payload["rows"]]
    assert verdicts == ["NoColourings", "NotMixing", "NotMixing",
                        "Mixing", "Mixing"]
    assert payload["rows"][2]["witnesses"] == ["0,2,4", "0,4,2"]
    assert len(payload["bounds"]) == 10
    assert {"quantity": "m_c", "relation": ">=", "value": "4",
            "source": "non-bipartite clique lower bound",
            "certified": "theorem"} in payload["bounds"]


def test_fixtures_schema(capsys):
    code, payload = run_json(capsys, "fixtures")
    assert code == 0
    check("fixtures", payload)
    assert {"name": "g62x", "n": 7} in payload["fixtures"]


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "g.graph"
    code, _, _ = run_cli(capsys, "gen", "circular-clique", "6", "2",
                         "-o", str(out))
    assert code == 0
    assert read_graph(out) == circular_clique(6, 2)
    code, text, _ = run_cli(capsys, "gen", "cycle", "4", "--reflexive")
    assert code == 0
    assert "p 4" in text


def test_byte_identical_output(capsys):
    base = ["scan", "--graph", "clique:3", "--fracs", "3/1,7/2,4/1"]
    outs = set()
    for extra in ([], [], ["--threads", "4"], ["--threads", "1"]):
        code, out, _ = run_cli(capsys, *base, *extra)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_text_output_mode(capsys):
    code, out, _ = run_cli(capsys, "mixing", "--graph", "clique:3",
                           "--target", "circ:7/2", "--output", "text")
    assert code == 0
    assert out == "NotMixing (42 homs, 2 classes)\n"


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("CIRCMIX_CAP", "3")
    code, _, err = run_cli(capsys, "mixing", "--graph", "clique:3",
                           "--target", "circ:9/2")
    assert code == 2 and "cap exceeded" in err
    # the flag wins over the environment
    code, _, _ = run_cli(capsys, "mixing", "--graph", "clique:3",
                         "--target", "circ:9/2", "--cap", "100000")
    assert code == 0


def test_console_script_entry_point():
    proc = subprocess.run(["circmix", "fixtures"], capture_output=True,
                          text=True)
    assert proc.returncode == 0
    assert "g62x" in proc.stdout
